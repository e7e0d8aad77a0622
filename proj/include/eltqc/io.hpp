// Copyright 2026 The eltqc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "eltqc/circuit.hpp"
#include "eltqc/dilation.hpp"
#include "eltqc/elt.hpp"
#include "eltqc/series.hpp"
#include "eltqc/stateprep.hpp"
#include "eltqc/synthesis.hpp"
#include "eltqc/types.hpp"
#include "eltqc/weights.hpp"

namespace eltqc {

using Json = nlohmann::json;

// Shortest decimal string that round-trips the value (<= 17 significant
// digits, locale independent).
std::string format_double(double v);

// Matrix schema: {"rows": r, "cols": c, "re": [row-major], "im": [row-major]}.
// "im" may be omitted on input for real matrices.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);

// Ensemble schema: {"weights": [...], "vectors": [{"re", "im"}, ...]};
// the padded dimension is the vector length, the system dimension half it.
Json ensemble_to_json(const VectorEnsemble& e);
VectorEnsemble ensemble_from_json(const Json& j);

// Circuit schema: {"width": w, "gates": [{"name", "qubits", "params"}, ...]};
// U4 gates carry an extra "matrix" field.
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

// Counts are keyed by bitstring with qubit (width-1) first and qubit 0 last.
Json shot_result_to_json(const ShotResult& r, int width);

// Schedule schema: {"times": [...], "weights": [[...], ...]}.
Json schedule_to_json(const WeightSchedule& s);
WeightSchedule schedule_from_json(const Json& j);

Json dilated_to_json(const DilatedUnitary& d);
Json synthesis_report_to_json(const SynthesisReport& r);
Json fit_report_to_json(const FitReport& r);

// CSV with header gamma_t,rho_00,rho_11,source.
std::string series_to_csv(const PopulationSeries& s);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);
// Parse failures report the line number inside the file.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

// Experiment manifest. JSON sections: grid {t_max, points}, family {size,
// kappa_min, kappa_max, mode}, backend {shots, threads}, regime {name,
// lambda, delta, gamma, rho11_0} (or a bare regime-name string), seed,
// output_dir, reg. All sections are optional; unknown keys are rejected.
struct Config {
  double t_max = 10.0;
  int grid_points = 101;
  int family_size = 25;
  double kappa_min = 1e-2;
  double kappa_max = 10.0;
  TrajectoryMode family_mode = TrajectoryMode::RateScaled;
  long shots = 8192;
  int threads = 1;
  std::string regime = "strong";
  double lambda = 0.2;             // units of gamma
  double delta = 0.0;              // units of gamma
  double gamma_physical = 1.52e9;  // 1/s, labeling only; dynamics use gamma*t
  double rho11_0 = 1.0;
  std::uint64_t seed = 7;
  std::string output_dir;  // empty means not set
  double reg = 1e-8;
};

Config config_from_json(const Json& j);
// Empty path yields the defaults.
Config load_config(const std::string& path);

}  // namespace eltqc
