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

#include "eltqc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "eltqc/error.hpp"

namespace eltqc {
namespace {

const Json& require_key(const Json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) {
    fail(ErrorKind::BadConfig, std::string(what) + ": missing key \"" + key + "\"");
  }
  return *it;
}

double as_double(const Json& j, const std::string& what) {
  if (!j.is_number()) {
    fail(ErrorKind::BadConfig, what + " must be a number");
  }
  return j.get<double>();
}

long as_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) {
    fail(ErrorKind::BadConfig, what + " must be an integer");
  }
  return j.get<long>();
}

std::uint64_t as_seed(const Json& j, const std::string& what) {
  if (!(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0))) {
    fail(ErrorKind::BadConfig, what + " must be a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::vector<double> as_double_array(const Json& j, const std::string& what) {
  if (!j.is_array()) {
    fail(ErrorKind::BadConfig, what + " must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& v : j) out.push_back(as_double(v, what + " entry"));
  return out;
}

Json doubles_to_json(const std::vector<double>& v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const char* what) {
  if (!j.is_object()) {
    fail(ErrorKind::BadConfig, std::string(what) + " must be a JSON object");
  }
  for (const auto& item : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return item.key() == k;
        }) == allowed.end()) {
      fail(ErrorKind::BadConfig,
           std::string(what) + ": unknown key \"" + item.key() + "\"");
    }
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  reject_unknown_keys(j, {"rows", "cols", "re", "im"}, "matrix");
  const long rows = as_integer(require_key(j, "rows", "matrix"), "matrix rows");
  const long cols = as_integer(require_key(j, "cols", "matrix"), "matrix cols");
  if (rows < 1 || cols < 1 || rows > 64 || cols > 64) {
    fail(ErrorKind::BadConfig, "matrix dimensions out of range");
  }
  const std::vector<double> re =
      as_double_array(require_key(j, "re", "matrix"), "matrix re");
  std::vector<double> im(static_cast<std::size_t>(rows * cols), 0.0);
  if (j.contains("im")) {
    im = as_double_array(j.at("im"), "matrix im");
  }
  if (re.size() != static_cast<std::size_t>(rows * cols) || im.size() != re.size()) {
    fail(ErrorKind::BadConfig, "matrix entry arrays do not match rows*cols");
  }
  ComplexMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) {
      const std::size_t k = static_cast<std::size_t>(r * cols + c);
      m(r, c) = Complex(re[k], im[k]);
    }
  }
  return m;
}

Json vector_to_json(const ComplexVector& v) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", re}, {"im", im}};
}

ComplexVector vector_from_json(const Json& j) {
  reject_unknown_keys(j, {"re", "im"}, "vector");
  const std::vector<double> re = as_double_array(require_key(j, "re", "vector"), "vector re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) {
    im = as_double_array(j.at("im"), "vector im");
  }
  if (im.size() != re.size()) {
    fail(ErrorKind::BadConfig, "vector re/im length mismatch");
  }
  ComplexVector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
  return v;
}

Json ensemble_to_json(const VectorEnsemble& e) {
  Json vectors = Json::array();
  for (const ComplexVector& v : e.vectors) vectors.push_back(vector_to_json(v));
  return Json{{"weights", doubles_to_json(e.weights)}, {"vectors", vectors}};
}

VectorEnsemble ensemble_from_json(const Json& j) {
  reject_unknown_keys(j, {"weights", "vectors"}, "ensemble");
  VectorEnsemble e;
  e.weights = as_double_array(require_key(j, "weights", "ensemble"), "ensemble weights");
  const Json& vectors = require_key(j, "vectors", "ensemble");
  if (!vectors.is_array() || vectors.empty()) {
    fail(ErrorKind::BadConfig, "ensemble vectors must be a nonempty array");
  }
  for (const Json& vj : vectors) e.vectors.push_back(vector_from_json(vj));
  if (e.weights.size() != e.vectors.size()) {
    fail(ErrorKind::BadConfig, "ensemble weights do not match its vectors");
  }
  const Eigen::Index padded = e.vectors.front().size();
  if (padded < 2 || padded % 2 != 0) {
    fail(ErrorKind::BadConfig, "ensemble vectors must have even dimension");
  }
  for (const ComplexVector& v : e.vectors) {
    if (v.size() != padded) {
      fail(ErrorKind::BadConfig, "ensemble vectors must share one dimension");
    }
  }
  e.padded_dim = static_cast<int>(padded);
  e.system_dim = static_cast<int>(padded / 2);
  return e;
}

Json circuit_to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const Gate& g : c.gates) {
    Json gate{{"name", to_string(g.kind)}, {"qubits", g.qubits}};
    if (g.kind == GateKind::RY || g.kind == GateKind::RZ) {
      gate["params"] = Json::array({g.angle});
    } else {
      gate["params"] = Json::array();
    }
    if (g.kind == GateKind::U4) {
      gate["matrix"] = matrix_to_json(g.matrix);
    }
    gates.push_back(std::move(gate));
  }
  return Json{{"width", c.width}, {"gates", gates}};
}

Circuit circuit_from_json(const Json& j) {
  reject_unknown_keys(j, {"width", "gates"}, "circuit");
  Circuit c;
  c.width = static_cast<int>(as_integer(require_key(j, "width", "circuit"), "circuit width"));
  const Json& gates = require_key(j, "gates", "circuit");
  if (!gates.is_array()) {
    fail(ErrorKind::BadConfig, "circuit gates must be an array");
  }
  for (const Json& gj : gates) {
    reject_unknown_keys(gj, {"name", "qubits", "params", "matrix"}, "gate");
    std::string name = require_key(gj, "name", "gate").get<std::string>();
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char ch) { return std::toupper(ch); });
    const Json& qubits = require_key(gj, "qubits", "gate");
    if (!qubits.is_array()) {
      fail(ErrorKind::BadConfig, "gate qubits must be an array");
    }
    std::vector<int> q;
    for (const Json& qi : qubits) q.push_back(static_cast<int>(as_integer(qi, "gate qubit")));
    std::vector<double> params;
    if (gj.contains("params")) params = as_double_array(gj.at("params"), "gate params");
    const auto need = [&](std::size_t nq, std::size_t np) {
      if (q.size() != nq || params.size() != np) {
        fail(ErrorKind::BadConfig, "gate \"" + name + "\" has wrong qubit or param count");
      }
    };
    if (name == "X") {
      need(1, 0);
      c.gates.push_back(Gate::x(q[0]));
    } else if (name == "Z") {
      need(1, 0);
      c.gates.push_back(Gate::z(q[0]));
    } else if (name == "H") {
      need(1, 0);
      c.gates.push_back(Gate::h(q[0]));
    } else if (name == "RY") {
      need(1, 1);
      c.gates.push_back(Gate::ry(q[0], params[0]));
    } else if (name == "RZ") {
      need(1, 1);
      c.gates.push_back(Gate::rz(q[0], params[0]));
    } else if (name == "CNOT") {
      need(2, 0);
      c.gates.push_back(Gate::cnot(q[0], q[1]));
    } else if (name == "U4") {
      need(2, 0);
      c.gates.push_back(Gate::u4(q[0], q[1], matrix_from_json(require_key(gj, "matrix", "gate"))));
    } else {
      fail(ErrorKind::BadConfig, "unknown gate name \"" + name + "\"");
    }
  }
  return c;
}

Json shot_result_to_json(const ShotResult& r, int width) {
  Json counts = Json::object();
  for (const auto& [state, count] : r.counts) {
    std::string key;
    for (int q = width - 1; q >= 0; --q) {
      key.push_back(((state >> q) & 1) ? '1' : '0');
    }
    counts[key] = count;
  }
  return Json{{"counts", counts}, {"shots", r.shots}, {"seed", r.seed}};
}

Json schedule_to_json(const WeightSchedule& s) {
  Json weights = Json::array();
  for (const std::vector<double>& slice : s.weights) weights.push_back(doubles_to_json(slice));
  return Json{{"times", doubles_to_json(s.times)}, {"weights", weights}};
}

WeightSchedule schedule_from_json(const Json& j) {
  reject_unknown_keys(j, {"times", "weights"}, "weight schedule");
  WeightSchedule s;
  s.times = as_double_array(require_key(j, "times", "weight schedule"), "schedule times");
  const Json& weights = require_key(j, "weights", "weight schedule");
  if (!weights.is_array()) {
    fail(ErrorKind::BadConfig, "schedule weights must be an array of arrays");
  }
  for (const Json& slice : weights) {
    s.weights.push_back(as_double_array(slice, "schedule weight slice"));
  }
  return s;
}

Json dilated_to_json(const DilatedUnitary& d) {
  return Json{{"source_index", d.source_index},
              {"system_dim", d.system_dim},
              {"matrix", matrix_to_json(d.matrix)}};
}

Json synthesis_report_to_json(const SynthesisReport& r) {
  return Json{{"fidelity", r.fidelity},
              {"cnot_count", r.cnot_count},
              {"global_phase", r.global_phase},
              {"circuit", circuit_to_json(r.circuit)}};
}

Json fit_report_to_json(const FitReport& r) {
  Json outside = Json::array();
  for (int flag : r.outside_hull) outside.push_back(flag != 0);
  return Json{{"times", doubles_to_json(r.times)},
              {"residuals", doubles_to_json(r.residuals)},
              {"hull_min", doubles_to_json(r.hull_min)},
              {"hull_max", doubles_to_json(r.hull_max)},
              {"outside_hull", outside}};
}

std::string series_to_csv(const PopulationSeries& s) {
  if (s.ground.size() != s.times.size() || s.excited.size() != s.times.size()) {
    fail(ErrorKind::GridMismatch, "population series columns have unequal length");
  }
  std::string out = "gamma_t,rho_00,rho_11,source\n";
  const std::string label = s.source.label();
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    out += format_double(s.times[i]);
    out.push_back(',');
    out += format_double(s.ground[i]);
    out.push_back(',');
    out += format_double(s.excited[i]);
    out.push_back(',');
    out += label;
    out.push_back('\n');
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorKind::IOFailure, "cannot open for reading: " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    fail(ErrorKind::IOFailure, "read failed: " + path.string());
  }
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      fail(ErrorKind::IOFailure, "cannot create directory: " + path.parent_path().string());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    fail(ErrorKind::IOFailure, "cannot open for writing: " + path.string());
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out.good()) {
    fail(ErrorKind::IOFailure, "write failed: " + path.string());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min(e.byte, text.size());
    const long line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    fail(ErrorKind::BadConfig,
         path.string() + ":" + std::to_string(line) + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

Config config_from_json(const Json& j) {
  reject_unknown_keys(
      j, {"grid", "family", "backend", "regime", "seed", "output_dir", "reg"}, "config");
  Config cfg;
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    reject_unknown_keys(g, {"t_max", "points"}, "config.grid");
    if (g.contains("t_max")) cfg.t_max = as_double(g.at("t_max"), "grid.t_max");
    if (g.contains("points")) cfg.grid_points = static_cast<int>(as_integer(g.at("points"), "grid.points"));
    if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max)) {
      fail(ErrorKind::BadConfig, "grid.t_max must be positive");
    }
    if (cfg.grid_points < 2 || cfg.grid_points > 100000) {
      fail(ErrorKind::BadConfig, "grid.points must be in [2, 100000]");
    }
  }
  if (j.contains("family")) {
    const Json& f = j.at("family");
    reject_unknown_keys(f, {"size", "kappa_min", "kappa_max", "mode"}, "config.family");
    if (f.contains("size")) cfg.family_size = static_cast<int>(as_integer(f.at("size"), "family.size"));
    if (f.contains("kappa_min")) cfg.kappa_min = as_double(f.at("kappa_min"), "family.kappa_min");
    if (f.contains("kappa_max")) cfg.kappa_max = as_double(f.at("kappa_max"), "family.kappa_max");
    if (f.contains("mode")) {
      const std::string mode = f.at("mode").get<std::string>();
      if (mode == "rate_scaled") {
        cfg.family_mode = TrajectoryMode::RateScaled;
      } else if (mode == "lag_shifted") {
        cfg.family_mode = TrajectoryMode::LagShifted;
      } else {
        fail(ErrorKind::BadConfig, "family.mode must be rate_scaled or lag_shifted");
      }
    }
    if (cfg.family_size < 2 || cfg.family_size > 10000) {
      fail(ErrorKind::BadConfig, "family.size must be in [2, 10000]");
    }
    if (!(cfg.kappa_min > 0.0) || !(cfg.kappa_max >= cfg.kappa_min)) {
      fail(ErrorKind::BadConfig, "family needs 0 < kappa_min <= kappa_max");
    }
  }
  if (j.contains("backend")) {
    const Json& b = j.at("backend");
    reject_unknown_keys(b, {"shots", "threads"}, "config.backend");
    if (b.contains("shots")) cfg.shots = as_integer(b.at("shots"), "backend.shots");
    if (b.contains("threads")) cfg.threads = static_cast<int>(as_integer(b.at("threads"), "backend.threads"));
    if (cfg.shots < 0) {
      fail(ErrorKind::BadConfig, "backend.shots must be >= 0");
    }
    if (cfg.threads < 1 || cfg.threads > 256) {
      fail(ErrorKind::BadConfig, "backend.threads must be in [1, 256]");
    }
  }
  if (j.contains("regime")) {
    const Json& r = j.at("regime");
    if (r.is_string()) {
      cfg.regime = r.get<std::string>();
    } else {
      reject_unknown_keys(r, {"name", "lambda", "delta", "gamma", "rho11_0"}, "config.regime");
      if (r.contains("name")) cfg.regime = r.at("name").get<std::string>();
      if (r.contains("lambda")) cfg.lambda = as_double(r.at("lambda"), "regime.lambda");
      if (r.contains("delta")) cfg.delta = as_double(r.at("delta"), "regime.delta");
      if (r.contains("gamma")) cfg.gamma_physical = as_double(r.at("gamma"), "regime.gamma");
      if (r.contains("rho11_0")) cfg.rho11_0 = as_double(r.at("rho11_0"), "regime.rho11_0");
    }
    if (cfg.regime != "strong" && cfg.regime != "detuned" && cfg.regime != "custom") {
      fail(ErrorKind::BadConfig, "regime must be strong, detuned, or custom");
    }
    if (!(cfg.lambda > 0.0)) {
      fail(ErrorKind::BadConfig, "regime.lambda must be positive");
    }
    if (!(cfg.gamma_physical > 0.0)) {
      fail(ErrorKind::BadConfig, "regime.gamma must be positive");
    }
    if (!(cfg.rho11_0 >= 0.0 && cfg.rho11_0 <= 1.0)) {
      fail(ErrorKind::BadConfig, "regime.rho11_0 must lie in [0, 1]");
    }
  }
  if (j.contains("seed")) cfg.seed = as_seed(j.at("seed"), "seed");
  if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
  if (j.contains("reg")) {
    cfg.reg = as_double(j.at("reg"), "reg");
    if (!(cfg.reg >= 0.0)) {
      fail(ErrorKind::BadConfig, "reg must be nonnegative");
    }
  }
  return cfg;
}

Config load_config(const std::string& path) {
  if (path.empty()) return Config{};
  return config_from_json(read_json_file(path));
}

}  // namespace eltqc
