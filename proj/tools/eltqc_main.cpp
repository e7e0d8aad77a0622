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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eltqc/channels.hpp"
#include "eltqc/dilation.hpp"
#include "eltqc/elt.hpp"
#include "eltqc/error.hpp"
#include "eltqc/io.hpp"
#include "eltqc/jcref.hpp"
#include "eltqc/linalg.hpp"
#include "eltqc/parallel.hpp"
#include "eltqc/stateprep.hpp"
#include "eltqc/synthesis.hpp"
#include "eltqc/weights.hpp"

namespace {

using namespace eltqc;
namespace fs = std::filesystem;

// Shared flags; values present on the command line override the config file.
struct SharedFlags {
  CLI::App* sub = nullptr;
  std::string config_path;
  std::string out_dir;
  std::string regime;
  std::uint64_t seed = 0;
  long shots = 0;
  int threads = 1;

  void attach(CLI::App* s, bool with_regime) {
    sub = s;
    s->add_option("--config", config_path, "JSON config file");
    s->add_option("--seed", seed, "base RNG seed");
    s->add_option("--shots", shots, "shots per circuit (0 disables the shot series)");
    s->add_option("--threads", threads, "worker threads");
    s->add_option("--out", out_dir, "output directory");
    if (with_regime) {
      s->add_option("--regime", regime, "strong | detuned | custom");
    }
  }

  Config resolve() const {
    Config cfg = load_config(config_path);
    if (sub->count("--seed") > 0) cfg.seed = seed;
    if (sub->count("--shots") > 0) cfg.shots = shots;
    if (sub->count("--threads") > 0) cfg.threads = threads;
    if (sub->count("--out") > 0) cfg.output_dir = out_dir;
    if (sub->get_option_no_throw("--regime") != nullptr && sub->count("--regime") > 0) {
      cfg.regime = regime;
    }
    if (cfg.shots < 0) fail(ErrorKind::BadConfig, "--shots must be >= 0");
    if (cfg.threads < 1 || cfg.threads > 256) {
      fail(ErrorKind::BadConfig, "--threads must be in [1, 256]");
    }
    if (cfg.regime != "strong" && cfg.regime != "detuned" && cfg.regime != "custom") {
      fail(ErrorKind::BadConfig, "--regime must be strong, detuned, or custom");
    }
    return cfg;
  }
};

// Precedence: --out flag (already folded into cfg) > config file > ELTQC_OUT
// environment variable > current directory.
fs::path prepare_out_dir(const Config& cfg) {
  fs::path dir;
  if (!cfg.output_dir.empty()) {
    dir = cfg.output_dir;
  } else if (const char* env = std::getenv("ELTQC_OUT"); env != nullptr && *env != '\0') {
    dir = env;
  } else {
    dir = ".";
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    fail(ErrorKind::IOFailure, "cannot create output directory: " + dir.string());
  }
  return dir;
}

JCParams regime_params(const Config& cfg) {
  if (cfg.regime == "strong") return {1.0, 0.2, 0.0};
  if (cfg.regime == "detuned") return {1.0, 0.3, 2.4};
  return {1.0, cfg.lambda, cfg.delta};
}

TrajectoryFamily build_family(const Config& cfg) {
  if (cfg.family_mode == TrajectoryMode::RateScaled) {
    return default_rate_family(cfg.family_size, cfg.kappa_min, cfg.kappa_max);
  }
  return default_lag_family(cfg.family_size, cfg.t_max);
}

VectorEnsemble initial_ensemble(double rho11_0) {
  ComplexMatrix d0 = ComplexMatrix::Zero(2, 2);
  d0(0, 0) = 1.0 - rho11_0;
  d0(1, 1) = rho11_0;
  return decompose_density(d0);
}

// Excited population of every trajectory at every grid time, statevector
// backend. Rows follow the grid, columns the family order.
std::vector<std::vector<double>> trajectory_population_table(const TrajectoryFamily& family,
                                                             const std::vector<double>& grid,
                                                             const VectorEnsemble& ensemble,
                                                             int threads) {
  const std::size_t nt = grid.size();
  const std::size_t ntraj = family.trajectories.size();
  std::vector<std::vector<double>> table(nt, std::vector<double>(ntraj, 0.0));
  parallel_for(nt * ntraj, threads, [&](std::size_t task) {
    const std::size_t t_idx = task / ntraj;
    const std::size_t i = task % ntraj;
    const double gt = trajectory_gamma_t(family.trajectories[i], family.mode, grid[t_idx]);
    const KrausMap map = amplitude_damping_kraus(gt);
    table[t_idx][i] = populations_from_dilation(map, ensemble, Backend::statevector()).excited;
  });
  return table;
}

double max_abs_series_diff(const PopulationSeries& a, const PopulationSeries& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.times.size() && i < b.times.size(); ++i) {
    worst = std::max(worst, std::abs(a.excited[i] - b.excited[i]));
  }
  return worst;
}

int cmd_markovian(const Config& cfg) {
  const fs::path out = prepare_out_dir(cfg);
  const std::vector<double> grid = default_time_grid(cfg.t_max, cfg.grid_points);
  const VectorEnsemble ensemble = two_vector_decomposition();
  const double rho11_initial =
      reconstruct_density(ensemble)(1, 1).real();

  PopulationSeries exact;
  exact.times = grid;
  exact.source = SeriesSource::exact();
  for (double t : grid) {
    const double e = rho11_initial * std::exp(-t);
    exact.excited.push_back(e);
    exact.ground.push_back(1.0 - e);
  }
  write_text_file(out / "markovian_exact.csv", series_to_csv(exact));

  TrajectoryFamily single;
  single.mode = TrajectoryMode::RateScaled;
  single.trajectories = {{0, 1.0, 0.0}};
  WeightSchedule schedule;
  schedule.times = grid;
  schedule.weights.assign(grid.size(), {1.0});

  const PopulationSeries sv =
      elt_evolve(single, schedule, ensemble, Backend::statevector(cfg.threads));
  write_text_file(out / "markovian_statevector.csv", series_to_csv(sv));
  std::cout << "gamma = " << format_double(cfg.gamma_physical)
            << " 1/s (time axis is gamma*t)\n";
  std::cout << "statevector vs exact: max |drho_11| = "
            << format_double(max_abs_series_diff(sv, exact)) << "\n";

  if (cfg.shots > 0) {
    const PopulationSeries sh = elt_evolve(
        single, schedule, ensemble, Backend::shot_based(cfg.shots, cfg.seed, cfg.threads));
    write_text_file(out / "markovian_shots.csv", series_to_csv(sh));
    std::cout << "shots vs exact: max |drho_11| = "
              << format_double(max_abs_series_diff(sh, exact)) << "\n";
  }
  return 0;
}

struct JcPipeline {
  std::vector<double> grid;
  PopulationSeries oracle;
  TrajectoryFamily family;
  VectorEnsemble ensemble;
  std::vector<std::vector<double>> pops;
  WeightSchedule schedule;
  FitReport report;
};

JcPipeline run_fit_pipeline(const Config& cfg) {
  JcPipeline p;
  p.grid = default_time_grid(cfg.t_max, cfg.grid_points);
  p.oracle = exact_populations(regime_params(cfg), p.grid, cfg.rho11_0);
  p.family = build_family(cfg);
  require_identity_capable(p.family, cfg.t_max);
  p.ensemble = initial_ensemble(cfg.rho11_0);
  p.pops = trajectory_population_table(p.family, p.grid, p.ensemble, cfg.threads);
  p.schedule = fit_weights(p.pops, p.oracle, cfg.reg);
  p.report = fit_report(p.schedule, p.pops, p.oracle);
  return p;
}

int cmd_oracle(const Config& cfg) {
  const fs::path out = prepare_out_dir(cfg);
  const std::vector<double> grid = default_time_grid(cfg.t_max, cfg.grid_points);
  const PopulationSeries oracle = exact_populations(regime_params(cfg), grid, cfg.rho11_0);
  write_text_file(out / ("jc_" + cfg.regime + "_exact.csv"), series_to_csv(oracle));
  std::cout << "wrote jc_" << cfg.regime << "_exact.csv (" << grid.size() << " points)\n";
  return 0;
}

int cmd_fit_weights(const Config& cfg) {
  const fs::path out = prepare_out_dir(cfg);
  const JcPipeline p = run_fit_pipeline(cfg);
  write_json_file(out / "weights.json", schedule_to_json(p.schedule));
  write_json_file(out / "fit_report.json", fit_report_to_json(p.report));
  double worst = 0.0;
  for (double r : p.report.residuals) worst = std::max(worst, r);
  std::cout << "fit residual: max = " << format_double(worst) << "\n";
  return 0;
}

int cmd_jc(const Config& cfg) {
  const fs::path out = prepare_out_dir(cfg);
  const JcPipeline p = run_fit_pipeline(cfg);
  write_text_file(out / ("jc_" + cfg.regime + "_exact.csv"), series_to_csv(p.oracle));
  write_json_file(out / "weights.json", schedule_to_json(p.schedule));
  write_json_file(out / "fit_report.json", fit_report_to_json(p.report));

  const PopulationSeries sv =
      elt_evolve(p.family, p.schedule, p.ensemble, Backend::statevector(cfg.threads));
  write_text_file(out / ("jc_" + cfg.regime + "_elt_statevector.csv"), series_to_csv(sv));
  std::cout << "ensemble statevector vs oracle: max |drho_11| = "
            << format_double(max_abs_series_diff(sv, p.oracle)) << "\n";

  if (cfg.shots > 0) {
    const PopulationSeries sh = elt_evolve(
        p.family, p.schedule, p.ensemble, Backend::shot_based(cfg.shots, cfg.seed, cfg.threads));
    write_text_file(out / ("jc_" + cfg.regime + "_elt_shots.csv"), series_to_csv(sh));
    std::cout << "ensemble shots vs oracle: max |drho_11| = "
              << format_double(max_abs_series_diff(sh, p.oracle)) << "\n";
  }
  return 0;
}

int cmd_dilate(const Config& cfg, const std::string& input) {
  const fs::path out = prepare_out_dir(cfg);
  const ComplexMatrix m = matrix_from_json(read_json_file(input));
  const DilatedUnitary d = dilate(m);
  write_json_file(out / "dilated.json", dilated_to_json(d));
  std::cout << "dilated " << d.system_dim << "x" << d.system_dim << " contraction; "
            << "unitarity defect = " << format_double(unitarity_defect(d.matrix)) << "\n";
  return 0;
}

int cmd_synthesize(const Config& cfg, const std::string& input) {
  const fs::path out = prepare_out_dir(cfg);
  const ComplexMatrix m = matrix_from_json(read_json_file(input));
  const SynthesisReport rep = synthesize_2q(m);
  write_json_file(out / "synthesis.json", synthesis_report_to_json(rep));
  std::cout << "synthesized circuit: " << rep.cnot_count << " CNOTs, fidelity = "
            << format_double(rep.fidelity) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ensemble-of-trajectories simulator for damped two-level dynamics"};
  app.require_subcommand(1);

  SharedFlags f_mark, f_jc, f_orc, f_fit, f_dil, f_syn;
  std::string dilate_input, synth_input;

  CLI::App* mark = app.add_subcommand("markovian", "amplitude-damping benchmark series");
  f_mark.attach(mark, false);
  CLI::App* jc = app.add_subcommand("jc", "weighted trajectory ensemble vs the exact oracle");
  f_jc.attach(jc, true);
  CLI::App* orc = app.add_subcommand("oracle", "exact reference series only");
  f_orc.attach(orc, true);
  CLI::App* fitw = app.add_subcommand("fit-weights", "fit ensemble weights to the oracle");
  f_fit.attach(fitw, true);
  CLI::App* dil = app.add_subcommand("dilate", "embed a Kraus operator in a unitary");
  dil->add_option("input", dilate_input, "matrix JSON file")->required();
  f_dil.attach(dil, false);
  CLI::App* syn = app.add_subcommand("synthesize", "compile a two-qubit unitary to gates");
  syn->add_option("input", synth_input, "matrix JSON file")->required();
  f_syn.attach(syn, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mark->parsed()) return cmd_markovian(f_mark.resolve());
    if (jc->parsed()) return cmd_jc(f_jc.resolve());
    if (orc->parsed()) return cmd_oracle(f_orc.resolve());
    if (fitw->parsed()) return cmd_fit_weights(f_fit.resolve());
    if (dil->parsed()) return cmd_dilate(f_dil.resolve(), dilate_input);
    if (syn->parsed()) return cmd_synthesize(f_syn.resolve(), synth_input);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.kind() == ErrorKind::BadConfig || e.kind() == ErrorKind::IOFailure) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
