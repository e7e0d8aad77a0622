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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eltqc/channels.hpp"
#include "eltqc/circuit.hpp"
#include "eltqc/dilation.hpp"
#include "eltqc/elt.hpp"
#include "eltqc/jcref.hpp"
#include "eltqc/linalg.hpp"
#include "eltqc/series.hpp"
#include "eltqc/stateprep.hpp"
#include "eltqc/synthesis.hpp"
#include "eltqc/weights.hpp"

namespace py = pybind11;
using namespace eltqc;

namespace {

PopulationSeries make_reference(const std::vector<double>& times,
                                const std::vector<double>& excited) {
  if (times.size() != excited.size())
    fail(ErrorKind::GridMismatch, "times and excited must have equal length");
  PopulationSeries s;
  s.times = times;
  s.excited = excited;
  s.ground.resize(excited.size());
  for (std::size_t k = 0; k < excited.size(); ++k) s.ground[k] = 1.0 - excited[k];
  s.source = SeriesSource::exact();
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dilated-circuit simulation of open-system dynamics: Kraus "
            "channels, unitary dilations, trajectory ensembles, two-qubit "
            "synthesis, and the structured-bath reference solution.";

  py::register_exception<Error>(m, "EltqcError");

  py::class_<KrausMap>(m, "KrausMap")
      .def_readonly("dim", &KrausMap::dim)
      .def_readonly("operators", &KrausMap::operators)
      .def_readonly("time", &KrausMap::time);

  py::class_<DilatedUnitary>(m, "DilatedUnitary")
      .def_readonly("source_index", &DilatedUnitary::source_index)
      .def_readonly("system_dim", &DilatedUnitary::system_dim)
      .def_readonly("matrix", &DilatedUnitary::matrix);

  py::class_<VectorEnsemble>(m, "VectorEnsemble")
      .def_readonly("vectors", &VectorEnsemble::vectors)
      .def_readonly("weights", &VectorEnsemble::weights)
      .def_readonly("system_dim", &VectorEnsemble::system_dim)
      .def_readonly("padded_dim", &VectorEnsemble::padded_dim);

  py::class_<Gate>(m, "Gate")
      .def_property_readonly("name", [](const Gate& g) { return std::string(to_string(g.kind)); })
      .def_readonly("qubits", &Gate::qubits)
      .def_readonly("angle", &Gate::angle)
      .def_readonly("matrix", &Gate::matrix)
      .def_static("x", &Gate::x, py::arg("q"))
      .def_static("z", &Gate::z, py::arg("q"))
      .def_static("h", &Gate::h, py::arg("q"))
      .def_static("ry", &Gate::ry, py::arg("q"), py::arg("theta"))
      .def_static("rz", &Gate::rz, py::arg("q"), py::arg("theta"))
      .def_static("cnot", &Gate::cnot, py::arg("control"), py::arg("target"))
      .def_static("u4", &Gate::u4, py::arg("qa"), py::arg("qb"), py::arg("matrix"))
      .def("__repr__", [](const Gate& g) {
        std::string r = std::string("Gate(") + to_string(g.kind);
        for (int q : g.qubits) r += ", q" + std::to_string(q);
        return r + ")";
      });

  py::class_<Circuit>(m, "Circuit")
      .def(py::init([](int width, std::vector<Gate> gates) {
             Circuit c;
             c.width = width;
             c.gates = std::move(gates);
             return c;
           }),
           py::arg("width"), py::arg("gates") = std::vector<Gate>{})
      .def_readwrite("width", &Circuit::width)
      .def_readwrite("gates", &Circuit::gates)
      .def("__len__", [](const Circuit& c) { return c.gates.size(); });

  py::class_<ShotResult>(m, "ShotResult")
      .def_readonly("counts", &ShotResult::counts)
      .def_readonly("shots", &ShotResult::shots)
      .def_readonly("seed", &ShotResult::seed);

  py::class_<SeriesSource>(m, "SeriesSource")
      .def("label", &SeriesSource::label);

  py::class_<PopulationSeries>(m, "PopulationSeries")
      .def_readonly("times", &PopulationSeries::times)
      .def_readonly("ground", &PopulationSeries::ground)
      .def_readonly("excited", &PopulationSeries::excited)
      .def_readonly("source", &PopulationSeries::source);

  py::class_<PopulationPair>(m, "PopulationPair")
      .def_readonly("ground", &PopulationPair::ground)
      .def_readonly("excited", &PopulationPair::excited);

  py::enum_<TrajectoryMode>(m, "TrajectoryMode")
      .value("RateScaled", TrajectoryMode::RateScaled)
      .value("LagShifted", TrajectoryMode::LagShifted);

  py::class_<TrajectorySpec>(m, "TrajectorySpec")
      .def(py::init([](int index, double rate_multiplier, double lag) {
             return TrajectorySpec{index, rate_multiplier, lag};
           }),
           py::arg("index") = 0, py::arg("rate_multiplier") = 1.0, py::arg("lag") = 0.0)
      .def_readwrite("index", &TrajectorySpec::index)
      .def_readwrite("rate_multiplier", &TrajectorySpec::rate_multiplier)
      .def_readwrite("lag", &TrajectorySpec::lag);

  py::class_<ChannelSpec>(m, "ChannelSpec")
      .def(py::init<>())
      .def_readwrite("rate", &ChannelSpec::rate)
      .def_readwrite("dim", &ChannelSpec::dim);

  py::class_<TrajectoryFamily>(m, "TrajectoryFamily")
      .def(py::init<>())
      .def_readwrite("trajectories", &TrajectoryFamily::trajectories)
      .def_readwrite("mode", &TrajectoryFamily::mode)
      .def_readwrite("base_channel", &TrajectoryFamily::base_channel);

  py::class_<WeightSchedule>(m, "WeightSchedule")
      .def(py::init([](std::vector<double> times, std::vector<std::vector<double>> weights) {
             WeightSchedule s;
             s.times = std::move(times);
             s.weights = std::move(weights);
             return s;
           }),
           py::arg("times") = std::vector<double>{},
           py::arg("weights") = std::vector<std::vector<double>>{})
      .def_readwrite("times", &WeightSchedule::times)
      .def_readwrite("weights", &WeightSchedule::weights);

  py::class_<Backend>(m, "Backend")
      .def_static("statevector", &Backend::statevector, py::arg("threads") = 1)
      .def_static("shot_based", &Backend::shot_based, py::arg("shots"), py::arg("seed"),
                  py::arg("threads") = 1)
      .def_readonly("shots", &Backend::shots)
      .def_readonly("seed", &Backend::seed)
      .def_readonly("threads", &Backend::threads);

  py::class_<FitReport>(m, "FitReport")
      .def_readonly("times", &FitReport::times)
      .def_readonly("residuals", &FitReport::residuals)
      .def_readonly("hull_min", &FitReport::hull_min)
      .def_readonly("hull_max", &FitReport::hull_max)
      .def_readonly("outside_hull", &FitReport::outside_hull);

  py::class_<WeylDecomposition>(m, "WeylDecomposition")
      .def_readonly("a", &WeylDecomposition::a)
      .def_readonly("b", &WeylDecomposition::b)
      .def_readonly("c", &WeylDecomposition::c)
      .def_readonly("phase", &WeylDecomposition::phase)
      .def_readonly("k1l", &WeylDecomposition::k1l)
      .def_readonly("k1r", &WeylDecomposition::k1r)
      .def_readonly("k2l", &WeylDecomposition::k2l)
      .def_readonly("k2r", &WeylDecomposition::k2r)
      .def_readonly("reconstruction_error", &WeylDecomposition::reconstruction_error);

  py::class_<ZyzAngles>(m, "ZyzAngles")
      .def_readonly("alpha", &ZyzAngles::alpha)
      .def_readonly("beta", &ZyzAngles::beta)
      .def_readonly("gamma", &ZyzAngles::gamma)
      .def_readonly("phase", &ZyzAngles::phase);

  py::class_<SynthesisReport>(m, "SynthesisReport")
      .def_readonly("circuit", &SynthesisReport::circuit)
      .def_readonly("cnot_count", &SynthesisReport::cnot_count)
      .def_readonly("fidelity", &SynthesisReport::fidelity)
      .def_readonly("global_phase", &SynthesisReport::global_phase);

  m.def("amplitude_damping_kraus", &amplitude_damping_kraus, py::arg("gamma_t"),
        "Two-operator damping channel at dimensionless time gamma*t.");
  m.def("apply_channel", &apply_channel, py::arg("map"), py::arg("density"));
  m.def("validate_density", &validate_density, py::arg("density"), py::arg("tol") = 1e-10);
  m.def("lindblad_propagate", &lindblad_propagate, py::arg("spec"), py::arg("hamiltonian"),
        py::arg("density0"), py::arg("gamma_t"), py::arg("steps") = 1000);

  m.def("hermitian_eig",
        [](const ComplexMatrix& a, double tol) {
          const EigenSystem es = hermitian_eig(a, tol);
          return py::make_tuple(es.values, es.vectors);
        },
        py::arg("a"), py::arg("tol") = 1e-10,
        "Eigenvalues (descending) and eigenvector columns of a Hermitian matrix.");
  m.def("psd_sqrt", &psd_sqrt, py::arg("a"), py::arg("tol") = 1e-10);
  m.def("unitarity_defect", &unitarity_defect, py::arg("u"));

  m.def("dilate", &dilate, py::arg("m"), py::arg("tol") = 1e-9,
        "Unitary block dilation [[M, D_M'], [D_M, -M']] of a contraction.");
  m.def("dilate_channel", &dilate_channel, py::arg("map"));

  m.def("decompose_density", &decompose_density, py::arg("density"));
  m.def("two_vector_decomposition", &two_vector_decomposition);
  m.def("reconstruct_density", &reconstruct_density, py::arg("ensemble"));
  m.def("pad", &pad, py::arg("v"), py::arg("target_dim"));

  m.def("ry_matrix", &ry_matrix, py::arg("theta"));
  m.def("rz_matrix", &rz_matrix, py::arg("theta"));
  m.def("simulate", &simulate, py::arg("circuit"), py::arg("input"));
  m.def("sample", &sample, py::arg("circuit"), py::arg("input"), py::arg("shots"),
        py::arg("seed"));
  m.def("circuit_unitary", &circuit_unitary, py::arg("circuit"));

  m.def("weyl_decompose", &weyl_decompose, py::arg("u"), py::arg("tol") = 1e-10);
  m.def("canonical_gate", &canonical_gate, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("zyz_decompose", &zyz_decompose, py::arg("v"));
  m.def("synthesize_2q", &synthesize_2q, py::arg("u"),
        "Exact circuit over RY/RZ/CNOT for a two-qubit unitary, at most three CNOTs.");
  m.def("prep_and_apply", &prep_and_apply, py::arg("dilated"), py::arg("v"));

  m.def("spectral_density",
        [](double x, double gamma, double lam, double delta) {
          return spectral_density(JCParams{gamma, lam, delta}, x);
        },
        py::arg("x"), py::arg("gamma") = 1.0, py::arg("lam") = 0.2, py::arg("delta") = 0.0,
        "Lorentzian bath coupling density at offset x from the system frequency.");
  m.def("kernel_amplitude_closed_form",
        [](double gamma_t, double gamma, double lam, double delta) {
          return kernel_amplitude_closed_form(JCParams{gamma, lam, delta}, gamma_t);
        },
        py::arg("gamma_t"), py::arg("gamma") = 1.0, py::arg("lam") = 0.2, py::arg("delta") = 0.0);
  m.def("kernel_amplitude",
        [](const std::vector<double>& grid, double gamma, double lam, double delta) {
          return kernel_amplitude(JCParams{gamma, lam, delta}, grid);
        },
        py::arg("grid"), py::arg("gamma") = 1.0, py::arg("lam") = 0.2, py::arg("delta") = 0.0);
  m.def("exact_populations",
        [](const std::vector<double>& grid, double gamma, double lam, double delta,
           double rho11_0) {
          return exact_populations(JCParams{gamma, lam, delta}, grid, rho11_0);
        },
        py::arg("grid"), py::arg("gamma") = 1.0, py::arg("lam") = 0.2, py::arg("delta") = 0.0,
        py::arg("rho11_0") = 1.0,
        "Exact excited-state population of a two-level system in a Lorentzian bath.");

  m.def("trajectory_gamma_t", &trajectory_gamma_t, py::arg("spec"), py::arg("mode"),
        py::arg("t"));
  m.def("populations_from_dilation", &populations_from_dilation, py::arg("map"),
        py::arg("ensemble"), py::arg("backend"));
  m.def("elt_evolve", &elt_evolve, py::arg("family"), py::arg("schedule"), py::arg("ensemble"),
        py::arg("backend"),
        "Weighted trajectory-ensemble populations over the schedule's time grid.");
  m.def("default_rate_family", &default_rate_family, py::arg("size") = 25,
        py::arg("kappa_min") = 1e-2, py::arg("kappa_max") = 10.0);
  m.def("default_lag_family", &default_lag_family, py::arg("size"), py::arg("t_max"));
  m.def("default_time_grid", &default_time_grid, py::arg("t_max") = 10.0,
        py::arg("points") = 101);
  m.def("require_identity_capable", &require_identity_capable, py::arg("family"),
        py::arg("t_max"));

  m.def("fit_weights",
        [](const std::vector<std::vector<double>>& trajectory_pops,
           const std::vector<double>& times, const std::vector<double>& reference_excited,
           double reg) {
          return fit_weights(trajectory_pops, make_reference(times, reference_excited), reg);
        },
        py::arg("trajectory_pops"), py::arg("times"), py::arg("reference_excited"),
        py::arg("reg") = 1e-8,
        "Per-time minimum-norm simplex weights matching the reference populations.");
  m.def("fit_report",
        [](const WeightSchedule& schedule,
           const std::vector<std::vector<double>>& trajectory_pops,
           const std::vector<double>& times, const std::vector<double>& reference_excited) {
          return fit_report(schedule, trajectory_pops, make_reference(times, reference_excited));
        },
        py::arg("schedule"), py::arg("trajectory_pops"), py::arg("times"),
        py::arg("reference_excited"));
  m.def("fit_weight_slice", &fit_weight_slice, py::arg("pops"), py::arg("reference"));
}
