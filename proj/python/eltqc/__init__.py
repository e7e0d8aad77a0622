# Copyright 2026 The eltqc authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Dilated-circuit simulation of open-system dynamics.

Kraus channels, Sz.-Nagy unitary dilations, gate-level circuit simulation
with optional shot noise, weighted trajectory ensembles with fitted convex
weights, two-qubit circuit synthesis, and an exact structured-bath
reference solution.
"""

from eltqc._core import (
    Backend,
    ChannelSpec,
    Circuit,
    DilatedUnitary,
    EltqcError,
    FitReport,
    Gate,
    KrausMap,
    PopulationPair,
    PopulationSeries,
    SeriesSource,
    ShotResult,
    SynthesisReport,
    TrajectoryFamily,
    TrajectoryMode,
    TrajectorySpec,
    VectorEnsemble,
    WeightSchedule,
    WeylDecomposition,
    ZyzAngles,
    amplitude_damping_kraus,
    apply_channel,
    canonical_gate,
    circuit_unitary,
    decompose_density,
    default_lag_family,
    default_rate_family,
    default_time_grid,
    dilate,
    dilate_channel,
    elt_evolve,
    exact_populations,
    fit_report,
    fit_weight_slice,
    fit_weights,
    hermitian_eig,
    kernel_amplitude,
    kernel_amplitude_closed_form,
    lindblad_propagate,
    pad,
    populations_from_dilation,
    prep_and_apply,
    psd_sqrt,
    reconstruct_density,
    require_identity_capable,
    ry_matrix,
    rz_matrix,
    sample,
    simulate,
    spectral_density,
    synthesize_2q,
    trajectory_gamma_t,
    two_vector_decomposition,
    unitarity_defect,
    validate_density,
    weyl_decompose,
    zyz_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "Backend",
    "ChannelSpec",
    "Circuit",
    "DilatedUnitary",
    "EltqcError",
    "FitReport",
    "Gate",
    "KrausMap",
    "PopulationPair",
    "PopulationSeries",
    "SeriesSource",
    "ShotResult",
    "SynthesisReport",
    "TrajectoryFamily",
    "TrajectoryMode",
    "TrajectorySpec",
    "VectorEnsemble",
    "WeightSchedule",
    "WeylDecomposition",
    "ZyzAngles",
    "amplitude_damping_kraus",
    "apply_channel",
    "canonical_gate",
    "circuit_unitary",
    "decompose_density",
    "default_lag_family",
    "default_rate_family",
    "default_time_grid",
    "dilate",
    "dilate_channel",
    "elt_evolve",
    "exact_populations",
    "fit_report",
    "fit_weight_slice",
    "fit_weights",
    "hermitian_eig",
    "kernel_amplitude",
    "kernel_amplitude_closed_form",
    "lindblad_propagate",
    "pad",
    "populations_from_dilation",
    "prep_and_apply",
    "psd_sqrt",
    "reconstruct_density",
    "require_identity_capable",
    "ry_matrix",
    "rz_matrix",
    "sample",
    "simulate",
    "spectral_density",
    "synthesize_2q",
    "trajectory_gamma_t",
    "two_vector_decomposition",
    "unitarity_defect",
    "validate_density",
    "weyl_decompose",
    "zyz_decompose",
]
