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

import math

import numpy as np
import pytest

import eltqc


BENCHMARK_DENSITY = np.array([[0.25, 0.25], [0.25, 0.75]], dtype=complex)


def test_damping_channel_decays_the_excited_population():
    t = math.log(2.0)
    decayed = eltqc.apply_channel(eltqc.amplitude_damping_kraus(t), BENCHMARK_DENSITY)
    assert decayed[1, 1].real == pytest.approx(0.375, abs=1e-12)
    assert np.trace(decayed).real == pytest.approx(1.0, abs=1e-12)


def test_dilation_is_unitary_and_recovers_the_contraction():
    kraus = eltqc.amplitude_damping_kraus(0.7)
    for op in kraus.operators:
        dilated = eltqc.dilate(op)
        u = dilated.matrix
        assert np.max(np.abs(u @ u.conj().T - np.eye(4))) < 1e-12
        assert np.max(np.abs(u[:2, :2] - op)) < 1e-12


def test_circuit_populations_match_the_matrix_channel():
    ensemble = eltqc.two_vector_decomposition()
    pops = eltqc.populations_from_dilation(
        eltqc.amplitude_damping_kraus(math.log(2.0)), ensemble, eltqc.Backend.statevector()
    )
    assert pops.excited == pytest.approx(0.375, abs=1e-12)
    assert pops.ground == pytest.approx(0.625, abs=1e-12)


def test_single_trajectory_ensemble_reproduces_plain_damping():
    family = eltqc.TrajectoryFamily()
    family.mode = eltqc.TrajectoryMode.RateScaled
    family.trajectories = [eltqc.TrajectorySpec(index=0, rate_multiplier=1.0)]
    times = eltqc.default_time_grid(5.0, 21)
    schedule = eltqc.WeightSchedule(times=times, weights=[[1.0]] * len(times))

    series = eltqc.elt_evolve(
        family, schedule, eltqc.two_vector_decomposition(), eltqc.Backend.statevector()
    )
    expected = 0.75 * np.exp(-np.asarray(times))
    assert np.max(np.abs(np.asarray(series.excited) - expected)) < 1e-12


def test_fitted_weights_track_the_structured_bath_oracle():
    times = eltqc.default_time_grid(10.0, 41)
    oracle = eltqc.exact_populations(times, gamma=1.0, lam=0.2, delta=0.0)

    family = eltqc.default_rate_family(15, 1e-2, 10.0)
    eltqc.require_identity_capable(family, times[-1])
    ensemble = eltqc.decompose_density(np.diag([0.0, 1.0]).astype(complex))

    backend = eltqc.Backend.statevector()
    table = [
        [
            eltqc.populations_from_dilation(
                eltqc.amplitude_damping_kraus(
                    eltqc.trajectory_gamma_t(spec, family.mode, t)
                ),
                ensemble,
                backend,
            ).excited
            for spec in family.trajectories
        ]
        for t in times
    ]

    schedule = eltqc.fit_weights(table, times, oracle.excited)
    fitted = eltqc.elt_evolve(family, schedule, ensemble, backend)
    err = np.max(np.abs(np.asarray(fitted.excited) - np.asarray(oracle.excited)))
    assert err < 5e-3

    excited = np.asarray(oracle.excited)
    k_min = int(np.argmin(excited))
    assert 0 < k_min < len(excited) - 1
    assert np.max(excited[k_min:]) > excited[k_min] + 0.05


def test_synthesis_produces_compact_high_fidelity_circuits():
    cnot = np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    )
    report = eltqc.synthesize_2q(cnot)
    assert report.cnot_count == 1
    assert report.fidelity >= 1.0 - 1e-9

    rebuilt = np.exp(1j * report.global_phase) * np.asarray(
        eltqc.circuit_unitary(report.circuit)
    )
    assert np.max(np.abs(rebuilt - cnot)) < 1e-9


def test_sampling_is_seed_deterministic():
    circuit = eltqc.Circuit(2, [eltqc.Gate.h(1), eltqc.Gate.cnot(1, 0)])
    zero = np.zeros(4, dtype=complex)
    zero[0] = 1.0
    first = eltqc.sample(circuit, zero, 2048, 11)
    second = eltqc.sample(circuit, zero, 2048, 11)
    assert first.counts == second.counts
    assert sum(first.counts.values()) == 2048
    assert set(first.counts) <= {0, 3}


def test_invalid_input_raises_the_package_exception():
    with pytest.raises(eltqc.EltqcError):
        eltqc.decompose_density(np.diag([1.5, -0.5]).astype(complex))
    with pytest.raises(eltqc.EltqcError):
        eltqc.amplitude_damping_kraus(-1.0)
