# Copyright © 2024 Quantum Search Sim Authors
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
"""Tests to assure the open-system dynamics.

Test-Suite to ensure that the single-excitation master equation agrees with the full dissipators on
three qubits, that the trajectory noise reproduces the dephasing rate, and that both methods agree.
"""
import math
from functools import reduce

import numpy as np
import pytest

from quantum_search.exceptions import CapacityException, ValidationException
from quantum_search.models import Cavity, FreeSpace, NoiseConfig, SearchProblem
from quantum_search.services import DynamicsService, HamiltonianService, OpenSystemService
from quantum_search.services.open_system import _trajectory_run


GROUND = np.array([1.0, 0.0])
EXCITED = np.array([0.0, 1.0])
LOWER = np.array([[0.0, 1.0], [0.0, 0.0]])
SIGMA_Z = np.diag([-1.0, 1.0])


def _embed(single, site, atoms=3):
    return reduce(np.kron, [single if index == site else np.eye(2) for index in range(atoms)])


def _excitation_basis(atoms=3):
    """Columns are the full space states with exactly atom j excited."""
    return np.stack([reduce(np.kron, [EXCITED if index == site else GROUND for index in range(atoms)])
                     for site in range(atoms)], axis=1)


def _random_density(rng, n):
    matrix = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = matrix @ matrix.conj().T
    return rho / np.trace(rho)


def test_unitary_limit(rng):
    """Assert that without noise the generator is -i[H, rho]."""
    hamiltonian = rng.normal(size=(4, 4))
    hamiltonian = hamiltonian + hamiltonian.T
    rho = _random_density(rng, 4)

    expected = -1j * (hamiltonian @ rho - rho @ hamiltonian)
    assert np.allclose(OpenSystemService.lindblad_rhs(rho, hamiltonian, None, 0.0), expected, atol=1e-14)


def test_dephasing_matches_full_dissipator(rng):
    """Assert the block dephasing term against sum_j gamma/2 (2 Z rho Z - Z Z rho - rho Z Z) on 2^3 states."""
    gamma_ph = 0.7
    basis = _excitation_basis()
    rho = _random_density(rng, 3)
    full = basis @ rho @ basis.T

    dissipator = np.zeros_like(full)
    for site in range(3):
        z = _embed(SIGMA_Z, site)
        dissipator += 0.5 * gamma_ph * (2 * z @ full @ z - z @ z @ full - full @ z @ z)

    block = OpenSystemService.lindblad_rhs(rho, np.zeros((3, 3)), None, gamma_ph)
    assert np.allclose(basis.T @ dissipator @ basis, block, atol=1e-12)


def test_collective_decay_matches_full_dissipator(rng, free_space_problem):
    """Assert the block decay term against sum_ij G_ij (s_j rho s_i^+ - 1/2 {s_i^+ s_j, rho}) on 2^3 states."""
    problem = SearchProblem(n=3, targets=(1,), model=free_space_problem.model)
    decay = HamiltonianService.build_coupling_matrices(problem).G
    basis = _excitation_basis()
    rho = _random_density(rng, 3)
    full = basis @ rho @ basis.T

    dissipator = np.zeros_like(full)
    for i in range(3):
        for j in range(3):
            lower_i, lower_j = _embed(LOWER, i), _embed(LOWER, j)
            raise_i = lower_i.T
            dissipator += decay[i, j] * (lower_j @ full @ raise_i
                                         - 0.5 * (raise_i @ lower_j @ full + full @ raise_i @ lower_j))

    block = OpenSystemService.lindblad_rhs(rho, np.zeros((3, 3)), decay, 0.0)
    assert np.allclose(basis.T @ dissipator @ basis, block, atol=1e-12)


def test_independent_decay():
    """Assert that every population decays as exp(-gamma t) without couplings."""
    rho0 = np.diag([0.5, 0.3, 0.2]).astype(complex)
    times = np.linspace(0.0, 2.0, 5)
    states = OpenSystemService.integrate_master(rho0, np.zeros((3, 3)), np.eye(3), 0.0, times, safety=0.005)

    for t, rho in zip(times, states):
        assert np.allclose(np.diag(rho).real, np.diag(rho0).real * math.exp(-t), atol=1e-8)


def test_dephasing_calibration():
    """Assert rho_12(t) = rho_12(0) exp(-4 gamma_ph t) with populations unchanged."""
    rho0 = np.full((3, 3), 1 / 3, dtype=complex)
    times = np.linspace(0.0, 0.5, 6)
    states = OpenSystemService.integrate_master(rho0, np.zeros((3, 3)), None, 1.0, times, safety=0.005)

    for t, rho in zip(times, states):
        assert rho[0, 1].real == pytest.approx(math.exp(-4 * t) / 3, abs=1e-8)
        assert np.allclose(np.diag(rho).real, 1 / 3, atol=1e-12)


def test_trajectory_noise_calibration():
    """Assert that the trajectory average of psi_1 psi_2^* decays as exp(-4 gamma_ph t) / 3."""
    times = np.linspace(0.0, 0.5, 6)
    states = _trajectory_run(np.zeros((3, 3), dtype=complex), HamiltonianService.uniform_state(3), times, 1.0,
                             range(500), 0.05, None, np.copy)
    coherences = states[:, 0, :] * states[:, 1, :].conj()

    assert states.shape == (6, 3, 500)
    for t, samples in zip(times, coherences):
        stderr = samples.real.std(ddof=1) / math.sqrt(samples.size) + 1e-12
        assert abs(samples.real.mean() - math.exp(-4 * t) / 3) <= 4 * stderr
        assert abs(samples.imag.mean()) <= 4 * (samples.imag.std(ddof=1) / math.sqrt(samples.size) + 1e-12)


def test_trace_is_non_increasing_under_decay(free_space_problem):
    """Assert that the block trace only decreases and the state stays positive."""
    matrices = HamiltonianService.build_coupling_matrices(free_space_problem)
    hamiltonian = HamiltonianService.build_search_hamiltonian(free_space_problem, matrices).H
    uniform = HamiltonianService.uniform_state(6)
    states = OpenSystemService.integrate_master(np.outer(uniform, uniform.conj()), hamiltonian, matrices.G, 0.5,
                                                np.linspace(0.0, 3.0, 16))
    traces = np.array([np.trace(rho).real for rho in states])

    assert np.all(np.diff(traces) <= 1e-12)
    assert traces[-1] < 1.0
    assert all(np.linalg.eigvalsh(rho)[0] > -1e-7 for rho in states)


def test_master_equation_without_noise_matches_closed():
    """Assert that the noiseless master equation reproduces the closed fidelity."""
    problem = SearchProblem(n=8, targets=(3,), model=Cavity(j_c=10.0), eta=60.0)
    t_max = 2 * math.pi / (20.0 * math.sqrt(7))
    master = OpenSystemService.evolve_master(problem, NoiseConfig(), t_max, 21)
    closed = DynamicsService.fidelity_trace(problem, t_max, 21)

    assert np.max(np.abs(master.fidelity - closed.fidelity)) < 1e-6


def test_decay_norm_matches_master_trace(free_space_problem):
    """Assert that |<w|psi>|^2 under H_eff equals <w|rho|w> when only decay acts."""
    noise = NoiseConfig(include_decay=True)
    master = OpenSystemService.evolve_master(free_space_problem, noise, 5.0, 11)
    effective = DynamicsService.effective_fidelity_trace(free_space_problem, 5.0, 11, True)

    assert np.max(np.abs(master.fidelity - effective.fidelity)) < 1e-4


def test_master_equation_capacity():
    """Assert that the dense master equation refuses chains above its guard."""
    problem = SearchProblem(n=257, targets=(1,), model=Cavity())
    with pytest.raises(CapacityException):
        OpenSystemService.evolve_master(problem, NoiseConfig(), 1.0, 11)
    with pytest.raises(CapacityException):
        OpenSystemService.evolve_master(problem.evolve(n=9), NoiseConfig(), 1.0, 11, max_n=8)


def test_trajectories_are_reproducible(free_space_problem):
    """Assert identical traces for identical seeds and different ones otherwise."""
    noise = NoiseConfig(gamma_ph=1.0)
    first = OpenSystemService.dephasing_trajectory(free_space_problem, noise, 2.0, seed=5, samples=11)
    again = OpenSystemService.dephasing_trajectory(free_space_problem, noise, 2.0, seed=5, samples=11)
    other = OpenSystemService.dephasing_trajectory(free_space_problem, noise, 2.0, seed=6, samples=11)

    assert np.array_equal(first.fidelity, again.fidelity)
    assert not np.array_equal(first.fidelity, other.fidelity)


def test_trajectory_without_dephasing_is_deterministic(free_space_problem):
    """Assert that gamma_ph = 0 reduces a trajectory to the H_eff evolution."""
    noise = NoiseConfig(include_decay=True)
    trajectory = OpenSystemService.dephasing_trajectory(free_space_problem, noise, 2.0, seed=1, samples=11)
    effective = DynamicsService.effective_fidelity_trace(free_space_problem, 2.0, 11, True)

    assert np.allclose(trajectory.fidelity, effective.fidelity, atol=1e-6)


def test_average_without_dephasing_has_no_spread(free_space_problem):
    """Assert that a noiseless average runs once and reports zero standard error."""
    trace = OpenSystemService.average_trajectories(free_space_problem, NoiseConfig(n_traj=1), 2.0, 11)

    assert np.all(trace.stderr == 0)


def test_average_needs_two_trajectories(free_space_problem):
    """Assert that a dephased average needs a standard error."""
    with pytest.raises(ValidationException):
        OpenSystemService.average_trajectories(free_space_problem, NoiseConfig(gamma_ph=1.0, n_traj=1), 2.0, 11)


def test_average_independent_of_batching_and_workers(free_space_problem):
    """Assert that batch size and worker count do not change the mean."""
    noise = NoiseConfig(gamma_ph=1.0, n_traj=30, base_seed=3)
    reference = OpenSystemService.average_trajectories(free_space_problem, noise, 2.0, 11, workers=1, batch=30)
    batched = OpenSystemService.average_trajectories(free_space_problem, noise, 2.0, 11, workers=3, batch=7)

    assert np.allclose(reference.fidelity, batched.fidelity, atol=1e-12)
    assert np.allclose(reference.stderr, batched.stderr, atol=1e-12)


def test_standard_error_shrinks_with_ensemble(free_space_problem):
    """Assert that doubling the ensemble shrinks the standard error by about 1 / sqrt(2)."""
    small = OpenSystemService.average_trajectories(free_space_problem, NoiseConfig(gamma_ph=1.0, n_traj=100),
                                                   2.0, 11)
    large = OpenSystemService.average_trajectories(free_space_problem, NoiseConfig(gamma_ph=1.0, n_traj=200),
                                                   2.0, 11)

    ratio = large.stderr[1:].mean() / small.stderr[1:].mean()
    assert ratio == pytest.approx(1 / math.sqrt(2), rel=0.25)


def test_compare_methods_noiseless():
    """Assert agreement within 1e-6 of both methods without noise."""
    problem = SearchProblem(n=8, targets=(3,), model=Cavity(j_c=10.0), eta=60.0)
    report = OpenSystemService.compare_methods(problem, NoiseConfig(), 2 * math.pi / (20.0 * math.sqrt(7)), 21)

    assert report.max_abs_diff < 1e-6
    assert report.within_band_fraction == 1.0


def test_compare_methods_with_dephasing():
    """Assert that the trajectory mean lies within three standard errors of the master equation."""
    problem = SearchProblem(n=4, targets=(2,), model=FreeSpace(), eta=1.0)
    noise = NoiseConfig(gamma_ph=1.0, n_traj=200, base_seed=11)
    report = OpenSystemService.compare_methods(problem, noise, 3.0, 21)

    assert report.within_band_fraction >= 0.9
    assert report.master.times.tolist() == report.effective.times.tolist()


def test_compare_methods_capacity():
    """Assert that cross validation refuses chains above its guard."""
    problem = SearchProblem(n=65, targets=(1,), model=Cavity())
    with pytest.raises(CapacityException):
        OpenSystemService.compare_methods(problem, NoiseConfig(), 1.0, 11)


@pytest.mark.parametrize('gamma_ph', [1.0, 10.0])
def test_strong_dephasing_keeps_trajectories_bounded(gamma_ph):
    """Assert that large on-site noise on a weakly coupled chain never grows the norm."""
    problem = SearchProblem(n=8, targets=(3,), model=FreeSpace(), eta=1.0)
    noise = NoiseConfig(gamma_ph=gamma_ph, n_traj=20, include_decay=True)
    trace = OpenSystemService.average_trajectories(problem, noise, 5.0, 21)

    assert np.all(np.isfinite(trace.fidelity))
    assert np.all(trace.fidelity <= 1.0)
    assert trace.fidelity[0] == pytest.approx(1 / 8)


def test_coarse_noise_steps_keep_norm():
    """Assert that a caller-set step with sigma * dt of order one stays norm preserving."""
    times = np.linspace(0.0, 2.0, 5)
    hamiltonian = HamiltonianService.build_search_hamiltonian(
        SearchProblem(n=6, targets=(2,), model=FreeSpace(), eta=1.0)).H
    norms = _trajectory_run(hamiltonian, HamiltonianService.uniform_state(6), times, 10.0, range(10), 0.05, 0.1,
                            lambda psi: np.sum(np.abs(psi) ** 2, axis=0))

    assert np.allclose(norms, 1.0, atol=1e-9)


def test_caller_step_bypasses_step_rule(mocker, free_space_problem):
    """Assert that NoiseConfig.dt replaces the step rule for both methods."""
    rule = mocker.patch('quantum_search.services.open_system.stable_time_step')
    noise = NoiseConfig(gamma_ph=1.0, n_traj=2, include_decay=True, dt=0.01)

    OpenSystemService.evolve_master(free_space_problem, noise, 1.0, 5)
    OpenSystemService.average_trajectories(free_space_problem, noise, 1.0, 5)

    rule.assert_not_called()


def test_caller_step_matches_step_rule(free_space_problem):
    """Assert that a fine caller-set step reproduces the default master equation."""
    default = OpenSystemService.evolve_master(free_space_problem, NoiseConfig(gamma_ph=0.5), 2.0, 11)
    stepped = OpenSystemService.evolve_master(free_space_problem, NoiseConfig(gamma_ph=0.5, dt=0.001), 2.0, 11)

    assert np.max(np.abs(default.fidelity - stepped.fidelity)) < 1e-6
