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
"""Service for open-system search dynamics.

Two methods are offered. The master equation evolves the n x n single-excitation block of rho; the
vacuum only receives population, so the block alone is exact and the vacuum population is 1 - trace.
The trajectory method evolves pure states under H_eff with Gaussian on-site energies redrawn every
step, sigma = 2 sqrt(gamma_ph / dt), which averages to the same e^(-4 gamma_ph t) coherence decay.
Both methods split each output interval with the same step rule, or with NoiseConfig.dt when it is set.
"""
import math
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import expm

from quantum_search.config import _Config
from quantum_search.exceptions import CapacityException, NumericalInstabilityException, ValidationException
from quantum_search.models import ComparisonReport, FidelityTrace, NoiseConfig, SearchProblem
from quantum_search.services.dynamics import DynamicsService
from quantum_search.services.hamiltonian import HamiltonianService
from quantum_search.utils.helpers import rk4_step, row_sum_norm, stable_time_step
from quantum_search.utils.logging import get_logger
from quantum_search.utils.parallel import ordered_map


logger = get_logger(__name__)

TRACE_GROWTH_TOLERANCE = 1e-6
NEGATIVE_EIGENVALUE_TOLERANCE = 1e-6
NORM_GROWTH_TOLERANCE = 1e-6
DETERMINISTIC_BAND = 1e-6


def _substeps(bound: float, interval: float, safety: float, dt: Optional[float]) -> Tuple[float, int]:
    """Return (dt, substeps) for one output interval, honoring a caller-set dt when given."""
    if dt is None:
        return stable_time_step(bound, interval, safety)
    substeps = max(1, int(math.ceil(interval / dt)))
    return interval / substeps, substeps


def _trajectory_run(hamiltonian: np.ndarray, psi0: np.ndarray, times: np.ndarray,
                    gamma_ph: float, seeds: Sequence[int], safety: float, dt: Optional[float],
                    observe: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Evolve one column per seed and return observe(states) at every sample time, stacked on axis 0.

    Each step is symmetric: half the on-site phases, the exact exp(-i H_eff dt), the other half.
    Both factors are contractions, so the norm never grows.
    """
    n = hamiltonian.shape[0]
    dt, substeps = _substeps(row_sum_norm(hamiltonian) + 4.0 * gamma_ph, times[1] - times[0], safety, dt)
    propagator = expm(-1j * dt * hamiltonian)
    sigma = 2.0 * np.sqrt(gamma_ph / dt)
    rngs = [np.random.default_rng(seed) for seed in seeds]
    psi = np.repeat(np.asarray(psi0, dtype=complex)[:, None], len(rngs), axis=1)
    limit = np.linalg.norm(psi0) ** 2 * (1 + NORM_GROWTH_TOLERANCE)

    observed = [observe(psi)]
    for _ in range(len(times) - 1):
        for _ in range(substeps):
            if gamma_ph > 0:
                half = np.exp(-0.5j * dt * sigma * np.stack([rng.standard_normal(n) for rng in rngs], axis=1))
                psi = half * (propagator @ (half * psi))
            else:
                psi = propagator @ psi
        norms = np.sum(np.abs(psi) ** 2, axis=0)
        if np.any(norms > limit):
            raise NumericalInstabilityException(f'trajectory norm grew to {norms.max():.9g}')
        observed.append(observe(psi))
    return np.asarray(observed)


class OpenSystemService:
    """Service for the master equation and the effective-Hamiltonian trajectory method."""

    @classmethod
    def lindblad_rhs(cls, rho: np.ndarray, hamiltonian: np.ndarray, decay: Optional[np.ndarray],
                     gamma_ph: float) -> np.ndarray:
        """Return d rho / dt on the single-excitation block.

        -i[H, rho], then -(1/2)(G rho + rho G) for collective decay (the recycling term only feeds the
        vacuum), then -4 gamma_ph times the off-diagonal part of rho for local sigma_z dephasing.
        """
        derivative = -1j * (hamiltonian @ rho - rho @ hamiltonian)
        if decay is not None:
            derivative -= 0.5 * (decay @ rho + rho @ decay)
        if gamma_ph:
            derivative -= 4.0 * gamma_ph * (rho - np.diag(np.diag(rho)))
        return derivative

    @classmethod
    def integrate_master(cls, rho0: np.ndarray, hamiltonian: np.ndarray,
                         decay: Optional[np.ndarray], gamma_ph: float, times: np.ndarray,
                         safety: float = _Config.STEP_SAFETY, dt: float = None) -> List[np.ndarray]:
        """Return rho at every sample time, integrating lindblad_rhs with fixed RK4 steps.

        The step rule uses ||H||_inf + ||G||_inf / 2 + 4 gamma_ph as the generator bound unless dt is given.
        """
        bound = row_sum_norm(hamiltonian) + 4.0 * gamma_ph
        if decay is not None:
            bound += 0.5 * row_sum_norm(decay)
        dt, substeps = _substeps(bound, times[1] - times[0], safety, dt)

        def derivative(rho):
            return cls.lindblad_rhs(rho, hamiltonian, decay, gamma_ph)

        rho = np.asarray(rho0, dtype=complex)
        states = [rho]
        for _ in range(len(times) - 1):
            for _ in range(substeps):
                rho = rk4_step(derivative, rho, dt)
            rho = 0.5 * (rho + rho.conj().T)
            cls._check_density(rho)
            states.append(rho)
        return states

    @classmethod
    def _check_density(cls, rho: np.ndarray):
        trace = float(np.trace(rho).real)
        if trace > 1 + TRACE_GROWTH_TOLERANCE:
            raise NumericalInstabilityException(f'density matrix trace grew to {trace:.9g}')
        lowest = float(np.linalg.eigvalsh(rho)[0])
        if lowest < -NEGATIVE_EIGENVALUE_TOLERANCE:
            raise NumericalInstabilityException(f'density matrix lost positivity, eigenvalue {lowest:.3e}')

    @classmethod
    def evolve_master(cls, problem: SearchProblem, noise: NoiseConfig, t_max: float,
                      samples: int = _Config.TRACE_SAMPLES, safety: float = _Config.STEP_SAFETY,
                      max_n: int = _Config.MASTER_EQUATION_MAX_N) -> FidelityTrace:
        """Return F(t) = <w|rho(t)|w> from rho(0) = |s><s| under the master equation."""
        if problem.n > max_n:
            raise CapacityException(
                f'master equation is limited to n <= {max_n} (MASTER_EQUATION_MAX_N), got n={problem.n}')
        if not t_max > 0 or samples < 2:
            raise ValidationException(f'need t_max > 0 and samples >= 2, got {t_max}, {samples}')
        logger.debug(f'<evolve_master : n={problem.n} eta={problem.eta:.6g} noise={noise.describe()}')
        matrices = HamiltonianService.build_coupling_matrices(problem)
        hamiltonian = HamiltonianService.build_search_hamiltonian(problem, matrices).H
        uniform = HamiltonianService.uniform_state(problem.n)
        target = HamiltonianService.target_state(problem.targets, problem.n)
        times = np.linspace(0.0, t_max, samples)
        states = cls.integrate_master(np.outer(uniform, uniform.conj()), hamiltonian,
                                      matrices.G if noise.include_decay else None, noise.gamma_ph, times,
                                      safety, noise.dt)
        fidelity = [float(np.vdot(target, rho @ target).real) for rho in states]
        logger.debug('>evolve_master')
        return FidelityTrace(times=times, fidelity=fidelity)

    @classmethod
    def _trajectory_fidelities(cls, problem: SearchProblem, noise: NoiseConfig, times: np.ndarray,
                               seeds: Sequence[int], safety: float) -> np.ndarray:
        hamiltonian = HamiltonianService.build_effective_hamiltonian(problem, noise.include_decay).H
        target = HamiltonianService.target_state(problem.targets, problem.n)
        return _trajectory_run(hamiltonian, HamiltonianService.uniform_state(problem.n), times, noise.gamma_ph,
                               seeds, safety, noise.dt, lambda psi: np.abs(target.conj() @ psi) ** 2)

    @classmethod
    def dephasing_trajectory(cls, problem: SearchProblem, noise: NoiseConfig, t_max: float,
                             seed: int, samples: int = _Config.TRACE_SAMPLES,
                             safety: float = _Config.STEP_SAFETY) -> FidelityTrace:
        """Return the fidelity of one noisy trajectory; identical for identical seeds."""
        times = np.linspace(0.0, t_max, samples)
        fidelity = cls._trajectory_fidelities(problem, noise, times, [seed], safety)[:, 0]
        return FidelityTrace(times=times, fidelity=fidelity)

    @classmethod
    def average_trajectories(cls, problem: SearchProblem, noise: NoiseConfig, t_max: float,
                             samples: int = _Config.TRACE_SAMPLES, workers: int = 1,
                             batch: int = _Config.TRAJECTORY_BATCH,
                             safety: float = _Config.STEP_SAFETY) -> FidelityTrace:
        """Return the mean fidelity over n_traj trajectories seeded base_seed + index, with its standard error.

        Trajectories run in batches of fixed size on up to workers threads; the reduction is in index order.
        Without dephasing every trajectory is the same deterministic H_eff evolution, so one is run.
        """
        if not t_max > 0 or samples < 2:
            raise ValidationException(f'need t_max > 0 and samples >= 2, got {t_max}, {samples}')
        times = np.linspace(0.0, t_max, samples)
        if noise.gamma_ph == 0:
            fidelity = cls._trajectory_fidelities(problem, noise, times, [noise.base_seed], safety)[:, 0]
            return FidelityTrace(times=times, fidelity=fidelity, stderr=np.zeros_like(fidelity))
        if noise.n_traj < 2:
            raise ValidationException(f'averaging needs at least 2 trajectories, got {noise.n_traj}')

        logger.debug(f'<average_trajectories : n={problem.n} noise={noise.describe()} n_traj={noise.n_traj}')
        seeds = [noise.base_seed + index for index in range(noise.n_traj)]
        batches = [seeds[start:start + batch] for start in range(0, len(seeds), batch)]

        def run(batch_seeds):
            values = cls._trajectory_fidelities(problem, noise, times, batch_seeds, safety)
            logger.info(f'trajectories {batch_seeds[-1] - noise.base_seed + 1}/{noise.n_traj}')
            return values

        fidelities = np.concatenate(ordered_map(run, batches, workers), axis=1)
        mean = fidelities.mean(axis=1)
        stderr = fidelities.std(axis=1, ddof=1) / np.sqrt(noise.n_traj)
        logger.debug('>average_trajectories')
        return FidelityTrace(times=times, fidelity=mean, stderr=stderr)

    @classmethod
    def compare_methods(cls, problem: SearchProblem, noise: NoiseConfig, t_max: float,
                        samples: int = _Config.TRACE_SAMPLES, workers: int = 1,
                        max_n: int = _Config.CROSS_VALIDATE_MAX_N) -> ComparisonReport:
        """Run the master equation and the effective-Hamiltonian method on one grid and compare them.

        Decay without dephasing compares the deterministic H_eff trace; with dephasing the trajectory
        mean is compared and a sample counts as agreeing when it lies within three standard errors.
        """
        if problem.n > max_n:
            raise CapacityException(
                f'cross validation is limited to n <= {max_n} (CROSS_VALIDATE_MAX_N), got n={problem.n}')
        logger.debug(f'<compare_methods : n={problem.n} noise={noise.describe()}')
        master = cls.evolve_master(problem, noise, t_max, samples)
        if noise.gamma_ph > 0:
            effective = cls.average_trajectories(problem, noise, t_max, samples, workers)
            band = 3.0 * effective.stderr + 1e-9
        else:
            effective = DynamicsService.effective_fidelity_trace(problem, t_max, samples, noise.include_decay)
            band = np.full(samples, DETERMINISTIC_BAND)
        difference = np.abs(master.fidelity - effective.fidelity)
        report = ComparisonReport(master=master, effective=effective, max_abs_diff=float(difference.max()),
                                  within_band_fraction=float(np.mean(difference <= band)))
        logger.debug(f'>compare_methods : max_abs_diff={report.max_abs_diff:.3g}')
        return report
