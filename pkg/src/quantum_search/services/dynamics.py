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
"""Service for closed and non-Hermitian propagation, fidelity traces and the optimal search time."""
import math
from typing import Iterator, List, Optional

import numpy as np
from scipy.signal import find_peaks

from quantum_search.config import _Config
from quantum_search.exceptions import NumericalInstabilityException, ValidationException
from quantum_search.models import FidelityTrace, GapOptimum, SearchProblem, SearchResult
from quantum_search.services.hamiltonian import HamiltonianService
from quantum_search.services.spectral import SpectralService
from quantum_search.utils.helpers import golden_section_maximize, rk4_step, row_sum_norm, stable_time_step
from quantum_search.utils.logging import get_logger


logger = get_logger(__name__)

NORM_GROWTH_TOLERANCE = 1e-6


class Propagator:
    """exp(-iHt) for a Hermitian H from a single eigendecomposition shared by every time sample."""

    def __init__(self, hamiltonian: np.ndarray):
        self.energies, self.vectors = SpectralService.eig_descending(hamiltonian)

    def state(self, psi0: np.ndarray, t: float) -> np.ndarray:
        """Return psi(t) = V exp(-iEt) V^dagger psi0."""
        coefficients = self.vectors.conj().T @ np.asarray(psi0, dtype=complex)
        return self.vectors @ (np.exp(-1j * self.energies * t) * coefficients)

    def amplitudes(self, bra: np.ndarray, psi0: np.ndarray, times) -> np.ndarray:
        """Return <bra|psi(t)> for every t in times."""
        weights = (np.asarray(bra, dtype=complex).conj() @ self.vectors) * \
            (self.vectors.conj().T @ np.asarray(psi0, dtype=complex))
        return np.exp(-1j * np.outer(np.atleast_1d(times), self.energies)) @ weights


def _check_trace_request(t_max: float, samples: int):
    if not t_max > 0:
        raise ValidationException(f't_max must be positive, got {t_max}')
    if samples < 2:
        raise ValidationException(f'a trace needs at least 2 samples, got {samples}')


def _earliest_good_peak(values: np.ndarray, threshold: float) -> Optional[int]:
    """Index of the first interior local maximum reaching threshold * max(values)."""
    peaks, _ = find_peaks(values)
    good = peaks[values[peaks] >= threshold * values.max()]
    return int(good[0]) if good.size else None


class DynamicsService:
    """Service for time evolution of the search problem."""

    @classmethod
    def propagate_closed(cls, hamiltonian: np.ndarray, psi0: np.ndarray, t: float) -> np.ndarray:
        """Return exp(-iHt) psi0 by spectral decomposition."""
        if t == 0:
            return np.array(psi0, dtype=complex)
        return Propagator(hamiltonian).state(psi0, t)

    @classmethod
    def fidelity_trace(cls, problem: SearchProblem, t_max: float, samples: int) -> FidelityTrace:
        """Return F(t) = |<w|psi(t)>|^2 from |s> on a uniform grid over [0, t_max]."""
        _check_trace_request(t_max, samples)
        logger.debug(f'<fidelity_trace : n={problem.n} eta={problem.eta:.6g} t_max={t_max:.6g}')
        hamiltonian = HamiltonianService.build_search_hamiltonian(problem).H
        times = np.linspace(0.0, t_max, samples)
        amplitudes = Propagator(hamiltonian).amplitudes(
            HamiltonianService.target_state(problem.targets, problem.n),
            HamiltonianService.uniform_state(problem.n), times)
        trace = FidelityTrace(times=times, fidelity=np.abs(amplitudes)**2)
        logger.debug('>fidelity_trace')
        return trace

    @classmethod
    def find_t_opt(cls, problem: SearchProblem, gap_opt: GapOptimum,
                   samples_per_gap: int = _Config.T_OPT_SAMPLES_PER_GAP,
                   window: float = _Config.T_OPT_WINDOW,
                   fallback_window: float = _Config.T_OPT_FALLBACK_WINDOW,
                   rtol: float = _Config.T_OPT_RTOL,
                   threshold: float = _Config.PEAK_THRESHOLD) -> SearchResult:
        """Return the earliest fidelity peak within threshold of the scanned maximum, refined by golden section.

        The scan covers window * t_gap and is widened once to fallback_window * t_gap when no interior
        peak qualifies; a trace still without one gives a flagged result at the end of the window.
        """
        t_gap = gap_opt.t_gap
        if not math.isfinite(t_gap):
            raise NumericalInstabilityException('the spectral gap closes at eta_opt; no search time is defined')
        problem = problem.with_eta(gap_opt.eta_opt)
        logger.debug(f'<find_t_opt : n={problem.n} eta={problem.eta:.6g} t_gap={t_gap:.6g}')

        propagator = Propagator(HamiltonianService.build_search_hamiltonian(problem).H)
        target = HamiltonianService.target_state(problem.targets, problem.n)
        uniform = HamiltonianService.uniform_state(problem.n)

        def fidelity(times):
            return np.abs(propagator.amplitudes(target, uniform, times))**2

        for span in (window, fallback_window):
            times = np.linspace(0.0, span * t_gap, int(math.ceil(span * samples_per_gap)) + 1)
            values = fidelity(times)
            peak = _earliest_good_peak(values, threshold)
            if peak is not None:
                break
            logger.info(f'no fidelity peak within {span:g} t_gap for n={problem.n}')
        else:
            logger.warning(f'fidelity trace is monotone up to t={times[-1]:.6g}; flagging n={problem.n}')
            return SearchResult(t_opt=float(times[-1]), f_max=float(min(1.0, values[-1])),
                                eta_used=problem.eta, flagged=True)

        t_opt, f_max = golden_section_maximize(lambda t: float(fidelity(t)[0]), times[peak - 1], times[peak + 1],
                                               tol=rtol * times[peak])
        if f_max < values[peak]:
            t_opt, f_max = times[peak], values[peak]
        result = SearchResult(t_opt=float(t_opt), f_max=float(min(1.0, f_max)), eta_used=problem.eta)
        logger.debug(f'>find_t_opt : t_opt={result.t_opt:.6g} f_max={result.f_max:.6g}')
        return result

    @classmethod
    def _march(cls, hamiltonian: np.ndarray, psi0: np.ndarray, dt: float, steps: int) -> Iterator[np.ndarray]:
        """Yield the state after each RK4 step of d psi / dt = -i H psi."""
        def derivative(psi):
            return -1j * (hamiltonian @ psi)

        limit = (np.linalg.norm(psi0) ** 2) * (1 + NORM_GROWTH_TOLERANCE)
        psi = psi0
        for _ in range(steps):
            psi = rk4_step(derivative, psi, dt)
            if np.linalg.norm(psi) ** 2 > limit:
                raise NumericalInstabilityException(
                    f'norm grew to {np.linalg.norm(psi) ** 2:.9g} under H_eff; check the step size and decay sign')
            yield psi

    @classmethod
    def _advance(cls, hamiltonian: np.ndarray, psi0: np.ndarray, dt: float, steps: int) -> np.ndarray:
        psi = psi0
        for psi in cls._march(hamiltonian, psi0, dt, steps):
            continue
        return psi

    @classmethod
    def propagate_nonhermitian(cls, hamiltonian: np.ndarray, psi0: np.ndarray, dt: float,
                               steps: int) -> List[np.ndarray]:
        """Return [psi(0), psi(dt), ..., psi(steps * dt)] under d psi / dt = -i H_eff psi."""
        if dt <= 0 or steps < 0:
            raise ValidationException(f'need dt > 0 and steps >= 0, got dt={dt} steps={steps}')
        psi0 = np.asarray(psi0, dtype=complex)
        return [psi0] + list(cls._march(np.asarray(hamiltonian, dtype=complex), psi0, dt, steps))

    @classmethod
    def effective_fidelity_trace(cls, problem: SearchProblem, t_max: float, samples: int,
                                 include_decay: bool, safety: float = _Config.STEP_SAFETY) -> FidelityTrace:
        """Return |<w|psi(t)>|^2 of the unnormalized state evolved under H_eff from |s>.

        Each sample interval is split into equal RK4 steps no longer than safety / ||H_eff||_inf.
        """
        _check_trace_request(t_max, samples)
        logger.debug(f'<effective_fidelity_trace : n={problem.n} eta={problem.eta:.6g} decay={include_decay}')
        hamiltonian = HamiltonianService.build_effective_hamiltonian(problem, include_decay).H
        target = HamiltonianService.target_state(problem.targets, problem.n)
        times = np.linspace(0.0, t_max, samples)
        dt, substeps = stable_time_step(row_sum_norm(hamiltonian), times[1] - times[0], safety)

        psi = HamiltonianService.uniform_state(problem.n)
        fidelity = [abs(np.vdot(target, psi)) ** 2]
        for _ in range(samples - 1):
            psi = cls._advance(hamiltonian, psi, dt, substeps)
            fidelity.append(abs(np.vdot(target, psi)) ** 2)
        logger.debug('>effective_fidelity_trace')
        return FidelityTrace(times=times, fidelity=fidelity)
