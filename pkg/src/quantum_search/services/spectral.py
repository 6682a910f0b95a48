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
"""Service for the eigenanalysis of the search Hamiltonian.

The optimal eta is where the two largest eigenvalues of H_s come closest. It is located by a
geometric scan followed by golden-section refinement inside the grid cell pair around the scan
minimum, so unimodality is only assumed locally.
"""
from typing import List, Sequence, Tuple

import numpy as np
from scipy.linalg import eigh

from quantum_search.config import _Config
from quantum_search.exceptions import BracketException, ContractException, ValidationException
from quantum_search.models import GapOptimum, SearchProblem, SpectralSummary
from quantum_search.services.hamiltonian import HamiltonianService
from quantum_search.utils.helpers import golden_section_minimize, make_grid, row_sum_norm
from quantum_search.utils.logging import get_logger
from quantum_search.utils.parallel import ordered_map


logger = get_logger(__name__)

HERMITIAN_TOLERANCE = 1e-12
PHASE_TOLERANCE = 1e-10
DEGENERACY_TOLERANCE = 1e-12


def _real_if_possible(matrix: np.ndarray) -> np.ndarray:
    if np.iscomplexobj(matrix) and not np.any(matrix.imag):
        return matrix.real
    return matrix


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Make the first non-negligible component of every column real and positive."""
    magnitudes = np.abs(vectors)
    first = np.argmax(magnitudes > PHASE_TOLERANCE * magnitudes.max(axis=0), axis=0)
    pivots = vectors[first, np.arange(vectors.shape[1])]
    return vectors * (np.abs(pivots) / pivots)


def _clip_probability(value: float) -> float:
    return float(min(1.0, max(0.0, value)))


class _GapEvaluator:  # pylint: disable=too-few-public-methods
    """Top-two eigenanalysis of J + eta * P for one problem, reusing its matrices."""

    def __init__(self, problem: SearchProblem):
        if problem.n < 2:
            raise ValidationException(f'spectral analysis needs n >= 2, got n={problem.n}')
        self.n = problem.n
        self.coherent = HamiltonianService.build_coupling_matrices(problem).J
        self.projector = HamiltonianService.build_target_projector(problem.targets, problem.n)
        self.uniform = HamiltonianService.uniform_state(problem.n).real
        self.target = HamiltonianService.target_state(problem.targets, problem.n).real

    def gap(self, eta: float) -> float:
        values = eigh(self.coherent + eta * self.projector, eigvals_only=True,
                      subset_by_index=[self.n - 2, self.n - 1])
        return float(max(0.0, values[1] - values[0]))

    def summary(self, eta: float) -> SpectralSummary:
        values, vectors = eigh(self.coherent + eta * self.projector, subset_by_index=[self.n - 2, self.n - 1])
        e0, e1 = float(values[1]), float(values[0])
        gap = max(0.0, e0 - e1)
        s_amplitudes = vectors.T @ self.uniform
        w_amplitudes = vectors.T @ self.target
        if gap < DEGENERACY_TOLERANCE * max(1.0, abs(e0)):
            ov_s = _clip_probability(0.5 * float(np.sum(s_amplitudes**2)))
            ov_w = _clip_probability(0.5 * float(np.sum(w_amplitudes**2)))
            return SpectralSummary(e0=e0, e1=e1, gap=gap, ov_s0=ov_s, ov_s1=ov_s, ov_w0=ov_w, ov_w1=ov_w,
                                   degenerate=True)
        return SpectralSummary(
            e0=e0, e1=e1, gap=gap,
            ov_s0=_clip_probability(s_amplitudes[1]**2), ov_s1=_clip_probability(s_amplitudes[0]**2),
            ov_w0=_clip_probability(w_amplitudes[1]**2), ov_w1=_clip_probability(w_amplitudes[0]**2),
        )


class SpectralService:
    """Service for eigen decompositions, gap curves and the optimal eta."""

    @classmethod
    def eig_descending(cls, matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Return eigenvalues sorted descending and orthonormal eigenvectors as columns.

        Each eigenvector is normalized in phase so its first non-negligible component is real positive.
        """
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ContractException(f'expected a square matrix, got shape {matrix.shape}')
        scale = max(1.0, float(np.max(np.abs(matrix)))) if matrix.size else 1.0
        asymmetry = float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0
        if asymmetry > HERMITIAN_TOLERANCE * scale:
            raise ContractException(f'matrix is not Hermitian: max |H - H^dagger| = {asymmetry:.3e}')
        values, vectors = eigh(_real_if_possible(matrix))
        order = np.argsort(-values, kind='stable')
        return values[order], _fix_phases(vectors[:, order])

    @classmethod
    def spectral_summary(cls, problem: SearchProblem) -> SpectralSummary:
        """Return the top two eigenpairs of H_s with their overlaps on |s> and |w>."""
        return _GapEvaluator(problem).summary(problem.eta)

    @classmethod
    def gap_curve(cls, problem: SearchProblem, eta_grid: Sequence[float],
                  workers: int = 1) -> List[Tuple[float, SpectralSummary]]:
        """Return (eta, summary) for every grid point, in grid order."""
        grid = [float(eta) for eta in eta_grid]
        if not grid:
            raise ValidationException('eta grid is empty')
        if any(eta <= 0 for eta in grid) or any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValidationException('eta grid must be positive and strictly increasing')
        logger.debug(f'<gap_curve : {problem.model.describe()} n={problem.n} points={len(grid)}')
        evaluator = _GapEvaluator(problem)
        summaries = ordered_map(evaluator.summary, grid, workers)
        logger.debug('>gap_curve')
        return list(zip(grid, summaries))

    @classmethod
    def default_eta_bracket(cls, problem: SearchProblem) -> Tuple[float, float]:
        """Return the default eta bracket, widened for chains whose H_0 norm exceeds the default top."""
        coherent = HamiltonianService.build_coupling_matrices(problem).J
        return _Config.ETA_BRACKET_LOW, max(_Config.ETA_BRACKET_HIGH, 4 * row_sum_norm(coherent))

    @classmethod
    def find_eta_opt(cls, problem: SearchProblem, bracket: Tuple[float, float] = None,
                     points: int = _Config.ETA_SCAN_POINTS, rtol: float = _Config.ETA_RTOL,
                     workers: int = 1) -> GapOptimum:
        """Locate the eta minimizing the gap between the two largest eigenvalues of H_s."""
        low, high = bracket if bracket is not None else cls.default_eta_bracket(problem)
        if not 0 < low < high:
            raise ValidationException(f'eta bracket must satisfy 0 < low < high, got {low}:{high}')
        if points < 3:
            raise ValidationException(f'eta scan needs at least 3 points, got {points}')
        logger.debug(f'<find_eta_opt : {problem.model.describe()} n={problem.n} bracket={low:g}:{high:g}')

        evaluator = _GapEvaluator(problem)
        grid = make_grid(low, high, points, 'log')
        gaps = np.asarray(ordered_map(evaluator.gap, grid, workers))
        best = int(np.argmin(gaps))
        if best in (0, points - 1):
            raise BracketException(
                f'minimum of the gap lies on the bracket edge eta={grid[best]:.6g} '
                f'(bracket {low:g}:{high:g}); widen the eta bracket')

        eta_opt, gap_min = golden_section_minimize(evaluator.gap, grid[best - 1], grid[best + 1],
                                                   tol=rtol * grid[best])
        if gap_min > gaps[best]:
            eta_opt, gap_min = float(grid[best]), float(gaps[best])

        optimum = GapOptimum(eta_opt=float(eta_opt), gap_min=float(gap_min),
                             summary_at_opt=evaluator.summary(eta_opt),
                             s_residual=HamiltonianService.eigenstate_residual(problem))
        logger.debug(f'>find_eta_opt : eta_opt={optimum.eta_opt:.6g} gap_min={optimum.gap_min:.6g}')
        return optimum
