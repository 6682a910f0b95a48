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
"""Service to assemble the search Hamiltonians."""
from typing import Sequence

import numpy as np
from scipy.linalg import toeplitz

from quantum_search.models import SearchProblem, validate_targets
from quantum_search.models.hamiltonian import CouplingMatrices, EffectiveHamiltonian, SearchHamiltonian
from quantum_search.utils.logging import get_logger


logger = get_logger(__name__)


class HamiltonianService:
    """Service to build coupling matrices, projectors, states and Hamiltonians."""

    @classmethod
    def build_coupling_matrices(cls, problem: SearchProblem) -> CouplingMatrices:
        """Fill J and G from the model at r = |i - j| * d.

        The coherent diagonal is zero; the decay diagonal is the single-atom rate of the model.
        J is the exchange times the model HOPPING_SIGN, so H_0 = -J_dd for the free-space chain.
        Both matrices are Toeplitz, built from their first column so they are symmetric bit for bit.
        """
        logger.debug(f'<build_coupling_matrices : {problem.model.describe()} n={problem.n}')
        model = problem.model
        offsets = np.arange(1, problem.n, dtype=float) * model.spacing
        coherent, dissipative = model.couplings(offsets)
        coherent_column = np.concatenate(([0.0], model.HOPPING_SIGN * np.asarray(coherent, dtype=float)))
        decay_column = np.concatenate(([model.self_decay], np.asarray(dissipative, dtype=float)))
        matrices = CouplingMatrices(J=toeplitz(coherent_column), G=toeplitz(decay_column))
        logger.debug('>build_coupling_matrices')
        return matrices

    @classmethod
    def uniform_state(cls, n: int) -> np.ndarray:
        """Return |s>, the equal superposition of all n basis states."""
        return np.full(n, 1 / np.sqrt(n), dtype=complex)

    @classmethod
    def target_state(cls, targets: Sequence[int], n: int) -> np.ndarray:
        """Return |w>, the equal superposition of the marked nodes (1-based)."""
        targets = validate_targets(targets, n)
        state = np.zeros(n, dtype=complex)
        state[np.asarray(targets) - 1] = 1 / np.sqrt(len(targets))
        return state

    @classmethod
    def build_target_projector(cls, targets: Sequence[int], n: int) -> np.ndarray:
        """Return H_t = |w><w|, real symmetric with rank one and unit trace."""
        amplitudes = cls.target_state(targets, n).real
        return np.outer(amplitudes, amplitudes)

    @classmethod
    def build_search_hamiltonian(cls, problem: SearchProblem,
                                 matrices: CouplingMatrices = None) -> SearchHamiltonian:
        """Return H_s = H_0 + eta * H_t as a complex Hermitian matrix."""
        matrices = matrices or cls.build_coupling_matrices(problem)
        projector = cls.build_target_projector(problem.targets, problem.n)
        hamiltonian = matrices.J.astype(complex) + problem.eta * projector
        return SearchHamiltonian(H=hamiltonian, eta=problem.eta)

    @classmethod
    def build_effective_hamiltonian(cls, problem: SearchProblem, include_decay: bool,
                                    matrices: CouplingMatrices = None) -> EffectiveHamiltonian:
        """Return H_eff = H_0 - (i/2) G + eta * H_t, or H_s when decay is excluded.

        The decay term carries a minus sign so that the norm decays under exp(-i H_eff t).
        """
        matrices = matrices or cls.build_coupling_matrices(problem)
        hamiltonian = cls.build_search_hamiltonian(problem, matrices).H
        if include_decay:
            hamiltonian = hamiltonian - 0.5j * matrices.G
        return EffectiveHamiltonian(H=hamiltonian, eta=problem.eta, include_decay=include_decay)

    @classmethod
    def eigenstate_residual(cls, problem: SearchProblem) -> float:
        """Return || H_0|s> - <s|H_0|s>|s> ||, zero when |s> is an eigenstate of H_0."""
        matrices = cls.build_coupling_matrices(problem)
        uniform = cls.uniform_state(problem.n)
        image = matrices.J @ uniform
        expectation = np.vdot(uniform, image)
        return float(np.linalg.norm(image - expectation * uniform))
