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
"""Matrices of the single-excitation sector.

Basis state j (zero-based here, node j + 1 of the chain) has atom j excited and all others in the
ground state. State vectors are plain complex numpy arrays of length n.
"""
import attr
import numpy as np

from .base_model import BaseModel


@attr.frozen(kw_only=True, eq=False)
class CouplingMatrices(BaseModel):
    """Coherent couplings J and collective decay rates G, both real symmetric n x n."""

    J: np.ndarray  # pylint: disable=invalid-name
    G: np.ndarray  # pylint: disable=invalid-name

    @property
    def n(self) -> int:
        """Return the number of atoms."""
        return self.J.shape[0]


@attr.frozen(kw_only=True, eq=False)
class SearchHamiltonian(BaseModel):
    """Hermitian H_s = H_0 + eta * |w><w|."""

    H: np.ndarray  # pylint: disable=invalid-name
    eta: float


@attr.frozen(kw_only=True, eq=False)
class EffectiveHamiltonian(BaseModel):
    """Non-Hermitian H_eff = H_0 - (i/2) G + eta * |w><w|; equal to H_s when decay is off."""

    H: np.ndarray  # pylint: disable=invalid-name
    eta: float
    include_decay: bool
