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
"""Model to manage a spatial search problem."""
from typing import Sequence, Tuple

import attr
import numpy as np

from quantum_search.exceptions import ValidationException

from .base_model import BaseModel, non_negative
from .coupling import CouplingModel


def validate_targets(targets: Sequence[int], n: int) -> Tuple[int, ...]:
    """Return targets as a tuple after checking they are distinct nodes of 1..n."""
    targets = tuple(int(target) for target in targets)
    if not targets:
        raise ValidationException('at least one marked node is required')
    if len(set(targets)) != len(targets):
        raise ValidationException(f'marked nodes must be distinct, got {list(targets)}')
    out_of_range = [target for target in targets if not 1 <= target <= n]
    if out_of_range:
        raise ValidationException(f'marked nodes {out_of_range} outside 1..{n}')
    return targets


@attr.frozen(kw_only=True)
class SearchProblem(BaseModel):
    """Chain of n atoms, its marked nodes (1-based), coupling model and target strength eta."""

    n: int = attr.field(converter=int)
    targets: Tuple[int, ...] = attr.field(converter=tuple)
    model: CouplingModel
    eta: float = attr.field(default=0.0, converter=float, validator=non_negative)

    @n.validator
    def _check_n(self, _attribute, value):
        if value < 1:
            raise ValidationException(f'chain needs at least one atom, got n={value}')

    @targets.validator
    def _check_targets(self, _attribute, value):
        validate_targets(value, self.n)

    @property
    def k(self) -> int:
        """Return the number of marked nodes."""
        return len(self.targets)

    @property
    def target_indices(self) -> np.ndarray:
        """Return zero-based indices of the marked nodes."""
        return np.asarray(self.targets, dtype=int) - 1

    def with_eta(self, eta: float) -> 'SearchProblem':
        """Return the same problem at another eta."""
        return self.evolve(eta=eta)

    def describe(self) -> dict:
        """Return a flat parameter echo of the problem."""
        return {
            'n': self.n,
            'targets': list(self.targets),
            'eta': self.eta,
            **self.model.parameters(),
        }
