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
"""Models for fidelity traces and search results."""
from typing import Optional, Tuple

import attr
import numpy as np

from quantum_search.exceptions import NumericalInstabilityException

from .base_model import BaseModel


FIDELITY_TOLERANCE = 1e-9


def _as_array(value):
    return np.asarray(value, dtype=float)


def _optional_array(value):
    return None if value is None else np.asarray(value, dtype=float)


@attr.frozen(kw_only=True, eq=False)
class FidelityTrace(BaseModel):
    """Fidelity F(t) = |<w|psi(t)>|^2 (or <w|rho|w>) sampled on increasing times."""

    times: np.ndarray = attr.field(converter=_as_array)
    fidelity: np.ndarray = attr.field(converter=_as_array)
    stderr: Optional[np.ndarray] = attr.field(default=None, converter=_optional_array)

    def __attrs_post_init__(self):
        """Check lengths, ordering and the fidelity bound."""
        if self.times.shape != self.fidelity.shape or self.times.ndim != 1:
            raise NumericalInstabilityException('trace times and fidelity must be 1-d and of equal length')
        if self.stderr is not None and self.stderr.shape != self.times.shape:
            raise NumericalInstabilityException('trace stderr must match the time samples')
        if self.times.size > 1 and not np.all(np.diff(self.times) > 0):
            raise NumericalInstabilityException('trace times must be strictly increasing')
        if np.any(self.fidelity > 1 + FIDELITY_TOLERANCE) or np.any(self.fidelity < -FIDELITY_TOLERANCE):
            raise NumericalInstabilityException(
                f'fidelity left [0, 1]: range {self.fidelity.min()}..{self.fidelity.max()}')

    @property
    def header(self) -> Tuple[str, ...]:
        """Return the CSV header."""
        return ('t', 'fidelity', 'stderr') if self.stderr is not None else ('t', 'fidelity')

    def csv_rows(self):
        """Yield CSV rows."""
        columns = [self.times, self.fidelity] + ([self.stderr] if self.stderr is not None else [])
        return zip(*columns)

    def peak(self) -> Tuple[float, float]:
        """Return (time, fidelity) of the largest sample, the earliest one on ties."""
        index = int(np.argmax(self.fidelity))
        return float(self.times[index]), float(self.fidelity[index])


@attr.frozen(kw_only=True)
class SearchResult(BaseModel):
    """Optimal search time, the fidelity reached there and the normalized cost eta * t_opt."""

    t_opt: float
    f_max: float
    eta_used: float
    flagged: bool = False

    @property
    def eta_t_product(self) -> float:
        """Return eta * t_opt."""
        return self.eta_used * self.t_opt

    def as_json(self) -> dict:
        """Return the search-result JSON payload."""
        return {'t_opt': self.t_opt, 'f_max': self.f_max, 'eta': self.eta_used, 'eta_t': self.eta_t_product}
