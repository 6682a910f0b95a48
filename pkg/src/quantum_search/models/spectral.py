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
"""Models for the eigenanalysis of the search Hamiltonian."""
import math
from typing import Optional

import attr

from .base_model import BaseModel


GAP_CURVE_HEADER = ('eta', 'gap', 'E0', 'E1', 'ov_s0', 'ov_s1', 'ov_w0', 'ov_w1')


@attr.frozen(kw_only=True)
class SpectralSummary(BaseModel):
    """Top two eigenvalues of H_s, their gap and the overlaps of |s> and |w> with both eigenstates."""

    e0: float
    e1: float
    gap: float
    ov_s0: float
    ov_s1: float
    ov_w0: float
    ov_w1: float
    degenerate: bool = False

    def csv_row(self, eta: float) -> tuple:
        """Return the gap-curve CSV row for this summary at eta."""
        return (eta, self.gap, self.e0, self.e1, self.ov_s0, self.ov_s1, self.ov_w0, self.ov_w1)


@attr.frozen(kw_only=True)
class GapOptimum(BaseModel):
    """Minimum of the spectral gap over eta and its timescale t_gap = pi / gap_min."""

    eta_opt: float
    gap_min: float
    summary_at_opt: SpectralSummary
    s_residual: Optional[float] = None

    @property
    def t_gap(self) -> float:
        """Return the gap timescale."""
        return math.pi / self.gap_min if self.gap_min != 0 else math.inf

    def as_json(self) -> dict:
        """Return the gap-optimum JSON payload."""
        payload = {'eta_opt': self.eta_opt, 'gap_min': self.gap_min, 't_gap': self.t_gap}
        payload.update({key: value for key, value in self.summary_at_opt.as_dict().items()})
        if self.s_residual is not None:
            payload['s_residual'] = self.s_residual
        return payload
