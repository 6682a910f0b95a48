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
"""Models for the size sweeps, fits and study tables."""
import math
from typing import List, Optional, Tuple

import attr

from quantum_search.exceptions import ValidationException

from .base_model import BaseModel
from .trace import FidelityTrace


SCALING_HEADER = ('n', 'eta_opt', 'gap_min', 't_gap', 't_opt', 'f_max', 'eta_t')
BOUNDARY_HEADER = ('w', 'eta_opt', 't_opt', 'f_max')
NOISE_HEADER = ('setting', 'method', 'gamma_ph', 'decay', 'f_max', 't_at_max')
MULTI_TARGET_HEADER = ('k', 'targets', 'a', 'b', 'r2', 'ratio')

NAN = float('nan')


@attr.frozen(kw_only=True)
class TargetRule(BaseModel):
    """How the marked nodes are chosen for each chain size.

    kind 'fixed' marks the given nodes at every n; kind 'proportional' marks node round(fraction * n).
    """

    kind: str = attr.field(default='fixed')
    nodes: Tuple[int, ...] = attr.field(default=(20,), converter=tuple)
    fraction: Optional[float] = attr.field(default=None)

    @kind.validator
    def _check_kind(self, _attribute, value):
        if value not in ('fixed', 'proportional'):
            raise ValidationException(f"target rule must be 'fixed' or 'proportional', got '{value}'")

    @fraction.validator
    def _check_fraction(self, _attribute, value):
        if self.kind == 'proportional' and (value is None or not 0 < value <= 1):
            raise ValidationException(f'proportional target rule needs 0 < fraction <= 1, got {value}')

    @classmethod
    def fixed(cls, *nodes: int) -> 'TargetRule':
        """Mark the same nodes at every n."""
        return cls(kind='fixed', nodes=tuple(nodes))

    @classmethod
    def proportional(cls, fraction: float) -> 'TargetRule':
        """Mark node round(fraction * n)."""
        return cls(kind='proportional', nodes=(), fraction=fraction)

    def resolve(self, n: int) -> Tuple[int, ...]:
        """Return the marked nodes for a chain of n atoms."""
        if self.kind == 'fixed':
            return tuple(self.nodes)
        return (min(n, max(1, int(round(self.fraction * n)))),)

    def describe(self) -> str:
        """Return fixed(20,40) or proportional(0.25)."""
        if self.kind == 'fixed':
            return f"fixed({','.join(str(node) for node in self.nodes)})"
        return f'proportional({self.fraction:g})'


@attr.frozen(kw_only=True)
class ScalingRow(BaseModel):
    """One chain size of a sweep."""

    n: int
    eta_opt: float = NAN
    gap_min: float = NAN
    t_opt: float = NAN
    f_max: float = NAN
    flagged: bool = False
    reason: str = ''

    @property
    def t_gap(self) -> float:
        """Return pi / gap_min."""
        return math.pi / self.gap_min if self.gap_min != 0 else math.inf

    @property
    def eta_t_product(self) -> float:
        """Return eta_opt * t_opt."""
        return self.eta_opt * self.t_opt

    def csv_row(self) -> tuple:
        """Return the scaling CSV row."""
        return (self.n, self.eta_opt, self.gap_min, self.t_gap, self.t_opt, self.f_max, self.eta_t_product)


@attr.frozen(kw_only=True)
class ScalingDataset(BaseModel):
    """Rows of a sweep sorted by n, with the model and target rule that produced them."""

    model: str
    target_rule: str
    rows: List[ScalingRow] = attr.field(converter=lambda rows: sorted(rows, key=lambda row: row.n))

    def valid_rows(self) -> List[ScalingRow]:
        """Return rows usable for fitting."""
        return [row for row in self.rows
                if not row.flagged and math.isfinite(row.eta_t_product) and row.eta_t_product > 0]


@attr.frozen(kw_only=True)
class PowerLawFit(BaseModel):
    """Least-squares fit eta_opt * t_opt = a * n^b on log-log axes."""

    a: float
    b: float
    r_squared: float

    def as_json(self) -> dict:
        """Return the fit JSON payload."""
        return {'a': self.a, 'b': self.b, 'r2': self.r_squared}


@attr.frozen(kw_only=True)
class BoundaryRow(BaseModel):
    """Search result for one marked-node position."""

    w: int
    eta_opt: float
    t_opt: float
    f_max: float

    def csv_row(self) -> tuple:
        """Return the boundary CSV row."""
        return (self.w, self.eta_opt, self.t_opt, self.f_max)


@attr.frozen(kw_only=True)
class NoiseRow(BaseModel):
    """Peak fidelity for one noise setting and method."""

    setting: str
    method: str
    gamma_ph: float
    decay: bool
    f_max: float
    t_at_max: float

    def csv_row(self) -> tuple:
        """Return the noise CSV row."""
        return (self.setting, self.method, self.gamma_ph, self.decay, self.f_max, self.t_at_max)


@attr.frozen(kw_only=True)
class MultiTargetRow(BaseModel):
    """Power-law fit for one marked-node set and its prefactor relative to the single-node set."""

    targets: Tuple[int, ...] = attr.field(converter=tuple)
    fit: PowerLawFit
    ratio: float

    @property
    def k(self) -> int:
        """Return the number of marked nodes."""
        return len(self.targets)

    def csv_row(self) -> tuple:
        """Return the multi-target CSV row."""
        return (self.k, ' '.join(str(node) for node in self.targets), self.fit.a, self.fit.b,
                self.fit.r_squared, self.ratio)


@attr.frozen(kw_only=True, eq=False)
class ComparisonReport(BaseModel):
    """Master equation against effective-Hamiltonian traces on a shared time grid."""

    master: FidelityTrace
    effective: FidelityTrace
    max_abs_diff: float
    within_band_fraction: float

    def as_json(self, me_trace_csv: str, eff_trace_csv: str) -> dict:
        """Return the comparison JSON payload referencing the written trace files."""
        return {
            'max_abs_diff': self.max_abs_diff,
            'within_band_fraction': self.within_band_fraction,
            'me_trace_csv': me_trace_csv,
            'eff_trace_csv': eff_trace_csv,
        }
