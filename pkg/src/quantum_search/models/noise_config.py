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
"""Model to manage the open-system noise settings."""
from typing import Optional

import attr

from quantum_search.exceptions import ValidationException

from .base_model import BaseModel, non_negative


@attr.frozen(kw_only=True)
class NoiseConfig(BaseModel):
    """Dephasing rate, collective decay switch and trajectory sampling settings.

    dt is optional: when None, the open-system step rule picks it from the generator norm and STEP_SAFETY.
    """

    gamma_ph: float = attr.field(default=0.0, converter=float, validator=non_negative)
    include_decay: bool = attr.field(default=False, converter=bool)
    n_traj: int = attr.field(default=500, converter=int)
    base_seed: int = attr.field(default=42, converter=int)
    dt: Optional[float] = attr.field(default=None)

    @n_traj.validator
    def _check_n_traj(self, _attribute, value):
        if value < 1:
            raise ValidationException(f'n_traj must be >= 1, got {value}')

    @base_seed.validator
    def _check_seed(self, _attribute, value):
        if not 0 <= value < 2**64:
            raise ValidationException(f'base_seed must be a 64-bit unsigned integer, got {value}')

    @dt.validator
    def _check_dt(self, _attribute, value):
        if value is not None and not value > 0:
            raise ValidationException(f'dt must be > 0, got {value}')

    def describe(self) -> str:
        """Return a short label such as decay+dephasing(1)."""
        parts = []
        if self.include_decay:
            parts.append('decay')
        if self.gamma_ph > 0:
            parts.append(f'dephasing({self.gamma_ph:g})')
        return '+'.join(parts) or 'noiseless'
