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
"""Pairwise atom-atom coupling models.

Units: energies and rates in units of the free-space single-atom decay rate gamma, lengths in units
of the atomic transition wavelength lambda_a, times in units of 1/gamma. Every coupling function
takes the pair distance r (scalar or array) and returns (J, Gamma): the coherent exchange strength
and the collective decay rate between two atoms at that distance. r = 0 is not a valid distance;
the diagonal of the coupling matrices is fixed by HamiltonianService instead.
"""
import math
from typing import ClassVar, Tuple

import attr
import numpy as np

from quantum_search.exceptions import ValidationException

from .base_model import BaseModel, non_negative, positive


@attr.frozen
class UnitConvention(BaseModel):
    """Fixed unit system: gamma = 1, lambda_a = 1, k_a = 2 pi / lambda_a."""

    gamma_free: float = 1.0
    lambda_a: float = 1.0

    @property
    def k_a(self) -> float:
        """Return the transition wavenumber."""
        return 2 * math.pi / self.lambda_a


UNITS = UnitConvention()

DEFAULT_GAMMA_WG = 20.0
DEFAULT_J_C = 10.0
DEFAULT_KAPPA = 0.001
DEFAULT_ALPHA = 1.0


def _distances(r):
    distances = np.asarray(r, dtype=float)
    if np.any(~(distances > 0)):
        raise ValidationException(f'pair distance must be > 0, got {r}')
    return distances


def _pack(coherent, dissipative, scalar: bool):
    if scalar:
        return float(coherent), float(dissipative)
    return coherent, dissipative


def coupling_free_space(r) -> Tuple:
    """Dipole-dipole exchange and collective decay of perpendicular dipoles in free space."""
    distances = _distances(r)
    x = UNITS.k_a * distances
    cos_x, sin_x = np.cos(x), np.sin(x)
    coherent = 0.75 * UNITS.gamma_free * (-cos_x / x + sin_x / x**2 + cos_x / x**3)
    dissipative = 1.5 * UNITS.gamma_free * (sin_x / x + cos_x / x**2 - sin_x / x**3)
    return _pack(coherent, dissipative, distances.ndim == 0)


def coupling_pure_power_law(r, alpha: float) -> Tuple:
    """Pure power law J = r^-alpha without dissipation."""
    if not alpha > 0:
        raise ValidationException(f'alpha must be > 0, got {alpha}')
    distances = _distances(r)
    coherent = distances ** (-alpha)
    return _pack(coherent, np.zeros_like(coherent), distances.ndim == 0)


def coupling_waveguide_bandgap(r, gamma_wg: float, kappa: float) -> Tuple:
    """Evanescent exchange of a waveguide just below its band edge; dissipation is suppressed."""
    distances = _distances(r)
    coherent = 0.5 * gamma_wg * np.exp(-kappa * distances)
    return _pack(coherent, np.zeros_like(coherent), distances.ndim == 0)


def coupling_waveguide_propagating(r, gamma_wg: float) -> Tuple:
    """Waveguide above the cutoff: J = (G/2) sin(k_a r), Gamma = (G/2) cos(k_a r)."""
    distances = _distances(r)
    x = UNITS.k_a * distances
    return _pack(0.5 * gamma_wg * np.sin(x), 0.5 * gamma_wg * np.cos(x), distances.ndim == 0)


def coupling_cavity(r, j_c: float) -> Tuple:
    """Distance independent exchange through a dispersive cavity; decay takes the free-space form."""
    distances = _distances(r)
    _, dissipative = coupling_free_space(distances)
    coherent = np.full_like(distances, j_c)
    return _pack(coherent, dissipative, distances.ndim == 0)


@attr.frozen(kw_only=True)
class CouplingModel(BaseModel):
    """Physical system of the chain together with its parameters."""

    NAME: ClassVar[str] = ''
    HOPPING_SIGN: ClassVar[float] = 1.0

    spacing: float = attr.field(default=1.0, validator=positive)

    def couplings(self, r) -> Tuple:
        """Return (J, Gamma) at pair distance r."""
        raise NotImplementedError

    @property
    def self_decay(self) -> float:
        """Return the single-atom decay rate placed on the diagonal of the decay matrix."""
        raise NotImplementedError

    def parameters(self) -> dict:
        """Return the model parameters including the model name."""
        return {'model': self.NAME, **attr.asdict(self)}

    def describe(self) -> str:
        """Return a compact, stable descriptor such as cavity(j_c=10,spacing=1)."""
        values = ','.join(f'{key}={value:g}' for key, value in attr.asdict(self).items())
        return f'{self.NAME}({values})'

    @staticmethod
    def from_name(name: str, **params) -> 'CouplingModel':
        """Build a model from its command-line name, ignoring parameters set to None."""
        model_class = MODELS.get(name)
        if model_class is None:
            raise ValidationException(f"unknown model '{name}', expected one of {sorted(MODELS)}")
        accepted = {field.name for field in attr.fields(model_class)}
        kwargs = {key: value for key, value in params.items() if value is not None and key in accepted}
        return model_class(**kwargs)


@attr.frozen(kw_only=True)
class FreeSpace(CouplingModel):
    """Atom chain in an optical lattice coupled through the free-space vacuum."""

    NAME: ClassVar[str] = 'free-space'
    # The dipole exchange is negative between neighbours; |s> must sit at the top of H_0.
    HOPPING_SIGN: ClassVar[float] = -1.0

    def couplings(self, r) -> Tuple:
        """Return (J, Gamma) at pair distance r."""
        return coupling_free_space(r)

    @property
    def self_decay(self) -> float:
        """Return the single-atom decay rate placed on the diagonal of the decay matrix."""
        return UNITS.gamma_free


@attr.frozen(kw_only=True)
class PurePowerLaw(CouplingModel):
    """Synthetic power-law chain used for the dissipation-free comparison."""

    NAME: ClassVar[str] = 'power-law'

    alpha: float = attr.field(default=DEFAULT_ALPHA, validator=positive)

    def couplings(self, r) -> Tuple:
        """Return (J, Gamma) at pair distance r."""
        return coupling_pure_power_law(r, self.alpha)

    @property
    def self_decay(self) -> float:
        """Return the single-atom decay rate placed on the diagonal of the decay matrix."""
        return 0.0


@attr.frozen(kw_only=True)
class WaveguideBandgap(CouplingModel):
    """Chain coupled to a waveguide with the transition inside the band gap."""

    NAME: ClassVar[str] = 'waveguide-gap'

    gamma_wg: float = attr.field(default=DEFAULT_GAMMA_WG, validator=positive)
    kappa: float = attr.field(default=DEFAULT_KAPPA, validator=non_negative)

    def couplings(self, r) -> Tuple:
        """Return (J, Gamma) at pair distance r."""
        return coupling_waveguide_bandgap(r, self.gamma_wg, self.kappa)

    @property
    def self_decay(self) -> float:
        """Return the single-atom decay rate placed on the diagonal of the decay matrix."""
        return 0.0


@attr.frozen(kw_only=True)
class WaveguidePropagating(CouplingModel):
    """Chain coupled to the propagating modes of a waveguide above its cutoff."""

    NAME: ClassVar[str] = 'waveguide-prop'

    gamma_wg: float = attr.field(default=DEFAULT_GAMMA_WG, validator=positive)

    def couplings(self, r) -> Tuple:
        """Return (J, Gamma) at pair distance r."""
        return coupling_waveguide_propagating(r, self.gamma_wg)

    @property
    def self_decay(self) -> float:
        """Return the single-atom decay rate placed on the diagonal of the decay matrix."""
        # Table value at r -> 0, not the single-atom rate gamma_wg.
        return 0.5 * self.gamma_wg


@attr.frozen(kw_only=True)
class Cavity(CouplingModel):
    """Chain dispersively coupled to one cavity mode: a complete graph."""

    NAME: ClassVar[str] = 'cavity'

    j_c: float = attr.field(default=DEFAULT_J_C, validator=positive)

    def couplings(self, r) -> Tuple:
        """Return (J, Gamma) at pair distance r."""
        return coupling_cavity(r, self.j_c)

    @property
    def self_decay(self) -> float:
        """Return the single-atom decay rate placed on the diagonal of the decay matrix."""
        return UNITS.gamma_free


MODELS = {
    model_class.NAME: model_class
    for model_class in (FreeSpace, PurePowerLaw, WaveguideBandgap, WaveguidePropagating, Cavity)
}
