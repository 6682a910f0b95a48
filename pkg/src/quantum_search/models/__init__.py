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

"""This exports all of the models used by the simulator."""
from .base_model import BaseModel
from .coupling import (
    MODELS, UNITS, Cavity, CouplingModel, FreeSpace, PurePowerLaw, UnitConvention, WaveguideBandgap,
    WaveguidePropagating, coupling_cavity, coupling_free_space, coupling_pure_power_law, coupling_waveguide_bandgap,
    coupling_waveguide_propagating)
from .experiment import (
    BOUNDARY_HEADER, MULTI_TARGET_HEADER, NOISE_HEADER, SCALING_HEADER, BoundaryRow, ComparisonReport,
    MultiTargetRow, NoiseRow, PowerLawFit, ScalingDataset, ScalingRow, TargetRule)
from .hamiltonian import CouplingMatrices, EffectiveHamiltonian, SearchHamiltonian
from .manifest import RunManifest
from .noise_config import NoiseConfig
from .search_problem import SearchProblem, validate_targets
from .spectral import GAP_CURVE_HEADER, GapOptimum, SpectralSummary
from .trace import FidelityTrace, SearchResult
