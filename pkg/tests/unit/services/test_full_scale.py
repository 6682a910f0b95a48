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
"""Full-scale checks of the search studies.

Test-Suite to ensure that sweeps, optima, boundary tables, noise tables and the cross validation
reproduce the published figures on 64 to 512 atoms. Every test is skipped unless RUN_SLOW_TESTS is set.
"""
import math

import numpy as np
import pytest

from quantum_search.models import Cavity, FreeSpace, NoiseConfig, PurePowerLaw, TargetRule, WaveguideBandgap
from quantum_search.services import ExperimentService
from quantum_search.utils.helpers import make_size_grid
from tests import skip_slow


SIZES = make_size_grid(64, 512, 8, 'log')
WORKERS = 4

FREE_SPACE = FreeSpace()
WAVEGUIDE = WaveguideBandgap(gamma_wg=20.0, kappa=0.001)
CAVITY = Cavity(j_c=10.0)


def _sweep(model, targets=(20,)):
    dataset = ExperimentService.sweep_sizes(model, SIZES, TargetRule.fixed(*targets), WORKERS)
    assert not any(row.flagged for row in dataset.rows), [row.reason for row in dataset.rows]
    return dataset


@skip_slow
@pytest.mark.parametrize('model,exponent,b_tol,prefactor,a_rel', [
    (FREE_SPACE, 0.690, 0.05, 0.75, 0.25),
    (WaveguideBandgap(gamma_wg=20.0, kappa=0.001), 0.579, 0.05, None, None),
    (WaveguideBandgap(gamma_wg=20.0, kappa=0.0001), 0.512, 0.03, None, None),
    (CAVITY, 0.506, 0.03, 1.51, 0.20),
])
def test_scaling_fit(model, exponent, b_tol, prefactor, a_rel):
    """Assert the fitted exponent and prefactor of eta_opt * t_opt against n."""
    dataset = _sweep(model)
    fit = ExperimentService.fit_power_law(dataset)

    assert fit.b == pytest.approx(exponent, abs=b_tol)
    if prefactor is not None:
        assert fit.a == pytest.approx(prefactor, rel=a_rel)
    for row in dataset.rows:
        assert abs(row.t_opt - row.t_gap) / row.t_opt < 0.05


@skip_slow
def test_near_edge_waveguide_is_linear():
    """Assert that a short evanescent range gives an exponent close to one."""
    fit = ExperimentService.fit_power_law(_sweep(WaveguideBandgap(gamma_wg=20.0, kappa=0.005)))

    assert 0.90 <= fit.b <= 1.05


@skip_slow
@pytest.mark.parametrize('model,low,high', [
    (FREE_SPACE, 0.78, 0.92),
    (WAVEGUIDE, 0.95, 1.0),
    (CAVITY, 0.95, 1.0),
    (PurePowerLaw(alpha=0.5), 0.97, 1.0),
])
def test_noiseless_fidelity(model, low, high):
    """Assert the noiseless peak fidelity over the whole sweep."""
    for row in _sweep(model).rows:
        assert low <= row.f_max <= high + 1e-9


@skip_slow
@pytest.mark.parametrize('targets,ratio', [((20, 40), 1 / math.sqrt(2)), ((20, 40, 60), 1 / math.sqrt(3))])
def test_marked_sets_shorten_search(targets, ratio):
    """Assert that k marked nodes divide the prefactor by about sqrt(k)."""
    outputs = ExperimentService.multi_target_study(CAVITY, SIZES, [(20,), targets], WORKERS)

    assert outputs[1][0].ratio == pytest.approx(ratio, rel=0.1)


@skip_slow
@pytest.mark.parametrize('model', [FREE_SPACE, WAVEGUIDE])
def test_boundary_nodes_are_slower(model):
    """Assert that the chain ends are found later than the middle at equal fidelity."""
    rows = {row.w: row for row in ExperimentService.boundary_study(model, 500, [1, 50, 150, 250, 350, 450, 499],
                                                                    WORKERS)}

    assert rows[1].t_opt > rows[250].t_opt
    assert rows[499].t_opt > rows[250].t_opt
    fidelities = [row.f_max for row in rows.values()]
    assert max(fidelities) - min(fidelities) < 0.05


def _peaks(outputs):
    return [row.f_max for row, _ in outputs]


@skip_slow
def test_free_space_decay_destroys_search():
    """Assert that collective decay leaves the free-space chain with a small peak fidelity."""
    outputs = ExperimentService.noise_study(FREE_SPACE, 256, (20,), [0.0], True, n_traj=500, seed=42,
                                            workers=WORKERS)

    assert _peaks(outputs)[1] < 0.2


@skip_slow
@pytest.mark.parametrize('model', [WAVEGUIDE, CAVITY])
def test_enhanced_coupling_resists_noise(model):
    """Assert that decay and dephasing barely change the peak fidelity of long-range chains."""
    decay = ExperimentService.noise_study(model, 256, (20,), [0.0], True, n_traj=500, seed=42, workers=WORKERS)
    dephasing = ExperimentService.noise_study(model, 256, (20,), [1.0, 10.0], False, n_traj=500, seed=42,
                                              workers=WORKERS)

    closed, lossy = _peaks(decay)
    assert abs(lossy - closed) < 0.05
    for peak in _peaks(dephasing)[1:]:
        assert abs(peak - closed) < 0.05


@skip_slow
def test_free_space_dephasing_reduces_fidelity():
    """Assert that strong dephasing removes more than 0.3 of the free-space peak fidelity."""
    outputs = ExperimentService.noise_study(FREE_SPACE, 256, (20,), [1.0, 10.0], False, n_traj=500, seed=42,
                                            workers=WORKERS)
    closed, weak, strong = _peaks(outputs)

    assert weak < closed
    assert closed - strong > 0.3


@skip_slow
@pytest.mark.parametrize('model', [FREE_SPACE, WAVEGUIDE, CAVITY])
def test_methods_agree_on_short_chain(model):
    """Assert that master equation and effective Hamiltonian agree on 30 atoms marked at node 8."""
    decay = ExperimentService.cross_validate(model, 30, (8,), NoiseConfig(include_decay=True))
    dephasing = ExperimentService.cross_validate(model, 30, (8,), NoiseConfig(gamma_ph=1.0, n_traj=500, base_seed=42),
                                                 workers=WORKERS)

    assert decay.max_abs_diff <= 0.02
    assert dephasing.within_band_fraction >= 0.99
    assert np.array_equal(dephasing.master.times, dephasing.effective.times)
