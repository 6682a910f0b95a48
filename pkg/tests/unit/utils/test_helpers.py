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
"""Tests to assure the numeric helpers.

Test-Suite to ensure that the golden-section search, the grids and the step rule behave as expected.
"""
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quantum_search.exceptions import ValidationException
from quantum_search.utils.helpers import (
    golden_section_maximize, golden_section_minimize, make_grid, make_size_grid, rk4_step, row_sum_norm,
    stable_time_step)


def test_golden_section_minimize_quadratic():
    """Assert that the minimum of a parabola is located within the tolerance."""
    x, value = golden_section_minimize(lambda x: (x - 2.0) ** 2 + 1.0, 0.0, 5.0, tol=1e-8)

    assert x == pytest.approx(2.0, abs=1e-6)
    assert value == pytest.approx(1.0, abs=1e-12)


def test_golden_section_maximize():
    """Assert that maximization returns the maximizer and the maximum."""
    x, value = golden_section_maximize(lambda x: 3.0 - (x - 1.0) ** 2, -2.0, 2.0, tol=1e-9)

    assert x == pytest.approx(1.0, abs=1e-6)
    assert value == pytest.approx(3.0, abs=1e-12)


def test_golden_section_narrow_bracket():
    """Assert that a bracket already narrower than tol returns its midpoint."""
    x, value = golden_section_minimize(lambda x: x, 1.0, 1.0 + 1e-12, tol=1e-6)

    assert x == pytest.approx(1.0 + 5e-13)
    assert value == x


@given(st.floats(min_value=0.5, max_value=9.5))
def test_golden_section_finds_any_interior_minimum(center):
    """Assert that the search converges wherever the minimum lies in the bracket."""
    x, _ = golden_section_minimize(lambda x: (x - center) ** 2, 0.0, 10.0, tol=1e-9)

    assert abs(x - center) < 1e-6


def test_make_grid_scales():
    """Assert that log and lin grids have the requested end points and spacing."""
    assert np.allclose(make_grid(1.0, 100.0, 3, 'log'), [1.0, 10.0, 100.0])
    assert np.allclose(make_grid(0.0, 1.0, 5, 'lin'), [0.0, 0.25, 0.5, 0.75, 1.0])
    assert make_grid(2.0, 2.0, 1, 'log').tolist() == [2.0]


@pytest.mark.parametrize('low,high,points,scale', [
    (1.0, 10.0, 0, 'log'),
    (1.0, 10.0, 5, 'cubic'),
    (10.0, 1.0, 5, 'lin'),
    (0.0, 10.0, 5, 'log'),
])
def test_make_grid_rejects(low, high, points, scale):
    """Assert that malformed grids raise a ValidationException."""
    with pytest.raises(ValidationException):
        make_grid(low, high, points, scale)


def test_make_size_grid():
    """Assert that size grids are distinct ascending integers spanning the range."""
    sizes = make_size_grid(64, 512, 8, 'log')

    assert sizes[0] == 64
    assert sizes[-1] == 512
    assert len(sizes) == 8
    assert sizes == sorted(set(sizes))


def test_make_size_grid_collapses_duplicates():
    """Assert that rounding duplicates are dropped."""
    assert make_size_grid(1, 3, 10, 'lin') == [1, 2, 3]


def test_stable_time_step():
    """Assert that the substeps cover the interval exactly and honour the safety bound."""
    dt, substeps = stable_time_step(10.0, 1.0, 0.05)

    assert substeps == math.ceil(10.0 / 0.05)
    assert dt * 10.0 <= 0.05 + 1e-15
    assert dt * substeps == pytest.approx(1.0, rel=1e-15)


def test_stable_time_step_without_dynamics():
    """Assert that a zero generator takes the whole interval in one step."""
    assert stable_time_step(0.0, 0.3, 0.05) == (0.3, 1)


def test_stable_time_step_rejects_empty_interval():
    """Assert that a non-positive interval is refused."""
    with pytest.raises(ValidationException):
        stable_time_step(1.0, 0.0, 0.05)


def test_row_sum_norm():
    """Assert the infinity norm of a small matrix."""
    assert row_sum_norm(np.array([[1.0, -2.0], [0.5, 0.5]])) == 3.0


def test_rk4_step_exponential():
    """Assert that one RK4 step of y' = -y matches exp(-dt) to fifth order."""
    state = rk4_step(lambda y: -y, np.array([1.0]), 0.1)

    assert state[0] == pytest.approx(math.exp(-0.1), abs=1e-7)
