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
"""Numeric helpers shared by the services."""
import math
from typing import Callable, Tuple

import numpy as np

from quantum_search.exceptions import ValidationException


INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2


def golden_section_minimize(func: Callable[[float], float], low: float, high: float,
                            tol: float) -> Tuple[float, float]:
    """Golden-section search for the minimum of a unimodal func on [low, high].

    Returns (x, func(x)) for the best point evaluated once the bracket is narrower than tol.
    """
    low, high = min(low, high), max(low, high)
    width = high - low
    if width <= tol:
        mid = 0.5 * (low + high)
        return mid, func(mid)

    steps = int(math.ceil(math.log(tol / width) / math.log(INV_PHI)))

    c = low + INV_PHI_SQUARE * width
    d = low + INV_PHI * width
    yc = func(c)
    yd = func(d)

    for _ in range(steps - 1):
        if yc < yd:
            high = d
            d = c
            yd = yc
            width = INV_PHI * width
            c = low + INV_PHI_SQUARE * width
            yc = func(c)
        else:
            low = c
            c = d
            yc = yd
            width = INV_PHI * width
            d = low + INV_PHI * width
            yd = func(d)

    if yc < yd:
        return c, yc
    return d, yd


def golden_section_maximize(func: Callable[[float], float], low: float, high: float,
                            tol: float) -> Tuple[float, float]:
    """Golden-section search for the maximum of a unimodal func on [low, high]."""
    x, negated = golden_section_minimize(lambda value: -func(value), low, high, tol)
    return x, -negated


def make_grid(low: float, high: float, points: int, scale: str = 'log') -> np.ndarray:
    """Return a strictly increasing grid of points from low to high."""
    if points < 1:
        raise ValidationException(f'grid needs at least one point, got {points}')
    if scale not in ('log', 'lin'):
        raise ValidationException(f"grid scale must be 'log' or 'lin', got '{scale}'")
    if points > 1 and not high > low:
        raise ValidationException(f'grid needs low < high, got {low}:{high}')
    if scale == 'log':
        if low <= 0:
            raise ValidationException(f'log grid needs positive bounds, got {low}:{high}')
        return np.geomspace(low, high, points)
    return np.linspace(low, high, points)


def make_size_grid(low: int, high: int, points: int, scale: str = 'log') -> list:
    """Return sorted distinct chain sizes spanning low..high."""
    grid = make_grid(float(low), float(high), points, scale)
    sizes = sorted({int(round(value)) for value in grid})
    if sizes[0] < 1:
        raise ValidationException(f'chain sizes must be positive, got {low}:{high}')
    return sizes


def stable_time_step(matrix_norm: float, interval: float, safety: float) -> Tuple[float, int]:
    """Split interval into equal RK4 substeps with dt * matrix_norm <= safety.

    Returns (dt, substeps) such that dt * substeps == interval.
    """
    if interval <= 0:
        raise ValidationException(f'time interval must be positive, got {interval}')
    if matrix_norm <= 0:
        return interval, 1
    substeps = max(1, int(math.ceil(interval * matrix_norm / safety)))
    return interval / substeps, substeps


def row_sum_norm(matrix: np.ndarray) -> float:
    """Return the maximum absolute row sum of a matrix."""
    return float(np.linalg.norm(matrix, ord=np.inf))


def rk4_step(derivative: Callable[[np.ndarray], np.ndarray], state: np.ndarray, dt: float) -> np.ndarray:
    """Advance state by one classic fourth-order Runge-Kutta step of an autonomous system."""
    k1 = derivative(state)
    k2 = derivative(state + 0.5 * dt * k1)
    k3 = derivative(state + 0.5 * dt * k2)
    k4 = derivative(state + dt * k3)
    return state + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
