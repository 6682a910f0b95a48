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
"""Service to run the studies: size sweeps and fits, boundary tables, noise tables and cross validation."""
from typing import List, Sequence, Tuple

import numpy as np
from scipy.stats import linregress

from quantum_search.config import _Config
from quantum_search.exceptions import BusinessException, CapacityException, ValidationException
from quantum_search.models import (
    BoundaryRow, ComparisonReport, CouplingModel, FidelityTrace, GapOptimum, MultiTargetRow, NoiseConfig, NoiseRow,
    PowerLawFit, ScalingDataset, ScalingRow, SearchProblem, SearchResult, TargetRule, validate_targets)
from quantum_search.services.dynamics import DynamicsService
from quantum_search.services.open_system import OpenSystemService
from quantum_search.services.spectral import SpectralService
from quantum_search.utils.logging import get_logger
from quantum_search.utils.parallel import ordered_map


logger = get_logger(__name__)

DEFAULT_TARGET_SETS = ((20,), (20, 40), (20, 40, 60))
METHODS = ('lindblad', 'effective', 'both')


class ExperimentService:
    """Service to orchestrate searches over sizes, targets and noise settings."""

    @classmethod
    def optimize(cls, problem: SearchProblem, bracket: Tuple[float, float] = None,
                 workers: int = 1) -> Tuple[GapOptimum, SearchResult]:
        """Return the gap optimum and the optimal search time of the noiseless problem."""
        gap = SpectralService.find_eta_opt(problem, bracket, workers=workers)
        return gap, DynamicsService.find_t_opt(problem, gap)

    @classmethod
    def sweep_sizes(cls, model: CouplingModel, n_list: Sequence[int], target_rule: TargetRule,
                    workers: int = 1, bracket: Tuple[float, float] = None) -> ScalingDataset:
        """Run eta and time optimization for every n; a failing size becomes a flagged row."""
        n_list = [int(n) for n in n_list]
        if not n_list or any(b <= a for a, b in zip(n_list, n_list[1:])):
            raise ValidationException(f'sizes must be a non-empty ascending list, got {n_list}')
        logger.debug(f'<sweep_sizes : {model.describe()} n={n_list} targets={target_rule.describe()}')

        def run(indexed):
            index, n = indexed
            logger.info(f'sweep {index + 1}/{len(n_list)} n={n}')
            try:
                problem = SearchProblem(n=n, targets=target_rule.resolve(n), model=model)
                gap, result = cls.optimize(problem, bracket)
            except BusinessException as err:
                logger.warning(f'sweep n={n} flagged: {err.error}')
                return ScalingRow(n=n, flagged=True, reason=err.error)
            return ScalingRow(n=n, eta_opt=gap.eta_opt, gap_min=gap.gap_min, t_opt=result.t_opt,
                              f_max=result.f_max, flagged=result.flagged,
                              reason='no interior fidelity peak' if result.flagged else '')

        rows = ordered_map(run, list(enumerate(n_list)), workers)
        logger.debug('>sweep_sizes')
        return ScalingDataset(model=model.describe(), target_rule=target_rule.describe(), rows=rows)

    @classmethod
    def fit_power_law(cls, dataset: ScalingDataset) -> PowerLawFit:
        """Least squares of ln(eta_opt * t_opt) on ln n; a = exp(intercept), b = slope."""
        rows = dataset.valid_rows()
        if len(rows) < 3:
            raise ValidationException(f'a power-law fit needs at least 3 valid rows, got {len(rows)}')
        fit = linregress(np.log([row.n for row in rows]), np.log([row.eta_t_product for row in rows]))
        return PowerLawFit(a=float(np.exp(fit.intercept)), b=float(fit.slope),
                           r_squared=float(np.clip(fit.rvalue ** 2, 0.0, 1.0)))

    @classmethod
    def boundary_study(cls, model: CouplingModel, n: int, target_list: Sequence[int],
                       workers: int = 1, bracket: Tuple[float, float] = None) -> List[BoundaryRow]:
        """Re-optimize eta for each single marked node and record its search result."""
        validate_targets(target_list, n)

        def run(target):
            logger.info(f'boundary w={target}')
            gap, result = cls.optimize(SearchProblem(n=n, targets=(target,), model=model), bracket)
            return BoundaryRow(w=target, eta_opt=gap.eta_opt, t_opt=result.t_opt, f_max=result.f_max)

        return ordered_map(run, list(target_list), workers)

    @classmethod
    def noise_study(cls, model: CouplingModel, n: int, targets: Sequence[int],
                    gamma_ph_list: Sequence[float], include_decay: bool, method: str = 'effective',
                    n_traj: int = _Config.DEFAULT_TRAJECTORIES, seed: int = _Config.DEFAULT_SEED,
                    samples: int = _Config.TRACE_SAMPLES, workers: int = 1,
                    bracket: Tuple[float, float] = None) -> List[Tuple[NoiseRow, FidelityTrace]]:
        """Peak fidelity per noise setting at the noiseless eta_opt, scanning [0, 1.5 T_opt].

        The first row is the closed-system reference. 'both' adds the master equation when n is small
        enough for cross validation.
        """
        if method not in METHODS:
            raise ValidationException(f"method must be one of {', '.join(METHODS)}, got '{method}'")
        if any(gamma_ph < 0 for gamma_ph in gamma_ph_list):
            raise ValidationException(f'dephasing rates must be non-negative, got {list(gamma_ph_list)}')
        if method == 'lindblad' and n > _Config.MASTER_EQUATION_MAX_N:
            raise CapacityException(
                f'master equation is limited to n <= {_Config.MASTER_EQUATION_MAX_N} '
                f'(MASTER_EQUATION_MAX_N), got n={n}')
        problem = SearchProblem(n=n, targets=targets, model=model)
        gap, result = cls.optimize(problem, bracket)
        problem = problem.with_eta(gap.eta_opt)
        t_max = _Config.NOISE_TIME_WINDOW * result.t_opt
        logger.debug(f'<noise_study : {model.describe()} n={n} eta={problem.eta:.6g} t_max={t_max:.6g}')

        closed = DynamicsService.fidelity_trace(problem, t_max, samples)
        outputs = [(cls._noise_row('noiseless', 'closed', 0.0, False, closed), closed)]
        for gamma_ph in gamma_ph_list:
            noise = NoiseConfig(gamma_ph=gamma_ph, include_decay=include_decay, n_traj=n_traj, base_seed=seed)
            logger.info(f'noise setting {noise.describe()}')
            if method in ('effective', 'both'):
                trace = OpenSystemService.average_trajectories(problem, noise, t_max, samples, workers)
                outputs.append((cls._noise_row(noise.describe(), 'effective', gamma_ph, include_decay, trace), trace))
            if method == 'lindblad' or (method == 'both' and n <= _Config.CROSS_VALIDATE_MAX_N):
                trace = OpenSystemService.evolve_master(problem, noise, t_max, samples)
                outputs.append((cls._noise_row(noise.describe(), 'lindblad', gamma_ph, include_decay, trace), trace))
            elif method == 'both':
                logger.info(f'master equation skipped for n={n} > {_Config.CROSS_VALIDATE_MAX_N}')
        logger.debug('>noise_study')
        return outputs

    @classmethod
    def _noise_row(cls, setting: str, method: str, gamma_ph: float, decay: bool,
                   trace: FidelityTrace) -> NoiseRow:
        t_at_max, f_max = trace.peak()
        return NoiseRow(setting=setting, method=method, gamma_ph=float(gamma_ph), decay=decay,
                        f_max=f_max, t_at_max=t_at_max)

    @classmethod
    def cross_validate(cls, model: CouplingModel, n: int, targets: Sequence[int], noise: NoiseConfig,
                       samples: int = _Config.TRACE_SAMPLES, workers: int = 1,
                       bracket: Tuple[float, float] = None) -> ComparisonReport:
        """Compare both open-system methods at the noiseless eta_opt over [0, 1.5 T_opt]."""
        problem = SearchProblem(n=n, targets=targets, model=model)
        if n > _Config.CROSS_VALIDATE_MAX_N:
            raise CapacityException(
                f'cross validation is limited to n <= {_Config.CROSS_VALIDATE_MAX_N} (CROSS_VALIDATE_MAX_N), got n={n}')
        gap, result = cls.optimize(problem, bracket)
        return OpenSystemService.compare_methods(problem.with_eta(gap.eta_opt), noise,
                                                 _Config.NOISE_TIME_WINDOW * result.t_opt, samples, workers)

    @classmethod
    def multi_target_study(cls, model: CouplingModel, n_list: Sequence[int],
                           target_sets: Sequence[Sequence[int]] = DEFAULT_TARGET_SETS,
                           workers: int = 1) -> List[Tuple[MultiTargetRow, ScalingDataset]]:
        """Sweep and fit each marked-node set; ratio is its prefactor over the first set's."""
        if not target_sets:
            raise ValidationException('at least one marked-node set is required')
        outputs = []
        reference = None
        for targets in target_sets:
            logger.info(f'multi-target set {list(targets)}')
            dataset = cls.sweep_sizes(model, n_list, TargetRule.fixed(*targets), workers)
            fit = cls.fit_power_law(dataset)
            reference = reference if reference is not None else fit.a
            outputs.append((MultiTargetRow(targets=targets, fit=fit, ratio=fit.a / reference), dataset))
        return outputs
