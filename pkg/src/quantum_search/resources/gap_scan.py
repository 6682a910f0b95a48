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
"""Command to tabulate the spectral gap of H_s over a grid of eta."""
import click

from quantum_search.models import GAP_CURVE_HEADER, SearchProblem
from quantum_search.services import SpectralService
from quantum_search.utils.util import cli_errors
from quantum_search.utils.writers import render_csv

from .clihelper import (
    GridParamType, GridSpec, build_model, model_options, output_options, resolve_targets, write_outputs)


@click.command('gap-scan')
@model_options
@click.option('--n', 'n', type=click.IntRange(min=2), required=True, help='Number of atoms.')
@click.option('--target', type=int, multiple=True, help='Marked node (1-based); repeat for several (default 20).')
@click.option('--eta-grid', type=GridParamType(), default=None,
              help='lo:hi:points:log|lin (default: the eta bracket with ETA_SCAN_POINTS log points).')
@output_options
@click.pass_context
@cli_errors
def gap_scan(ctx, **params):
    """Write the gap curve: eta, gap, E0, E1 and the overlaps of |s> and |w> with both top eigenstates."""
    config = ctx.obj
    problem = SearchProblem(n=params['n'], targets=resolve_targets(params), model=build_model(params))
    params['target'] = problem.targets
    if params['eta_grid'] is None:
        low, high = SpectralService.default_eta_bracket(problem)
        params['eta_grid'] = GridSpec(low, high, config.ETA_SCAN_POINTS, 'log')
    params['workers'] = params['workers'] or config.DEFAULT_WORKERS

    curve = SpectralService.gap_curve(problem, params['eta_grid'].values(), params['workers'])
    text = render_csv(GAP_CURVE_HEADER, (summary.csv_row(eta) for eta, summary in curve))
    write_outputs('gap-scan', params, [('gap_curve.csv', text)])
