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
"""Command to sweep the chain size and fit eta_opt * t_opt = a * n^b."""
import click

from quantum_search.models import SCALING_HEADER, TargetRule
from quantum_search.services import ExperimentService
from quantum_search.utils.util import cli_errors
from quantum_search.utils.writers import render_csv, render_json

from .clihelper import SizeListParamType, build_model, model_options, output_options, resolve_targets, write_outputs


@click.command('sweep')
@model_options
@click.option('--n', 'n', type=SizeListParamType(), default='64:512:8:log', show_default=True,
              help='Sizes as lo:hi:points:log|lin or a comma list.')
@click.option('--target', type=int, multiple=True, help='Node marked at every size; repeat for several (default 20).')
@click.option('--target-fraction', type=click.FloatRange(min=0, max=1, min_open=True), default=None,
              help='Mark node round(fraction * n) instead of fixed nodes.')
@click.option('--eta-bracket', type=(float, float), default=None, help='lo hi of the eta scan.')
@click.option('--fit/--no-fit', default=False, help='Also write the power-law fit.')
@output_options
@click.pass_context
@cli_errors
def sweep(ctx, **params):
    """Write one scaling row per size: n, eta_opt, gap_min, t_gap, t_opt, f_max, eta_t."""
    config = ctx.obj
    model = build_model(params)
    if params['target_fraction'] is not None:
        rule = TargetRule.proportional(params['target_fraction'])
    else:
        params['target'] = resolve_targets(params)
        rule = TargetRule.fixed(*params['target'])
    params['workers'] = params['workers'] or config.DEFAULT_WORKERS

    dataset = ExperimentService.sweep_sizes(model, params['n'], rule, params['workers'], params['eta_bracket'])
    artifacts = [('scaling.csv', render_csv(SCALING_HEADER, (row.csv_row() for row in dataset.rows)))]
    if params['fit']:
        artifacts.append(('fit.json', render_json(ExperimentService.fit_power_law(dataset).as_json())))
    write_outputs('sweep', params, artifacts)
