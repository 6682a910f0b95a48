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
"""Command to fit the scaling for one, two and three marked nodes."""
import click

from quantum_search.models import MULTI_TARGET_HEADER, SCALING_HEADER
from quantum_search.services import ExperimentService
from quantum_search.services.experiments import DEFAULT_TARGET_SETS
from quantum_search.utils.util import cli_errors
from quantum_search.utils.writers import render_csv

from .clihelper import NumberListParamType, SizeListParamType, build_model, model_options, output_options, write_outputs


@click.command('multi-target')
@model_options
@click.option('--n', 'n', type=SizeListParamType(), default='64:512:8:log', show_default=True,
              help='Sizes as lo:hi:points:log|lin or a comma list.')
@click.option('--target-set', type=NumberListParamType(int), multiple=True,
              help='Comma separated marked nodes; repeat for several sets (default 20, 20,40 and 20,40,60).')
@output_options
@click.pass_context
@cli_errors
def multi_target(ctx, **params):
    """Write k, targets, a, b, r2 and the prefactor ratio a_k / a_1, plus the sweep of every set."""
    model = build_model(params)
    params['target_set'] = params['target_set'] or DEFAULT_TARGET_SETS
    params['workers'] = params['workers'] or ctx.obj.DEFAULT_WORKERS

    outputs = ExperimentService.multi_target_study(model, params['n'], params['target_set'], params['workers'])
    artifacts = [('multi_target.csv', render_csv(MULTI_TARGET_HEADER, (row.csv_row() for row, _ in outputs)))]
    for index, (_, dataset) in enumerate(outputs):
        artifacts.append((f'scaling_set{index + 1}.csv',
                          render_csv(SCALING_HEADER, (row.csv_row() for row in dataset.rows))))
    write_outputs('multi-target', params, artifacts)
