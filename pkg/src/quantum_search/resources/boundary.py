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
"""Command to compare marked nodes across the chain, from the edges to the middle."""
import click

from quantum_search.models import BOUNDARY_HEADER
from quantum_search.services import ExperimentService
from quantum_search.utils.util import cli_errors
from quantum_search.utils.writers import render_csv

from .clihelper import build_model, model_options, output_options, resolve_targets, write_outputs


BOUNDARY_TARGETS = (1, 50, 150, 250, 350, 450, 499)


@click.command('boundary')
@model_options
@click.option('--n', 'n', type=click.IntRange(min=2), required=True, help='Number of atoms.')
@click.option('--target', type=int, multiple=True,
              help='Marked node to study; repeat for several (default: 1 50 150 250 350 450 499).')
@click.option('--eta-bracket', type=(float, float), default=None, help='lo hi of the eta scan.')
@output_options
@click.pass_context
@cli_errors
def boundary(ctx, **params):
    """Write w, eta_opt, t_opt and f_max for each marked node, eta re-optimized per node."""
    model = build_model(params)
    params['target'] = resolve_targets(params, BOUNDARY_TARGETS)
    params['workers'] = params['workers'] or ctx.obj.DEFAULT_WORKERS

    rows = ExperimentService.boundary_study(model, params['n'], params['target'], params['workers'],
                                            params['eta_bracket'])
    write_outputs('boundary', params, [('boundary.csv', render_csv(BOUNDARY_HEADER, (row.csv_row() for row in rows)))])
