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
"""Command to run one search: optimal eta, optimal time and the fidelity trace."""
import click

from quantum_search.models import SearchProblem
from quantum_search.services import DynamicsService, ExperimentService
from quantum_search.utils.util import cli_errors
from quantum_search.utils.writers import render_csv, render_json

from .clihelper import build_model, model_options, output_options, resolve_targets, write_outputs


@click.command('search')
@model_options
@click.option('--n', 'n', type=click.IntRange(min=2), required=True, help='Number of atoms.')
@click.option('--target', type=int, multiple=True, help='Marked node (1-based); repeat for several (default 20).')
@click.option('--eta-bracket', type=(float, float), default=None, help='lo hi of the eta scan.')
@click.option('--samples', type=click.IntRange(min=2), default=None, help='Trace samples (default TRACE_SAMPLES).')
@output_options
@click.pass_context
@cli_errors
def search(ctx, **params):
    """Write the gap optimum, the search result and F(t) over three gap times."""
    config = ctx.obj
    problem = SearchProblem(n=params['n'], targets=resolve_targets(params), model=build_model(params))
    params['target'] = problem.targets
    params['samples'] = params['samples'] or config.TRACE_SAMPLES
    params['workers'] = params['workers'] or config.DEFAULT_WORKERS

    gap, result = ExperimentService.optimize(problem, params['eta_bracket'], params['workers'])
    trace = DynamicsService.fidelity_trace(problem.with_eta(gap.eta_opt), config.T_OPT_WINDOW * gap.t_gap,
                                           params['samples'])
    write_outputs('search', params, [
        ('gap_optimum.json', render_json(gap.as_json())),
        ('search.json', render_json({**result.as_json(), 'flagged': result.flagged})),
        ('fidelity.csv', render_csv(trace.header, trace.csv_rows())),
    ])
