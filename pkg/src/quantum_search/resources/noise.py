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
"""Command to measure the peak fidelity under decay and dephasing."""
import click

from quantum_search.models import NOISE_HEADER
from quantum_search.services import ExperimentService
from quantum_search.services.experiments import METHODS
from quantum_search.utils.util import cli_errors
from quantum_search.utils.writers import render_csv

from .clihelper import build_model, model_options, output_options, resolve_targets, resolve_trajectories, write_outputs


@click.command('noise')
@model_options
@click.option('--n', 'n', type=click.IntRange(min=2), required=True, help='Number of atoms.')
@click.option('--target', type=int, multiple=True, help='Marked node (1-based); repeat for several (default 20).')
@click.option('--dephasing', type=click.FloatRange(min=0), multiple=True,
              help='Dephasing rate gamma_ph in units of gamma; repeat for several (default 0).')
@click.option('--decay/--no-decay', default=False, help='Include collective decay.')
@click.option('--method', type=click.Choice(METHODS), default='effective', show_default=True)
@click.option('--trajectories', type=click.IntRange(min=1), default=None,
              help='Trajectories per setting (default DEFAULT_TRAJECTORIES).')
@click.option('--seed', type=click.IntRange(min=0), default=None, help='Base seed (default DEFAULT_SEED).')
@click.option('--samples', type=click.IntRange(min=2), default=None, help='Trace samples (default TRACE_SAMPLES).')
@click.option('--eta-bracket', type=(float, float), default=None, help='lo hi of the eta scan.')
@output_options
@click.pass_context
@cli_errors
def noise(ctx, **params):
    """Write the peak fidelity per setting and method, plus every fidelity trace."""
    config = ctx.obj
    model = build_model(params)
    params['target'] = resolve_targets(params)
    params['dephasing'] = params['dephasing'] or (0.0,)
    params['trajectories'] = resolve_trajectories(params, config)
    params['seed'] = config.DEFAULT_SEED if params['seed'] is None else params['seed']
    params['samples'] = params['samples'] or config.TRACE_SAMPLES
    params['workers'] = params['workers'] or config.DEFAULT_WORKERS

    outputs = ExperimentService.noise_study(
        model, params['n'], params['target'], params['dephasing'], params['decay'], params['method'],
        n_traj=params['trajectories'], seed=params['seed'], samples=params['samples'], workers=params['workers'],
        bracket=params['eta_bracket'])
    artifacts = [('noise.csv', render_csv(NOISE_HEADER, (row.csv_row() for row, _ in outputs)))]
    for index, (row, trace) in enumerate(outputs):
        artifacts.append((f'noise_trace_{index:02d}_{row.method}.csv', render_csv(trace.header, trace.csv_rows())))
    write_outputs('noise', params, artifacts, seed=params['seed'])
