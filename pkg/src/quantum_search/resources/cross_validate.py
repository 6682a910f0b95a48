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
"""Command to cross-validate the master equation against the effective-Hamiltonian method."""
import click

from quantum_search.models import NoiseConfig
from quantum_search.services import ExperimentService
from quantum_search.utils.util import cli_errors
from quantum_search.utils.writers import render_csv, render_json

from .clihelper import build_model, model_options, output_options, resolve_targets, resolve_trajectories, write_outputs


@click.command('cross-validate')
@model_options
@click.option('--n', 'n', type=click.IntRange(min=2), required=True,
              help='Number of atoms (at most CROSS_VALIDATE_MAX_N).')
@click.option('--target', type=int, multiple=True, help='Marked node (1-based); repeat for several (default 20).')
@click.option('--dephasing', type=click.FloatRange(min=0), default=0.0, show_default=True,
              help='Dephasing rate gamma_ph in units of gamma.')
@click.option('--decay/--no-decay', default=False, help='Include collective decay.')
@click.option('--trajectories', type=click.IntRange(min=2), default=None,
              help='Trajectories (default DEFAULT_TRAJECTORIES).')
@click.option('--seed', type=click.IntRange(min=0), default=None, help='Base seed (default DEFAULT_SEED).')
@click.option('--samples', type=click.IntRange(min=2), default=None, help='Trace samples (default TRACE_SAMPLES).')
@click.option('--eta-bracket', type=(float, float), default=None, help='lo hi of the eta scan.')
@output_options
@click.pass_context
@cli_errors
def cross_validate(ctx, **params):
    """Write both fidelity traces and a report with the largest difference and the agreement fraction."""
    config = ctx.obj
    model = build_model(params)
    params['target'] = resolve_targets(params)
    params['trajectories'] = resolve_trajectories(params, config)
    params['seed'] = config.DEFAULT_SEED if params['seed'] is None else params['seed']
    params['samples'] = params['samples'] or config.TRACE_SAMPLES
    params['workers'] = params['workers'] or config.DEFAULT_WORKERS
    noise_config = NoiseConfig(gamma_ph=params['dephasing'], include_decay=params['decay'],
                               n_traj=params['trajectories'], base_seed=params['seed'])

    report = ExperimentService.cross_validate(model, params['n'], params['target'], noise_config,
                                              params['samples'], params['workers'], params['eta_bracket'])
    write_outputs('cross-validate', params, [
        ('comparison.json', render_json(report.as_json('me_trace.csv', 'eff_trace.csv'))),
        ('me_trace.csv', render_csv(report.master.header, report.master.csv_rows())),
        ('eff_trace.csv', render_csv(report.effective.header, report.effective.csv_rows())),
    ], seed=params['seed'])
