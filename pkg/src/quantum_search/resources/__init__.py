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
"""Exposes all of the commands mounted on one click group.

Every command runs one experiment, writes its files only after all computation has finished,
and leaves a run manifest next to them that the replay command can rerun.
"""
import os

import click

from quantum_search.config import CONFIGURATION, get_named_config
from quantum_search.utils.logging import setup_logging

from .boundary import boundary as BOUNDARY_COMMAND
from .cross_validate import cross_validate as CROSS_VALIDATE_COMMAND
from .gap_scan import gap_scan as GAP_SCAN_COMMAND
from .info import info as INFO_COMMAND
from .multi_target import multi_target as MULTI_TARGET_COMMAND
from .noise import noise as NOISE_COMMAND
from .replay import replay as REPLAY_COMMAND
from .search import search as SEARCH_COMMAND
from .sweep import sweep as SWEEP_COMMAND


__all__ = ('CLI',)


@click.group('quantum-search')
@click.option('--env', type=click.Choice(sorted(CONFIGURATION) + ['staging']),
              default=lambda: os.getenv('QUANTUM_SEARCH_ENV', 'production'), help='Configuration to use.')
@click.option('--log-conf', type=click.Path(exists=True, dir_okay=False), default=None,
              help='logging.conf to use instead of the packaged one.')
@click.pass_context
def CLI(ctx, env, log_conf):  # pylint: disable=invalid-name
    """Spatial search by continuous-time quantum walks on atom chains."""
    if log_conf:
        setup_logging(log_conf)
    ctx.obj = get_named_config(env)


CLI.add_command(GAP_SCAN_COMMAND)
CLI.add_command(SEARCH_COMMAND)
CLI.add_command(SWEEP_COMMAND)
CLI.add_command(BOUNDARY_COMMAND)
CLI.add_command(NOISE_COMMAND)
CLI.add_command(CROSS_VALIDATE_COMMAND)
CLI.add_command(MULTI_TARGET_COMMAND)
CLI.add_command(INFO_COMMAND)
CLI.add_command(REPLAY_COMMAND)
