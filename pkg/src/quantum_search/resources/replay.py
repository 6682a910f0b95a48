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
"""Command to rerun the command recorded in a run manifest."""
import click

from quantum_search.exceptions import ValidationException
from quantum_search.models import RunManifest
from quantum_search.utils.logging import get_logger
from quantum_search.utils.util import cli_errors
from quantum_search.utils.writers import read_json


logger = get_logger('resources')

NOT_REPLAYABLE = ('replay', 'info')


@click.command('replay')
@click.argument('manifest', type=click.Path(exists=True, dir_okay=False))
@click.option('--out', type=click.Path(file_okay=False), default=None,
              help='Write into this directory instead of the recorded one.')
@click.pass_context
@cli_errors
def replay(ctx, manifest, out):
    """Invoke the recorded command with its echoed parameters."""
    try:
        recorded = RunManifest.from_json(read_json(manifest))
    except ValueError as err:
        raise ValidationException(f'{manifest} is not a JSON document: {err}') from err
    command = ctx.parent.command.get_command(ctx, recorded.command) if ctx.parent else None
    if command is None or recorded.command in NOT_REPLAYABLE:
        raise ValidationException(f"manifest command '{recorded.command}' cannot be replayed")

    params = dict(recorded.params)
    if out is not None:
        params['out'] = out
    known = {param.name: param for param in command.params}
    unknown = sorted(set(params) - set(known))
    if unknown:
        raise ValidationException(f'manifest parameters {unknown} are not options of {recorded.command}')
    logger.info(f'replay {recorded.command} (recorded by {recorded.version})')
    converted = {name: known[name].type_cast_value(ctx, value) for name, value in params.items()}
    ctx.invoke(command, **converted)
