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
"""Meta information about the simulator.

Currently this only provides the version and the available coupling models.
"""
import click

from quantum_search.models import MODELS
from quantum_search.utils.run_version import get_run_version


@click.command('info')
@click.pass_context
def info(ctx):
    """Print the version, the configuration in use and the coupling models."""
    click.echo(f'quantum_search/{get_run_version()}')
    click.echo(f'config: {type(ctx.obj).__name__}')
    click.echo(f"models: {', '.join(sorted(MODELS))}")
