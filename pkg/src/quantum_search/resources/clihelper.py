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
"""Shared pieces of the commands: parameter types, option groups, model and target resolution, and output.

Commands compute everything first and hand their rendered artifacts to write_outputs, which writes
them together with one run manifest echoing the effective parameters.
"""
import os
from typing import List, Sequence, Tuple

import attr
import click

from quantum_search.exceptions import ValidationException
from quantum_search.models import MODELS, CouplingModel, RunManifest
from quantum_search.utils.helpers import make_grid, make_size_grid
from quantum_search.utils.logging import get_logger
from quantum_search.utils.writers import render_json, write_text


logger = get_logger('resources')

DEFAULT_TARGETS = (20,)
PAPER_TRAJECTORIES = 500
PAPER_GAMMA_WG = 20.0
PAPER_J_C = 10.0


@attr.frozen
class GridSpec:
    """lo:hi:points:scale as given on the command line."""

    low: float
    high: float
    points: int
    scale: str = 'log'

    def values(self):
        """Return the grid points."""
        return make_grid(self.low, self.high, self.points, self.scale)

    def __str__(self):
        return f'{self.low:.17g}:{self.high:.17g}:{self.points}:{self.scale}'


class GridParamType(click.ParamType):
    """Parse lo:hi:points[:log|lin]."""

    name = 'lo:hi:points:scale'

    def convert(self, value, param, ctx):
        """Return a GridSpec."""
        if isinstance(value, GridSpec):
            return value
        parts = str(value).split(':')
        if len(parts) not in (3, 4):
            self.fail(f"expected lo:hi:points[:log|lin], got '{value}'", param, ctx)
        try:
            spec = GridSpec(float(parts[0]), float(parts[1]), int(parts[2]), parts[3] if len(parts) == 4 else 'log')
            spec.values()
        except ValueError:
            self.fail(f"expected numbers in '{value}'", param, ctx)
        except ValidationException as err:
            self.fail(err.error, param, ctx)
        return spec


class SizeListParamType(click.ParamType):
    """Parse chain sizes: lo:hi:points[:log|lin], a comma list or a single size."""

    name = 'sizes'

    def convert(self, value, param, ctx):
        """Return a tuple of ascending sizes."""
        if isinstance(value, (list, tuple)):
            return tuple(int(size) for size in value)
        text = str(value)
        try:
            if ':' in text:
                spec = GridParamType().convert(text, param, ctx)
                return tuple(make_size_grid(spec.low, spec.high, spec.points, spec.scale))
            sizes = tuple(int(size) for size in text.split(','))
        except ValueError:
            self.fail(f"expected sizes such as 64:512:8:log or 64,128,256, got '{value}'", param, ctx)
        except ValidationException as err:
            self.fail(err.error, param, ctx)
        if any(b <= a for a, b in zip(sizes, sizes[1:])) or min(sizes) < 1:
            self.fail(f"sizes must be positive and ascending, got '{value}'", param, ctx)
        return sizes


class NumberListParamType(click.ParamType):
    """Parse a comma separated list, e.g. 20,40."""

    name = 'list'

    def __init__(self, kind=int):
        self.kind = kind

    def convert(self, value, param, ctx):
        """Return a tuple."""
        if isinstance(value, (list, tuple)):
            return tuple(self.kind(item) for item in value)
        try:
            return tuple(self.kind(item) for item in str(value).split(','))
        except ValueError:
            self.fail(f"expected a comma separated list, got '{value}'", param, ctx)


def model_options(func):
    """Attach the coupling model options."""
    options = [
        click.option('--model', 'model', type=click.Choice(sorted(MODELS)), required=True,
                     help='Physical system of the chain.'),
        click.option('--alpha', type=float, default=None, help='Exponent of the pure power law.'),
        click.option('--gamma-wg', type=float, default=None, help='Waveguide decay rate Gamma in units of gamma.'),
        click.option('--kappa', type=float, default=None, help='Band-gap decay length inverse (1/lambda_a).'),
        click.option('--jc', type=float, default=None, help='Cavity-mediated coupling in units of gamma.'),
        click.option('--spacing', type=float, default=None, help='Lattice spacing d in units of lambda_a.'),
        click.option('--paper-defaults', is_flag=True, default=False,
                     help='Gamma=20, j_c=10 and 500 trajectories unless given explicitly.'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def output_options(func):
    """Attach --out and --workers."""
    func = click.option('--workers', type=click.IntRange(min=1), default=None,
                        help='Concurrent tasks (default DEFAULT_WORKERS).')(func)
    return click.option('--out', type=click.Path(file_okay=False), default='results', show_default=True,
                        help='Output directory.')(func)


def build_model(params: dict) -> CouplingModel:
    """Return the coupling model selected by the options."""
    gamma_wg, j_c = params.get('gamma_wg'), params.get('jc')
    if params.get('paper_defaults'):
        gamma_wg = PAPER_GAMMA_WG if gamma_wg is None else gamma_wg
        j_c = PAPER_J_C if j_c is None else j_c
    return CouplingModel.from_name(params['model'], alpha=params.get('alpha'), gamma_wg=gamma_wg,
                                   kappa=params.get('kappa'), j_c=j_c, spacing=params.get('spacing'))


def resolve_targets(params: dict, defaults: Sequence[int] = DEFAULT_TARGETS) -> Tuple[int, ...]:
    """Return the --target values, or defaults (node 20 unless the command studies several) when none are given."""
    return tuple(params.get('target') or ()) or tuple(defaults)


def resolve_trajectories(params: dict, config) -> int:
    """Return --trajectories, 500 under --paper-defaults, else DEFAULT_TRAJECTORIES."""
    if params.get('trajectories') is not None:
        return params['trajectories']
    return PAPER_TRAJECTORIES if params.get('paper_defaults') else config.DEFAULT_TRAJECTORIES


def _echo(value):
    if isinstance(value, GridSpec):
        return str(value)
    if isinstance(value, tuple):
        return [_echo(item) for item in value]
    return value


def write_outputs(command: str, params: dict, artifacts: List[Tuple[str, str]], seed: int = None) -> List[str]:
    """Write rendered artifacts under params['out'], then the run manifest; return all written paths."""
    out = params['out']
    paths = [os.path.join(out, name) for name, _ in artifacts]
    manifest = RunManifest(command=command, params={key: _echo(value) for key, value in sorted(params.items())},
                           seed=seed, outputs=paths)
    manifest_text = render_json(manifest.as_json())
    for path, (_, text) in zip(paths, artifacts):
        write_text(path, text)
    manifest_path = write_text(os.path.join(out, f'{command}.manifest.json'), manifest_text)
    logger.info(f'{command}: wrote {len(paths)} file(s) to {out}')
    for path in paths + [manifest_path]:
        click.echo(path)
    return paths + [manifest_path]
