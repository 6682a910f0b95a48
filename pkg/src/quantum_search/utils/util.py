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

"""Command error decorator.

A simple decorator that maps the package exceptions onto command exit statuses.
"""
import functools

import click

from quantum_search.exceptions import BusinessException, ValidationException
from quantum_search.utils.logging import get_logger


logger = get_logger('resources')


def cli_errors(f):
    """Log BusinessExceptions raised by a command and exit with their status code."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ValidationException as err:
            logger.error(f'{f.__name__}: {err}')
            raise click.UsageError(str(err)) from err
        except BusinessException as err:
            logger.error(f'{f.__name__}: {err}')
            click.echo(f'Error: {err}', err=True)
            raise click.exceptions.Exit(int(err.status_code)) from err

    return wrapper
