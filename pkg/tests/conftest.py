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

"""Common setup and fixtures for the py-test suite used by the simulator."""
import numpy as np
import pytest
from click.testing import CliRunner

from quantum_search.config import get_named_config
from quantum_search.models import Cavity, FreeSpace, SearchProblem
from quantum_search.resources import CLI


@pytest.fixture(scope='session')
def app():
    """Return the session-wide configuration in TEST mode."""
    return get_named_config('testing')


@pytest.fixture(scope='function')
def runner():
    """Return a click test runner."""
    return CliRunner(mix_stderr=False)


@pytest.fixture(scope='function')
def invoke(runner):  # pylint: disable=redefined-outer-name
    """Return a function invoking the command line under the testing configuration."""
    def _invoke(*args):
        return runner.invoke(CLI, ['--env', 'testing', *[str(arg) for arg in args]])
    return _invoke


@pytest.fixture(scope='session')
def cavity():
    """Return the cavity model with j_c = 10."""
    return Cavity(j_c=10.0)


@pytest.fixture(scope='session')
def cavity_problem(cavity):  # pylint: disable=redefined-outer-name
    """Return a 16 atom cavity chain searching node 3."""
    return SearchProblem(n=16, targets=(3,), model=cavity)


@pytest.fixture(scope='session')
def free_space_problem():
    """Return a 6 atom free-space chain searching node 2 at eta = 1."""
    return SearchProblem(n=6, targets=(2,), model=FreeSpace(), eta=1.0)


@pytest.fixture(scope='function')
def rng():
    """Return a seeded random generator."""
    return np.random.default_rng(1234)
