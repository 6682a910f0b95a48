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
"""All of the configuration for the simulator is captured here.

All items are loaded, or have Constants defined here, that supply the defaults of the services
and of the command line. Experiment parameters given on the command line always win, and the
effective values are echoed into every run manifest so a manifest replays without this module.
"""

import os

from dotenv import find_dotenv, load_dotenv


# this will load all the envars from a .env file located above the working directory
load_dotenv(find_dotenv(usecwd=True))

# Keys a named configuration may override; commands read them from the selected configuration.
# Every other key is shared, and services take it from _Config as their default.
RUN_TIME_KEYS = frozenset({'DEFAULT_TRAJECTORIES', 'TRACE_SAMPLES', 'DEBUG', 'TESTING'})

CONFIGURATION = {
    'development': 'quantum_search.config.DevConfig',
    'testing': 'quantum_search.config.TestConfig',
    'production': 'quantum_search.config.ProdConfig',
    'default': 'quantum_search.config.ProdConfig',
}


def get_named_config(config_name: str = 'production'):
    """Return the configuration object based on the name.

    :raise: KeyError: if an unknown configuration is requested
    """
    if config_name in ['production', 'staging', 'default']:
        config = ProdConfig()
    elif config_name == 'testing':
        config = TestConfig()
    elif config_name == 'development':
        config = DevConfig()
    else:
        raise KeyError(f"Unknown configuration '{config_name}'")
    return config


def _get_config(config_key: str, **kwargs):
    """Get the config from environment, falling back to the default when one is given."""
    if 'default' in kwargs:
        value = os.getenv(config_key, kwargs.get('default'))
    else:
        value = os.getenv(config_key)
    return value


class _Config():  # pylint: disable=too-few-public-methods
    """Base class configuration that should set reasonable defaults for all the other configurations."""

    PROJECT_ROOT = os.path.abspath(os.path.dirname(__file__))

    LOG_CONF = _get_config('QUANTUM_SEARCH_LOG_CONF', default=os.path.join(PROJECT_ROOT, 'logging.conf'))

    # Reproducibility
    DEFAULT_SEED = int(_get_config('DEFAULT_SEED', default=42))
    DEFAULT_WORKERS = int(_get_config('DEFAULT_WORKERS', default=1))

    # Optimal eta search
    ETA_BRACKET_LOW = float(_get_config('ETA_BRACKET_LOW', default=1e-2))
    ETA_BRACKET_HIGH = float(_get_config('ETA_BRACKET_HIGH', default=1e4))
    ETA_SCAN_POINTS = int(_get_config('ETA_SCAN_POINTS', default=200))
    ETA_RTOL = float(_get_config('ETA_RTOL', default=1e-4))

    # Optimal time search
    T_OPT_SAMPLES_PER_GAP = int(_get_config('T_OPT_SAMPLES_PER_GAP', default=400))
    T_OPT_WINDOW = float(_get_config('T_OPT_WINDOW', default=3))
    T_OPT_FALLBACK_WINDOW = float(_get_config('T_OPT_FALLBACK_WINDOW', default=10))
    T_OPT_RTOL = float(_get_config('T_OPT_RTOL', default=1e-5))
    PEAK_THRESHOLD = float(_get_config('PEAK_THRESHOLD', default=0.999))

    # Fixed-step integration
    STEP_SAFETY = float(_get_config('STEP_SAFETY', default=0.05))

    # Open system
    DEFAULT_TRAJECTORIES = int(_get_config('DEFAULT_TRAJECTORIES', default=500))
    TRAJECTORY_BATCH = int(_get_config('TRAJECTORY_BATCH', default=50))
    MASTER_EQUATION_MAX_N = int(_get_config('MASTER_EQUATION_MAX_N', default=256))
    CROSS_VALIDATE_MAX_N = int(_get_config('CROSS_VALIDATE_MAX_N', default=64))
    NOISE_TIME_WINDOW = float(_get_config('NOISE_TIME_WINDOW', default=1.5))
    TRACE_SAMPLES = int(_get_config('TRACE_SAMPLES', default=301))

    TESTING = False
    DEBUG = False


class DevConfig(_Config):  # pylint: disable=too-few-public-methods
    """Dev config."""

    TESTING = False
    DEBUG = True


class TestConfig(_Config):  # pylint: disable=too-few-public-methods
    """In support of testing only used by the py.test suite."""

    DEBUG = True
    TESTING = True

    DEFAULT_TRAJECTORIES = int(_get_config('DEFAULT_TEST_TRAJECTORIES', default=100))
    TRACE_SAMPLES = int(_get_config('TEST_TRACE_SAMPLES', default=101))


class ProdConfig(_Config):  # pylint: disable=too-few-public-methods
    """Production environment configuration."""

    TESTING = False
    DEBUG = False
