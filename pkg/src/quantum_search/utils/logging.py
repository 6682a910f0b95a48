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
"""Centralized setup of logging for the simulator."""
import logging
import logging.config
import sys
from os import path


def setup_logging(conf):
    """Configure the package loggers from a fileConfig style file."""
    if conf and path.isfile(conf):
        logging.config.fileConfig(conf, disable_existing_loggers=False)
        print(f'Configure logging, from conf:{conf}', file=sys.stdout)
    else:
        print(f'Unable to configure logging, attempted conf:{conf}', file=sys.stderr)


def get_logger(name: str = 'quantum_search'):
    """Return a logger within the package hierarchy."""
    if not name.startswith('quantum_search'):
        name = f'quantum_search.{name}'
    return logging.getLogger(name)
