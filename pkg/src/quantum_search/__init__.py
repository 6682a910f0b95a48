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
"""The quantum search simulator.

Continuous-time quantum walk search on one-dimensional atom chains, with the couplings of free space,
band-gap and propagating waveguides and a dispersive cavity, closed and open-system dynamics and the
size, boundary, noise and multi-target studies built on them.
"""

from quantum_search.config import _Config
from quantum_search.utils.logging import setup_logging


setup_logging(_Config.LOG_CONF)


def main():
    """Console entry point."""
    from quantum_search.resources import CLI  # pylint: disable=import-outside-toplevel

    CLI(prog_name='quantum-search')  # pylint: disable=no-value-for-parameter
