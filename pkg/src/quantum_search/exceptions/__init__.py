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
"""Application Specific Exceptions, to manage the simulation errors.

@cli_errors (utils.util) - a decorator to log the exception and exit with its status code

BusinessException - error, status_code - Simulation rules error
error - a description of the error
status_code - the process exit status the command line reports for this error
"""
from enum import IntEnum


class ExitStatus(IntEnum):
    """Process exit statuses of the command line."""

    SUCCESS = 0
    USAGE = 2
    CAPACITY = 3
    NUMERICAL_INSTABILITY = 4


class BusinessException(Exception):
    """Exception that adds error code and error name, that can be used for exit statuses."""

    def __init__(self, error, status_code=ExitStatus.USAGE, *args, **kwargs):
        """Return a valid BusinessException."""
        super().__init__(*args, **kwargs)
        self.error = error
        self.status_code = status_code

    def __str__(self):
        """Return the error description."""
        return str(self.error)


class ValidationException(BusinessException):
    """Invalid input: bad flags, out-of-domain distances, malformed target sets."""

    def __init__(self, error, *args, **kwargs):
        """Return a valid ValidationException."""
        super().__init__(error, ExitStatus.USAGE, *args, **kwargs)


class BracketException(ValidationException):
    """The optimum of a scan sits on the edge of the scanned bracket."""


class ContractException(ValidationException):
    """A numerical routine received input violating its contract (e.g. a non-Hermitian matrix)."""


class CapacityException(BusinessException):
    """The requested size exceeds a guard of a dense method."""

    def __init__(self, error, *args, **kwargs):
        """Return a valid CapacityException."""
        super().__init__(error, ExitStatus.CAPACITY, *args, **kwargs)


class NumericalInstabilityException(BusinessException):
    """Norm or trace growth, or loss of positivity, during integration."""

    def __init__(self, error, *args, **kwargs):
        """Return a valid NumericalInstabilityException."""
        super().__init__(error, ExitStatus.NUMERICAL_INSTABILITY, *args, **kwargs)
