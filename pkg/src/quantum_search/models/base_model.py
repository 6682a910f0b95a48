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
"""Super class to handle all operations related to base model."""
import attr
import numpy as np

from quantum_search.exceptions import ValidationException


class BaseModel():  # pylint: disable=too-few-public-methods
    """This class manages all of the base model functions."""

    def as_dict(self, recursive=True):
        """Return JSON Representation."""
        return attr.asdict(self, recurse=recursive, value_serializer=_serialize)

    def evolve(self, **changes):
        """Return a copy with the given fields replaced."""
        return attr.evolve(self, **changes)


def _serialize(_instance, _field, value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, tuple):
        return list(value)
    return value


def positive(_instance, attribute, value):
    """Attribute validator for strictly positive numbers."""
    if not value > 0:
        raise ValidationException(f'{attribute.name} must be > 0, got {value}')


def non_negative(_instance, attribute, value):
    """Attribute validator for numbers >= 0."""
    if not value >= 0:
        raise ValidationException(f'{attribute.name} must be >= 0, got {value}')
