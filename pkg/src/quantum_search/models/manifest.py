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
"""Model to manage the run manifest written next to every output set."""
from typing import List, Optional

import attr
from jsonschema import ValidationError, validate

from quantum_search.exceptions import ValidationException
from quantum_search.utils.run_version import get_run_version

from .base_model import BaseModel


MANIFEST_SCHEMA = {
    'type': 'object',
    'required': ['version', 'command', 'params', 'seed', 'outputs'],
    'additionalProperties': False,
    'properties': {
        'version': {'type': 'string', 'minLength': 1},
        'command': {'type': 'string', 'minLength': 1},
        'params': {'type': 'object'},
        'seed': {'type': ['integer', 'null'], 'minimum': 0},
        'outputs': {'type': 'array', 'items': {'type': 'string'}, 'minItems': 1, 'uniqueItems': True},
    },
}


@attr.frozen(kw_only=True)
class RunManifest(BaseModel):
    """Command, full parameter echo, seed and output files of one invocation."""

    command: str
    params: dict
    seed: Optional[int]
    outputs: List[str] = attr.field(converter=list)
    version: str = attr.field(factory=get_run_version)

    def as_json(self) -> dict:
        """Return the manifest JSON payload after checking it against the schema."""
        payload = {
            'version': self.version,
            'command': self.command,
            'params': dict(self.params),
            'seed': self.seed,
            'outputs': list(self.outputs),
        }
        try:
            validate(payload, MANIFEST_SCHEMA)
        except ValidationError as err:
            raise ValidationException(f'invalid run manifest: {err.message}') from err
        return payload

    @classmethod
    def from_json(cls, payload: dict) -> 'RunManifest':
        """Load a manifest payload, checking it against the schema."""
        try:
            validate(payload, MANIFEST_SCHEMA)
        except ValidationError as err:
            raise ValidationException(f'invalid run manifest: {err.message}') from err
        return cls(command=payload['command'], params=payload['params'], seed=payload['seed'],
                   outputs=payload['outputs'], version=payload['version'])
