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
"""CSV and JSON persistence.

Numbers are written with 17 significant digits so every value read back is bit-identical.
Output is a pure function of its input: no timestamps, sorted JSON keys, fixed line endings.
"""
import json
import math
import os
from typing import Iterable, Sequence

import numpy as np


def format_number(value) -> str:
    """Render a number for CSV output."""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, str):
        return value
    value = float(value)
    if math.isnan(value):
        return 'nan'
    return f'{value:.17g}'


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """Return CSV text for header and rows."""
    lines = [','.join(header)]
    for row in rows:
        lines.append(','.join(format_number(value) for value in row))
    return '\n'.join(lines) + '\n'


def _to_json_value(value):
    if isinstance(value, dict):
        return {str(key): _to_json_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_json_value(item) for item in value]
    if isinstance(value, np.ndarray):
        return [_to_json_value(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return None if math.isnan(value) else value
    return value


def render_json(payload: dict) -> str:
    """Return deterministic JSON text for payload."""
    return json.dumps(_to_json_value(payload), indent=2, sort_keys=True) + '\n'


def write_text(path: str, text: str) -> str:
    """Write text to path, creating parent directories, and return the path."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(text)
    return path


def read_json(path: str) -> dict:
    """Load a JSON document."""
    with open(path, 'r', encoding='utf-8') as handle:
        return json.load(handle)
