"""
Published reference values.

The campaigns compare computed constants against the numbers stored in
reference_values.yaml; this module loads and validates that file.
"""

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional

import yaml
from marshmallow import Schema, fields, post_load, validate

from src.core.schemas import load
from src.core.value import Method, Value
from src.utils.exceptions import ValidationError
from src.utils.logger import get_logger

logger = get_logger('harness.reference')

REFERENCE_FILE = os.path.join(os.path.dirname(__file__), 'reference_values.yaml')


@dataclass(frozen=True)
class ReferenceValue:
    """One published number with the tolerance it is checked to."""

    key: str
    value: float
    tolerance: float
    provenance: str
    absolute: bool = False

    @property
    def expected(self) -> Value:
        return Value(self.value, 0.0, Method.PUBLISHED_TABLE)

    def scaled_tolerance(self, multiplier: float) -> float:
        return self.tolerance * multiplier


class ReferenceValueSchema(Schema):
    key = fields.String(required=True)
    value = fields.Float(required=True, allow_nan=False)
    tolerance = fields.Float(required=True, allow_nan=False, validate=validate.Range(min=0, min_inclusive=False))
    provenance = fields.String(required=True, validate=validate.Length(min=1))
    absolute = fields.Boolean(load_default=False)

    @post_load
    def make_reference(self, data, **kwargs):
        return ReferenceValue(**data)


@lru_cache(maxsize=4)
def load_reference_values(path: Optional[str] = None) -> Dict[str, ReferenceValue]:
    """
    Load reference values keyed as '<group>.<name>', e.g. 'cn.n05'.

    Args:
        path: YAML file; defaults to the packaged reference_values.yaml

    Raises:
        FileNotFoundError: If the file does not exist
        ValidationError: If an entry is malformed
    """
    path = path or REFERENCE_FILE
    if not os.path.exists(path):
        raise FileNotFoundError(f"Reference file not found: {path}")

    with open(path, 'r', encoding='utf-8') as f:
        raw = yaml.safe_load(f) or {}

    schema = ReferenceValueSchema()
    references = {}
    for group, entries in raw.items():
        if not isinstance(entries, dict):
            raise ValidationError(f"Reference group {group} must be a mapping", field=str(group))
        for name, entry in entries.items():
            key = f"{group}.{name}"
            references[key] = load(schema, {'key': key, **entry})

    logger.debug(f"Loaded {len(references)} reference values from {path}")
    return references


def reference(key: str) -> ReferenceValue:
    """
    Look up one reference value.

    Raises:
        ValidationError: If the key is unknown
    """
    references = load_reference_values()
    if key not in references:
        raise ValidationError(f"Unknown reference value: {key}", field='key')
    return references[key]
