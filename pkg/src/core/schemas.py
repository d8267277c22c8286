"""
Marshmallow schemas for the core types.
Provides JSON serialization and validated loading of Value, GroupSpec, Bound,
VerificationRecord and campaign reports.
"""

from typing import Any, Dict

from marshmallow import Schema, fields, post_load, validate, validates_schema
from marshmallow import ValidationError as SchemaValidationError

from src.core.bound import KNOWN_OPERATIONS, PANSU_OPERATIONS, Bound, Direction, Hypothesis, Quantity
from src.core.group import GroupSpec
from src.core.record import Relation, Status, VerificationRecord
from src.core.value import Method, Value
from src.utils.exceptions import ValidationError


# ==================== VALUE SCHEMAS ====================

class ValueSchema(Schema):
    """Schema for an error-tracked value."""
    estimate = fields.Float(required=True, allow_nan=False)
    err = fields.Float(required=True, allow_nan=False, validate=validate.Range(min=0))
    method = fields.Enum(Method, by_value=True, required=True)

    @post_load
    def make_value(self, data, **kwargs):
        return Value(**data)


class GroupSpecSchema(Schema):
    """Schema for ℍₙ×ℝᵏ."""
    n = fields.Integer(required=True, strict=True, validate=validate.Range(min=0))
    k = fields.Integer(required=True, strict=True, validate=validate.Range(min=0))

    @validates_schema
    def validate_dimension(self, data, **kwargs):
        if data.get('n', 0) + data.get('k', 0) < 1:
            raise SchemaValidationError('n + k must be at least 1')

    @post_load
    def make_group(self, data, **kwargs):
        return GroupSpec(**data)


# ==================== BOUND SCHEMAS ====================

class BoundSchema(Schema):
    """Schema for a directed bound."""
    quantity = fields.Enum(Quantity, by_value=True, required=True)
    direction = fields.Enum(Direction, by_value=True, required=True)
    value = fields.Nested(ValueSchema, required=True)
    hypothesis = fields.Enum(Hypothesis, by_value=True, required=True)
    route = fields.List(
        fields.String(validate=validate.OneOf(sorted(KNOWN_OPERATIONS))),
        required=True,
        validate=validate.Length(min=1),
    )
    group = fields.Nested(GroupSpecSchema, allow_none=True, load_default=None)

    @validates_schema
    def validate_hypothesis_route(self, data, **kwargs):
        """A Pansu-conditional bound must name a Pansu operation in its route."""
        if data.get('hypothesis') == Hypothesis.PANSU_CONJECTURE:
            if not PANSU_OPERATIONS.intersection(data.get('route', [])):
                raise SchemaValidationError(
                    'pansu_conjecture bounds need pansu_isoperimetric or pleijel_pansu in route',
                    field_name='route',
                )

    @post_load
    def make_bound(self, data, **kwargs):
        return Bound(**data)


# ==================== RECORD SCHEMAS ====================

class VerificationRecordSchema(Schema):
    """Schema for one checked claim."""
    claim_id = fields.String(required=True, validate=validate.Length(min=1))
    description = fields.String(required=True)
    computed = fields.Nested(ValueSchema, required=True)
    expected = fields.Nested(ValueSchema, required=True)
    tolerance = fields.Float(required=True, allow_nan=False, validate=validate.Range(min=0))
    status = fields.Enum(Status, by_value=True, required=True)
    margin = fields.Float(required=True, allow_nan=False)
    relation = fields.Enum(Relation, by_value=True, load_default=Relation.APPROX)
    absolute = fields.Boolean(load_default=False)

    @post_load
    def make_record(self, data, **kwargs):
        return VerificationRecord(**data)


class CampaignSchema(Schema):
    """Schema for a campaign report."""
    name = fields.String(
        required=True,
        validate=validate.OneOf(['maincomp', 'pansu', 'bessel', 'hps', 'tables', 'series', 'lifting', 'all'])
    )
    tolerance_multiplier = fields.Float(required=True, validate=validate.Range(min=0.1, max=100))
    exit_status = fields.Integer(required=True, validate=validate.OneOf([0, 1]))
    passed = fields.Integer(required=True, validate=validate.Range(min=0))
    failed = fields.Integer(required=True, validate=validate.Range(min=0))
    records = fields.List(fields.Nested(VerificationRecordSchema), required=True)

    @validates_schema
    def validate_exit_status(self, data, **kwargs):
        """exit_status is 0 exactly when no record failed."""
        records = data.get('records', [])
        all_pass = all(r.passed for r in records)
        if (data.get('exit_status') == 0) != all_pass:
            raise SchemaValidationError('exit_status inconsistent with record statuses', field_name='exit_status')


# ==================== HELPERS ====================

def load(schema: Schema, data: Dict[str, Any]) -> Any:
    """
    Load data through a schema, translating marshmallow errors.

    Raises:
        ValidationError: If data does not satisfy the schema
    """
    try:
        return schema.load(data)
    except SchemaValidationError as e:
        raise ValidationError("Invalid serialized data", details={'messages': e.messages})
