"""Verification records: one checked numeric claim each"""

import math
from dataclasses import dataclass
from enum import Enum

from src.core.value import Number, Value, as_value
from src.utils.exceptions import ValidationError


class Status(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'


class Relation(str, Enum):
    APPROX = 'approx'
    LT = 'lt'
    LE = 'le'
    GT = 'gt'
    GE = 'ge'


@dataclass(frozen=True)
class VerificationRecord:
    """
    Result of checking one claim.

    For approximate claims the margin is the unused part of the allowed
    deviation; for one-sided claims it is the gap between the conservative
    interval ends. A negative margin always means failure.
    """

    claim_id: str
    description: str
    computed: Value
    expected: Value
    tolerance: float
    status: Status
    margin: float
    relation: Relation = Relation.APPROX
    absolute: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'status', Status(self.status))
        object.__setattr__(self, 'relation', Relation(self.relation))
        if not self.claim_id:
            raise ValidationError("claim_id must be non-empty", field='claim_id')
        if not math.isfinite(self.tolerance) or self.tolerance < 0:
            raise ValidationError(f"tolerance must be finite and non-negative, got {self.tolerance}", field='tolerance')
        if not math.isfinite(self.margin):
            raise ValidationError("margin must be finite", field='margin')

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS


def check_close(
    claim_id: str,
    description: str,
    computed: Number,
    expected: Number,
    tolerance: float,
    absolute: bool = False,
) -> VerificationRecord:
    """
    Approximate claim: |c - e| <= tol·|e| + c.err + e.err (tol·1 when absolute).
    """
    computed, expected = as_value(computed), as_value(expected)
    scale = 1.0 if absolute else abs(expected.estimate)
    allowed = tolerance * scale + computed.err + expected.err
    deviation = abs(computed.estimate - expected.estimate)
    return VerificationRecord(
        claim_id=claim_id,
        description=description,
        computed=computed,
        expected=expected,
        tolerance=tolerance,
        status=Status.PASS if deviation <= allowed else Status.FAIL,
        margin=allowed - deviation,
        relation=Relation.APPROX,
        absolute=absolute,
    )


def check_relation(
    claim_id: str,
    description: str,
    lhs: Number,
    relation: Relation,
    rhs: Number,
) -> VerificationRecord:
    """
    One-sided claim lhs <relation> rhs, decided on the conservative interval ends.
    """
    lhs, rhs = as_value(lhs), as_value(rhs)
    relation = Relation(relation)
    if relation in (Relation.LT, Relation.LE):
        gap = rhs.lower - lhs.upper
    elif relation in (Relation.GT, Relation.GE):
        gap = lhs.lower - rhs.upper
    else:
        raise ValidationError("check_relation needs a one-sided relation", field='relation')

    holds = gap > 0 if relation in (Relation.LT, Relation.GT) else gap >= 0
    return VerificationRecord(
        claim_id=claim_id,
        description=description,
        computed=lhs,
        expected=rhs,
        tolerance=0.0,
        status=Status.PASS if holds else Status.FAIL,
        margin=gap,
        relation=relation,
    )


def check_true(claim_id: str, description: str, holds: bool, margin: float = 0.0) -> VerificationRecord:
    """Record for a structural property (monotonicity, ordering) with no single value."""
    flag = Value(1.0 if holds else 0.0)
    return VerificationRecord(
        claim_id=claim_id,
        description=description,
        computed=flag,
        expected=Value(1.0),
        tolerance=0.0,
        status=Status.PASS if holds else Status.FAIL,
        margin=margin,
    )
