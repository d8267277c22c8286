"""Campaign runner - evaluates claim lists and aggregates them into a report"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from joblib import Parallel, delayed

from src.core.record import VerificationRecord, check_true
from src.core.schemas import CampaignSchema
from src.harness.claims import (
    Claim,
    bessel_claims,
    hps_claims,
    lifting_claims,
    maincomp_claims,
    pansu_claims,
    series_claims,
    tables_claims,
)
from src.utils.exceptions import SpectralConstantsError, ValidationError
from src.utils.logger import get_logger
from src.utils.logging_config import OperationLogger
from src.utils.validators import validate_range

logger = get_logger('harness.campaigns')

MIN_TOLERANCE_MULTIPLIER = 0.1
MAX_TOLERANCE_MULTIPLIER = 100.0

CAMPAIGNS: Dict[str, Callable[[], List[Claim]]] = {
    'maincomp': maincomp_claims,
    'pansu': pansu_claims,
    'bessel': bessel_claims,
    'hps': hps_claims,
    'tables': tables_claims,
    'series': series_claims,
    'lifting': lifting_claims,
}
CAMPAIGN_NAMES = tuple(CAMPAIGNS) + ('all',)


@dataclass(frozen=True)
class Campaign:
    """Records of one campaign run, sorted by claim_id."""

    name: str
    tolerance_multiplier: float
    records: Tuple[VerificationRecord, ...]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.passed)

    @property
    def failed(self) -> int:
        return len(self.records) - self.passed

    @property
    def exit_status(self) -> int:
        return 0 if self.failed == 0 else 1

    @property
    def failures(self) -> List[VerificationRecord]:
        return [r for r in self.records if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return CampaignSchema().dump({
            'name': self.name,
            'tolerance_multiplier': self.tolerance_multiplier,
            'exit_status': self.exit_status,
            'passed': self.passed,
            'failed': self.failed,
            'records': list(self.records),
        })


def campaign_claims(name: str) -> List[Claim]:
    """
    Claim list of a named campaign; 'all' is the union of the others.

    Raises:
        ValidationError: If the name is unknown
    """
    if name == 'all':
        return [claim for builder in CAMPAIGNS.values() for claim in builder()]
    if name not in CAMPAIGNS:
        raise ValidationError(f"Unknown campaign: {name}", field='name',
                              details={'choices': list(CAMPAIGN_NAMES)})
    return CAMPAIGNS[name]()


def evaluate_claim(claim: Claim, tolerance_multiplier: float = 1.0) -> VerificationRecord:
    """
    Evaluate one claim. A library error becomes a failed record, never an exception.
    """
    try:
        record = claim.evaluate(tolerance_multiplier)
    except SpectralConstantsError as e:
        logger.warning(f"Claim {claim.claim_id} raised {e.error_code}: {e.message}")
        return check_true(claim.claim_id, f"raised {e.error_code}: {e.message}", False)

    if record.claim_id != claim.claim_id:
        raise ValidationError(f"Claim {claim.claim_id} produced a record for {record.claim_id}",
                              field='claim_id')
    return record


def _sorted_unique(records: List[VerificationRecord]) -> Tuple[VerificationRecord, ...]:
    ordered = sorted(records, key=lambda r: r.claim_id)
    for previous, current in zip(ordered, ordered[1:]):
        if previous.claim_id == current.claim_id:
            raise ValidationError(f"Duplicate claim id: {current.claim_id}", field='claim_id')
    return tuple(ordered)


def run_campaign(name: str, tolerance_multiplier: float = 1.0, workers: int = 1) -> Campaign:
    """
    Run a verification campaign.

    Args:
        name: One of maincomp, pansu, bessel, hps, tables, series, lifting, all
        tolerance_multiplier: Scales every approximate tolerance (0.1 to 100)
        workers: joblib n_jobs; 1 evaluates in process

    Returns:
        Campaign with records sorted by claim_id

    Raises:
        RangeError: If the multiplier is outside [0.1, 100]
        ValidationError: If the name is unknown
    """
    tolerance_multiplier = validate_range(
        tolerance_multiplier, MIN_TOLERANCE_MULTIPLIER, MAX_TOLERANCE_MULTIPLIER, 'tolerance_multiplier'
    )
    claims = campaign_claims(name)

    with OperationLogger('campaign', campaign=name, claims=len(claims)) as op:
        records = Parallel(n_jobs=workers)(
            delayed(evaluate_claim)(claim, tolerance_multiplier) for claim in claims
        )
        campaign = Campaign(name, tolerance_multiplier, _sorted_unique(records))
        op.add_context('failed', campaign.failed)

    for record in campaign.failures:
        logger.warning(f"FAIL {record.claim_id}: {record.description} (margin {record.margin:.3e})")
    logger.info(f"Campaign {name}: {campaign.passed} passed, {campaign.failed} failed")
    return campaign
