"""Verification campaigns, report tables, published reference values and the CLI"""

from src.harness.campaigns import CAMPAIGN_NAMES, CAMPAIGNS, Campaign, campaign_claims, evaluate_claim, run_campaign
from src.harness.claims import Claim, maincomp_groups
from src.harness.reference import ReferenceValue, load_reference_values, reference
from src.harness.tables import TABLE_NAMES, ReportTable, build_table, emit_table

__all__ = [
    'CAMPAIGN_NAMES', 'CAMPAIGNS', 'Campaign', 'campaign_claims', 'evaluate_claim', 'run_campaign',
    'Claim', 'maincomp_groups',
    'ReferenceValue', 'load_reference_values', 'reference',
    'TABLE_NAMES', 'ReportTable', 'build_table', 'emit_table',
]
