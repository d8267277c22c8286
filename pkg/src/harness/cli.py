"""
Command line interface.

Usage:
    main.py constant --name weyl --n 1 --k 0
    main.py bound --quantity pleijel --n 1 --k 2 --hypothesis unconditional --all-routes
    main.py verify --suite all --tol-mult 1 --format json
    main.py table --name gamma_tilde --format csv

Exit codes: 0 success / all claims pass, 1 verification failures, 2 usage or domain error.
"""

import argparse
import json
import sys
from typing import Any, Dict, Optional, Sequence, Union

from config import get_config
from src.core.bound import Bound, Hypothesis
from src.core.group import GroupSpec
from src.core.schemas import BoundSchema, ValueSchema
from src.core.value import Value
from src.faberkrahn.routes import fk_best, fk_candidates
from src.functional.gagliardo_nirenberg import gn_from_sobolev, gn_nagy
from src.functional.lifting import best_sobolev_lift
from src.functional.sobolev import sobolev_euclidean_bound, sobolev_heisenberg_bound
from src.harness.campaigns import CAMPAIGN_NAMES, Campaign, run_campaign
from src.harness.tables import FORMATS, TABLE_NAMES, emit_table, format_number
from src.isoperimetry.constants import iso_bound_for
from src.pleijel.bounds import best_gamma_bound
from src.pleijel.gamma import gamma_euclidean
from src.utils.exceptions import DomainError, SpectralConstantsError
from src.utils.logger import get_logger
from src.weyl.cn import MAX_SERIES_N, CnMethod, cn
from src.weyl.constants import weyl_for

logger = get_logger('harness.cli')

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_ERROR = 2

CONSTANT_NAMES = ('cn', 'weyl', 'sobolev', 'gn', 'iso', 'fk')
OUTPUT_FORMATS = ('text', 'json')
HYPOTHESES = {
    'unconditional': Hypothesis.UNCONDITIONAL,
    'pansu': Hypothesis.PANSU_CONJECTURE,
}

Result = Union[Value, Bound]


# ==================== OUTPUT ====================

def _dump(result: Result) -> Dict[str, Any]:
    if isinstance(result, Bound):
        return BoundSchema().dump(result)
    return ValueSchema().dump(result)


def _text_line(label: str, result: Result) -> str:
    value = result.value if isinstance(result, Bound) else result
    line = f"{label}: estimate={format_number(value.estimate)} err={format_number(value.err)}"
    if isinstance(result, Bound):
        line += (f" direction={result.direction.value} hypothesis={result.hypothesis.value}"
                 f" route={'>'.join(result.route)}")
    else:
        line += f" method={value.method.value}"
    return line


def _write_json(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, ensure_ascii=False, indent=2) + '\n')


# ==================== COMMANDS ====================

def _group(args: argparse.Namespace) -> GroupSpec:
    return GroupSpec(args.n, args.k)


def _constant(args: argparse.Namespace) -> Result:
    g = _group(args)
    hypothesis = HYPOTHESES[args.hypothesis]
    if args.name == 'cn':
        return cn(args.n, CnMethod(args.method), args.tol).value
    if args.name == 'weyl':
        return weyl_for(g)
    if args.name == 'sobolev':
        if g.is_euclidean:
            return sobolev_euclidean_bound(g.k)
        if g.k == 0:
            return sobolev_heisenberg_bound(g.n)
        return best_sobolev_lift(g)
    if args.name == 'gn':
        if not g.is_euclidean:
            raise DomainError("Gagliardo–Nirenberg constants are Euclidean: use --n 0", {'n': g.n})
        if args.q is None:
            raise DomainError("--q is required for gn", {'name': 'gn'})
        return gn_nagy(args.q) if g.k == 1 else gn_from_sobolev(g.k, args.q)
    if args.name == 'iso':
        return iso_bound_for(g, hypothesis).bound
    return fk_best(g, hypothesis)


def cmd_constant(args: argparse.Namespace) -> int:
    """Print one constant with its error bound."""
    result = _constant(args)
    if args.format == 'json':
        _write_json({'name': args.name, 'n': args.n, 'k': args.k, 'result': _dump(result)})
    else:
        sys.stdout.write(_text_line(f"{args.name}({_group(args)})", result) + '\n')
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    """Print the best Pleijel bound, optionally with every route."""
    g = _group(args)
    hypothesis = HYPOTHESES[args.hypothesis]

    if g.is_euclidean:
        value = gamma_euclidean(g.k)
        if args.format == 'json':
            _write_json({'group': g.label, 'quantity': args.quantity, 'route': 'EuclideanExact',
                         'value': _dump(value)})
        else:
            sys.stdout.write(_text_line(f"gamma({g}) EuclideanExact", value) + '\n')
        return EXIT_OK

    best = best_gamma_bound(g, hypothesis)
    if args.format == 'json':
        payload = {
            'group': g.label,
            'quantity': args.quantity,
            'winner': best.winner.value,
            'headline': best.headline,
            'is_open': best.is_open,
            'bound': _dump(best.bound),
        }
        if args.all_routes:
            payload['candidates'] = [{'route': c.name.value, 'bound': _dump(c.bound)} for c in best.candidates]
            payload['fk_candidates'] = [{'route': c.name.value, 'bound': _dump(c.bound)}
                                        for c in fk_candidates(g, hypothesis)]
        _write_json(payload)
        return EXIT_OK

    lines = [_text_line(f"gamma({g}) upper {best.winner.value}", best.bound)]
    if best.is_open:
        lines.append(f"  no route beats Courant; headline {format_number(best.headline)}")
    if args.all_routes:
        lines.extend(_text_line(f"  candidate {c.name.value}", c.bound) for c in best.candidates)
        lines.extend(_text_line(f"  fk {c.name.value}", c.bound) for c in fk_candidates(g, hypothesis))
    sys.stdout.write('\n'.join(lines) + '\n')
    return EXIT_OK


def _campaign_text(campaign: Campaign) -> str:
    lines = []
    for r in campaign.records:
        lines.append(f"{r.status.value.upper():4} {r.claim_id} margin={format_number(r.margin)} "
                     f"computed={format_number(r.computed.estimate)} err={format_number(r.computed.err)} "
                     f"expected={format_number(r.expected.estimate)} | {r.description}")
    lines.append(f"campaign {campaign.name}: {campaign.passed} passed, {campaign.failed} failed, "
                 f"tolerance multiplier {campaign.tolerance_multiplier:g}")
    return '\n'.join(lines) + '\n'


def cmd_verify(args: argparse.Namespace) -> int:
    """Run a verification campaign; exit 1 if any claim fails."""
    workers = args.workers if args.workers is not None else get_config().CAMPAIGN_WORKERS
    campaign = run_campaign(args.suite, args.tol_mult, workers)
    if args.format == 'json':
        _write_json(campaign.to_dict())
    else:
        sys.stdout.write(_campaign_text(campaign))
    return EXIT_OK if campaign.exit_status == 0 else EXIT_FAILURES


def cmd_table(args: argparse.Namespace) -> int:
    """Print a report table."""
    sys.stdout.write(emit_table(args.name, args.format, args.max_n).decode('utf-8'))
    return EXIT_OK


# ==================== PARSER ====================

def _add_group_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--n', type=int, required=True, help='Heisenberg index (0 for a Euclidean group)')
    parser.add_argument('--k', type=int, default=0, help='Euclidean factor dimension')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='spectral-constants',
        description='Explicit spectral constants on Heisenberg groups and their verification campaigns',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p_constant = sub.add_parser('constant', help='Compute one constant')
    p_constant.add_argument('--name', choices=CONSTANT_NAMES, required=True)
    _add_group_arguments(p_constant)
    p_constant.add_argument('--method', choices=[m.value for m in CnMethod],
                            default=CnMethod.HURWITZ_REDUCTION.value, help='c_n method')
    p_constant.add_argument('--tol', type=float, default=1e-7, help='Tail tolerance for the direct c_n series')
    p_constant.add_argument('--q', type=float, default=None, help='Gagliardo–Nirenberg exponent')
    p_constant.add_argument('--hypothesis', choices=sorted(HYPOTHESES), default='unconditional')
    p_constant.add_argument('--format', choices=OUTPUT_FORMATS, default='text')
    p_constant.set_defaults(func=cmd_constant)

    p_bound = sub.add_parser('bound', help='Best upper bound on the Pleijel constant')
    p_bound.add_argument('--quantity', choices=['pleijel'], default='pleijel')
    _add_group_arguments(p_bound)
    p_bound.add_argument('--hypothesis', choices=sorted(HYPOTHESES), default='unconditional')
    p_bound.add_argument('--all-routes', action='store_true', help='Show every candidate route')
    p_bound.add_argument('--format', choices=OUTPUT_FORMATS, default='text')
    p_bound.set_defaults(func=cmd_bound)

    p_verify = sub.add_parser('verify', help='Run a verification campaign')
    p_verify.add_argument('--suite', choices=CAMPAIGN_NAMES, required=True)
    p_verify.add_argument('--tol-mult', type=float, default=1.0, help='Tolerance multiplier (0.1 to 100)')
    p_verify.add_argument('--workers', type=int, default=None, help='joblib n_jobs (default CAMPAIGN_WORKERS)')
    p_verify.add_argument('--format', choices=OUTPUT_FORMATS, default='text')
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser('table', help='Print a report table')
    p_table.add_argument('--name', choices=TABLE_NAMES, required=True)
    p_table.add_argument('--max-n', type=int, default=MAX_SERIES_N)
    p_table.add_argument('--format', choices=FORMATS, default='text')
    p_table.set_defaults(func=cmd_table)
    return parser


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments and run a subcommand.

    Returns:
        Exit code: 0 success, 1 verification failures, 2 usage or domain error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    try:
        return args.func(args)
    except SpectralConstantsError as e:
        logger.debug(f"{args.command} failed: {e.error_code}")
        sys.stderr.write(json.dumps(e.to_dict(), ensure_ascii=False, default=str) + '\n')
        return EXIT_ERROR
