"""
Report tables: the cₙ and γ̃ₙ tables, the quotient sweep, a constants
summary per ℍₙ and the winning routes over the proven (n, k) grid.

Tables are assembled as pandas DataFrames whose cells are pre-formatted
strings, so text, CSV and JSON output are byte-deterministic.
"""

import json
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

import pandas as pd

from src.core.bound import Hypothesis
from src.core.group import GroupSpec
from src.core.value import Value
from src.faberkrahn.routes import fk_best_route
from src.functional.sobolev import sobolev_heisenberg
from src.harness.claims import maincomp_groups
from src.isoperimetry.constants import iso_lower_heisenberg, pansu_isoperimetric
from src.pleijel.bounds import best_gamma_bound
from src.pleijel.gamma import gamma_tilde
from src.pleijel.quotients import pansu_quotient_suite
from src.utils.exceptions import ValidationError
from src.utils.logger import get_logger
from src.utils.logging_config import OperationLogger
from src.utils.validators import validate_int_range
from src.weyl.cn import MAX_SERIES_N, cn_hurwitz
from src.weyl.constants import weyl_heisenberg

logger = get_logger('harness.tables')

TABLE_NAMES = ('cn', 'gamma_tilde', 'quotients', 'constants', 'routes')
FORMATS = ('text', 'csv', 'json')
NUMBER_FORMAT = '.9e'
SINGULAR = 'singular'

Cell = Union[Value, str, int, None]


def format_number(x: float) -> str:
    return format(x, NUMBER_FORMAT)


@dataclass(frozen=True)
class ReportTable:
    """
    Ordered rows with one provenance string per row.

    A Value cell expands into two columns, '<header>' and '<header>_err'.
    """

    name: str
    headers: Tuple[str, ...]
    rows: Tuple[Tuple[Cell, ...], ...]
    provenance: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.provenance) != len(self.rows):
            raise ValidationError(f"Table {self.name}: one provenance entry per row required", field='provenance')
        for row in self.rows:
            if len(row) != len(self.headers):
                raise ValidationError(f"Table {self.name}: row width {len(row)} != {len(self.headers)}",
                                      field='rows')

    def _value_columns(self) -> List[bool]:
        return [any(isinstance(row[i], Value) for row in self.rows) for i in range(len(self.headers))]

    def to_frame(self) -> pd.DataFrame:
        is_value = self._value_columns()
        columns = []
        for header, value_column in zip(self.headers, is_value):
            columns.append(header)
            if value_column:
                columns.append(f"{header}_err")
        columns.append('provenance')

        records = []
        for row, source in zip(self.rows, self.provenance):
            cells = []
            for cell, value_column in zip(row, is_value):
                if isinstance(cell, Value):
                    cells.extend([format_number(cell.estimate), format_number(cell.err)])
                elif value_column:
                    # singular or unavailable entry in a numeric column
                    cells.extend([_text(cell), ''])
                else:
                    cells.append(_text(cell))
            cells.append(source)
            records.append(cells)
        return pd.DataFrame(records, columns=columns, dtype=str)


def _text(cell: Cell) -> str:
    return '' if cell is None else str(cell)


def _or_singular(v: Optional[Value]) -> Cell:
    return SINGULAR if v is None else v


# ==================== TABLE BUILDERS ====================

def cn_table(max_n: int) -> ReportTable:
    rows = tuple((n, cn_hurwitz(n)) for n in range(1, max_n + 1))
    provenance = tuple(
        'exact: pi^2/8' if n == 1 else 'exact: pi^2/48' if n == 2 else f"Hurwitz reduction, n = {n}"
        for n in range(1, max_n + 1)
    )
    return ReportTable('cn', ('n', 'c_n'), rows, provenance)


def gamma_tilde_table(max_n: int) -> ReportTable:
    rows = tuple((n, gamma_tilde(n)) for n in range(1, max_n + 1))
    provenance = tuple(f"2^n (n+1)! n^(-2(n+1)) / c_n, n = {n}" for n in range(1, max_n + 1))
    return ReportTable('gamma_tilde', ('n', 'gamma_tilde'), rows, provenance)


def quotients_table(max_n: int) -> ReportTable:
    if max_n < 2:
        raise ValidationError("The quotients table needs max_n >= 2", field='max_n')
    rows = []
    for m in range(2, max_n + 1):
        suite = pansu_quotient_suite(m)
        rows.append((
            m,
            suite.gamma_tilde_quotient_direct,
            _or_singular(suite.gamma_tilde_quotient_upper),
            suite.alpha_quotient,
            suite.gamma_rd_quotient,
            suite.gamma_rd_quotient_upper,
            _or_singular(suite.combined_upper),
        ))
    headers = ('m', 'gamma_tilde_quotient', 'gamma_tilde_quotient_upper', 'alpha_quotient',
               'gamma_rd_quotient', 'gamma_rd_quotient_upper', 'combined_upper')
    provenance = tuple(f"quotients at m = {m}" for m in range(2, max_n + 1))
    return ReportTable('quotients', headers, tuple(rows), provenance)


def constants_table(max_n: int) -> ReportTable:
    rows = []
    for n in range(1, max_n + 1):
        g_best = best_gamma_bound(GroupSpec(n, 0), Hypothesis.UNCONDITIONAL)
        rows.append((
            n,
            weyl_heisenberg(n),
            sobolev_heisenberg(n),
            iso_lower_heisenberg(n).value,
            pansu_isoperimetric(n).value,
            fk_best_route(GroupSpec(n, 0)).bound.value,
            g_best.bound.value,
        ))
    headers = ('n', 'weyl', 'sobolev', 'iso_lower', 'iso_pansu', 'fk_best', 'gamma_best')
    provenance = tuple(f"H{n}" for n in range(1, max_n + 1))
    return ReportTable('constants', headers, tuple(rows), provenance)


def routes_table(max_n: int) -> ReportTable:
    rows = []
    groups = [g for g in maincomp_groups() if g.n <= max_n]
    for g in groups:
        gamma = best_gamma_bound(g, Hypothesis.UNCONDITIONAL)
        fk = fk_best_route(g)
        rows.append((g.label, g.n, g.k, fk.name.value, fk.bound.value, gamma.winner.value, gamma.bound.value))
    headers = ('group', 'n', 'k', 'fk_route', 'fk_bound', 'pleijel_route', 'pleijel_bound')
    provenance = tuple('best of available routes' for _ in groups)
    return ReportTable('routes', headers, tuple(rows), provenance)


TABLE_BUILDERS = {
    'cn': cn_table,
    'gamma_tilde': gamma_tilde_table,
    'quotients': quotients_table,
    'constants': constants_table,
    'routes': routes_table,
}


# ==================== RENDERING ====================

def render_frame(frame: pd.DataFrame, fmt: str) -> bytes:
    """Render a string-valued frame as text, CSV or a JSON array of row objects."""
    if fmt == 'text':
        output = frame.to_string(index=False) + '\n'
    elif fmt == 'csv':
        output = frame.to_csv(index=False, lineterminator='\n')
    elif fmt == 'json':
        output = json.dumps(frame.to_dict(orient='records'), ensure_ascii=False, indent=2) + '\n'
    else:
        raise ValidationError(f"Unknown format: {fmt}", field='format', details={'choices': list(FORMATS)})
    return output.encode('utf-8')


def build_table(name: str, max_n: int = MAX_SERIES_N) -> ReportTable:
    """
    Build a named table.

    Raises:
        ValidationError: If the name is unknown
        RangeError: If max_n is outside 1..13
    """
    if name not in TABLE_BUILDERS:
        raise ValidationError(f"Unknown table: {name}", field='name', details={'choices': list(TABLE_NAMES)})
    max_n = validate_int_range(max_n, 1, MAX_SERIES_N, 'max_n')
    logger.debug(f"Building table {name} up to n={max_n}")
    return TABLE_BUILDERS[name](max_n)


def emit_table(name: str, fmt: str = 'text', max_n: int = MAX_SERIES_N) -> bytes:
    """
    Render a named table.

    Args:
        name: cn, gamma_tilde, quotients, constants or routes
        fmt: text, csv or json
        max_n: Largest Heisenberg index shown (routes keep the groups with n <= max_n)

    Returns:
        UTF-8 encoded bytes, identical for identical arguments
    """
    if fmt not in FORMATS:
        raise ValidationError(f"Unknown format: {fmt}", field='format', details={'choices': list(FORMATS)})
    with OperationLogger('table', table=name, format=fmt) as op:
        table = build_table(name, max_n)
        op.add_context('rows', len(table.rows))
        return render_frame(table.to_frame(), fmt)

