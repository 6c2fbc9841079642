"""Per-n comparison rows for M(P_n) and their CSV form."""

from __future__ import annotations

import csv
import io
from dataclasses import astuple, dataclass, fields
from typing import Iterable

from .construction import ParityParams, lower_bound_mpn, mpn_instance, mpn_labeling, rn_mpn_formula
from .labeling import is_radio_labeling, span
from .solver import SolverBudget, exact_radio_number


@dataclass(frozen=True)
class ResultRow:
    n: int
    k: int
    parity: str
    p: int
    diameter: int
    lower_bound: int
    construction_span: int
    formula_value: int
    exact_value: int | None
    agreement: bool


CSV_COLUMNS = tuple(f.name for f in fields(ResultRow))


def result_row(
    n: int, exact: bool = False, budget: SolverBudget = SolverBudget(), threads: int = 1
) -> tuple[ResultRow, bool]:
    """Row for M(P_n) and whether the exact value (if requested) was proven.

    An unproven exact solve leaves ``exact_value`` empty. A construction
    labeling that fails validation clears the agreement flag.
    """
    par = ParityParams.of(n)
    g, dist, levels = mpn_instance(n)
    labels = mpn_labeling(n)
    values = [lower_bound_mpn(g, dist, levels), span(labels), rn_mpn_formula(n)]
    exact_value, proven = None, True
    if exact:
        res = exact_radio_number(g, dist, budget, threads=threads)
        proven = res.proven_optimal
        if proven:
            exact_value = res.optimum
            values.append(exact_value)
    agree = len(set(values)) == 1 and not is_radio_labeling(g, dist, labels)
    row = ResultRow(n, par.k, par.parity, par.p, dist.diameter, *values[:3], exact_value, agree)
    return row, proven


def rows_to_csv(rows: Iterable[ResultRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            "" if v is None else ("true" if v is True else "false" if v is False else v)
            for v in astuple(row)
        )
    return buf.getvalue()
