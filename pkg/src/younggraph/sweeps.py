"""Deterministic sweeps of the inequality checkers over all move quadruples.

Row order is fixed by the enumeration order of levels, quadruples and
parameters, never by completion order, so reports are byte-identical for any
--threads value.
"""

from __future__ import annotations

from fractions import Fraction
from functools import partial
from multiprocessing import Pool

from .dimensions import check_dim_ratio_inequality
from .hall_littlewood import check_hl_ratio_inequality
from .partitions import MoveQuadruple, enumerate_move_quadruples
from .reports import quadruple_fields
from .schur import (
    check_monomial_positivity,
    check_product_inequality,
    check_product_inequality_reduced,
)


def quadruples_up_to(n_max: int) -> list[MoveQuadruple]:
    out = []
    for n in range(1, n_max + 1):
        out.extend(enumerate_move_quadruples(n))
    return out


def _pmap(fn, items, threads: int) -> list:
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with Pool(threads) as pool:
        return pool.map(fn, items)


def _product_rows(q: MoveQuadruple, n_vars_max: int) -> list[dict]:
    rows = []
    reduced = check_product_inequality_reduced(q)
    for n_vars in range(len(q.lam_hat), n_vars_max + 1):
        v = check_product_inequality(q, n_vars)
        row = quadruple_fields(q)
        row.update(
            N=n_vars,
            lhs=str(v.lhs),
            rhs=str(v.rhs),
            verdict=v.verdict,
            equality=v.equality,
            reduced_lhs=str(reduced.lhs),
            reduced_rhs=str(reduced.rhs),
            reduced_agrees=(v.verdict == reduced.verdict),
        )
        rows.append(row)
    return rows


def sweep_product_inequality(n_max: int, n_vars_max: int, threads: int = 1) -> list[dict]:
    """One row per (quadruple, variable count), with the reduced-form cross-check."""
    quads = quadruples_up_to(n_max)
    chunks = _pmap(partial(_product_rows, n_vars_max=n_vars_max), quads, threads)
    return [row for chunk in chunks for row in chunk]


def _dim_ratio_row(q: MoveQuadruple) -> dict:
    v = check_dim_ratio_inequality(q)
    row = quadruple_fields(q)
    row.update(lhs=str(v.lhs), rhs=str(v.rhs), verdict=v.verdict, equality=v.equality)
    return row


def sweep_dim_ratio_inequality(n_max: int, threads: int = 1) -> list[dict]:
    return _pmap(_dim_ratio_row, quadruples_up_to(n_max), threads)


def _monomial_row(q: MoveQuadruple) -> dict:
    v = check_monomial_positivity(q)
    row = quadruple_fields(q)
    row.update(verdict=v.verdict)
    if "monomial" in v.details:
        row["failing_monomial"] = ",".join(map(str, v.details["monomial"]))
        row["failing_coefficient"] = v.details["coefficient"]
    return row


def sweep_monomial_positivity(n_max: int, threads: int = 1) -> list[dict]:
    return _pmap(_monomial_row, quadruples_up_to(n_max), threads)


def _hl_rows(q: MoveQuadruple, n_vars_max: int, t_list: tuple[Fraction, ...]) -> list[dict]:
    rows = []
    for n_vars in range(len(q.lam_hat), n_vars_max + 1):
        for t in t_list:
            v = check_hl_ratio_inequality(q, n_vars, t)
            row = quadruple_fields(q)
            row.update(N=n_vars, t=str(t), verdict=v.verdict)
            if v.applicable:
                row.update(lhs=str(v.lhs), rhs=str(v.rhs), equality=v.equality)
                if "cleared_lhs" in v.details:
                    row["cleared_lhs"] = str(v.details["cleared_lhs"])
                    row["cleared_rhs"] = str(v.details["cleared_rhs"])
            rows.append(row)
    return rows


def sweep_hl_ratio_inequality(n_max: int, n_vars_max: int, t_list, threads: int = 1) -> list[dict]:
    """One row per (quadruple, variable count, t value)."""
    t_list = tuple(Fraction(t) for t in t_list)
    quads = quadruples_up_to(n_max)
    chunks = _pmap(partial(_hl_rows, n_vars_max=n_vars_max, t_list=t_list), quads, threads)
    return [row for chunk in chunks for row in chunk]
