"""Exact dimensions in the Young graph: path counts, skew path counts, ratios.

dim(lam) counts the increasing paths from the empty partition to lam, i.e. the
standard Young tableaux of shape lam.  Two independent routes are provided:
the hook-length product and the memoized edge recursion; they cross-validate
each other in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .partitions import (
    CASE_BETWEEN,
    CASE_HIGH,
    CASE_LOW,
    MoveQuadruple,
    Partition,
    conjugate,
    down_neighbors,
)
from .reports import NOT_APPLICABLE, Verdict, compare

DIM_PATHS_LIMIT = 12


@lru_cache(maxsize=None)
def dim_hook(lam: Partition) -> int:
    """dim(lam) via the hook-length product; dim of the empty partition is 1."""
    n = sum(lam)
    conj = conjugate(lam)
    hooks = prod(
        lam[a] - (b + 1) + conj[b] - (a + 1) + 1
        for a in range(len(lam))
        for b in range(lam[a])
    )
    return factorial(n) // hooks


def dim_paths(lam: Partition, limit: int = DIM_PATHS_LIMIT) -> int:
    """dim(lam) by the direct path recursion; the independent oracle for dim_hook."""
    if sum(lam) > limit:
        raise ValueError(f"dim_paths guard: |lam| = {sum(lam)} exceeds limit {limit}")
    return _dim_paths(lam)


@lru_cache(maxsize=None)
def _dim_paths(lam: Partition) -> int:
    if not lam:
        return 1
    return sum(_dim_paths(mu) for mu, _ in down_neighbors(lam))


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) // prev
            m[r][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def skew_dim(lam: Partition, mu: Partition) -> int:
    """Number of standard fillings of the skew shape lam/mu.

    Evaluated through the factorial determinant
    |lam/mu|! * det[ 1 / (lam_a - mu_b - a + b)! ], scaled to an integer matrix
    and settled by fraction-free elimination.
    """
    ell = len(lam)
    mu_padded = tuple(mu) + (0,) * (ell - len(mu))
    if len(mu) > ell:
        raise ValueError(f"mu is not contained in lam: row {ell + 1} has {mu[ell]} > 0")
    for a in range(ell):
        if mu_padded[a] > lam[a]:
            raise ValueError(f"mu is not contained in lam: row {a + 1} has {mu_padded[a]} > {lam[a]}")
    if ell == 0:
        return 1
    x = [lam[a] - (a + 1) for a in range(ell)]
    y = [mu_padded[b] - (b + 1) for b in range(ell)]
    # Row a is scaled by (x_a - y_ell)!; entries become integer falling factorials.
    scaled = []
    for a in range(ell):
        row = []
        for b in range(ell):
            gap = x[a] - y[b]
            if gap < 0:
                row.append(0)
            else:
                row.append(prod(range(gap + 1, x[a] - y[ell - 1] + 1)))
        scaled.append(row)
    det = _bareiss_det(scaled)
    value = Fraction(factorial(sum(lam) - sum(mu)) * det, prod(factorial(x[a] - y[ell - 1]) for a in range(ell)))
    assert value.denominator == 1
    return int(value)


def check_dim_ratio_inequality(q: MoveQuadruple) -> Verdict:
    """Compare dim(mu_hat)/dim(lam_hat) against dim(mu)/dim(lam) per case tag.

    Removed box above the moved rows: the hat ratio must be >=; below: <=;
    between the rows nothing is asserted.
    """
    lhs = Fraction(dim_hook(q.mu_hat), dim_hook(q.lam_hat))
    rhs = Fraction(dim_hook(q.mu), dim_hook(q.lam))
    if q.case == CASE_LOW:
        return compare(lhs, rhs, ">=")
    if q.case == CASE_HIGH:
        return compare(lhs, rhs, "<=")
    assert q.case == CASE_BETWEEN
    return Verdict(NOT_APPLICABLE, lhs, rhs)
