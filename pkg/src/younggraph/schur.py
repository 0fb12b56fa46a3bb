"""Schur-side engine: principal specializations, Kostka numbers, products.

Products of two Schur functions are expanded in the Schur basis by running the
Jacobi-Trudi expansion of one factor through iterated Pieri steps, which keeps
everything indexed by partitions.  Monomial coefficients are then reached via
Kostka numbers, so monomial positivity of a difference of products is decided
exactly on the finitely many monomials of the right degree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .partitions import (
    CASE_BETWEEN,
    CASE_HIGH,
    CASE_LOW,
    MoveQuadruple,
    Partition,
    as_partition,
    enumerate_partitions,
)
from .reports import NOT_APPLICABLE, Verdict, compare


def schur_ones(lam: Partition, n_vars: int) -> int:
    """The Schur polynomial of shape lam at n_vars ones (a tableau count).

    Evaluated by the product over index pairs of (lam_a - a - lam_b + b)/(b - a).
    """
    lam = as_partition(lam)
    if n_vars < len(lam):
        raise ValueError(f"need at least ell(lam) = {len(lam)} variables, got {n_vars}")
    padded = list(lam) + [0] * (n_vars - len(lam))
    value = Fraction(1)
    for a in range(n_vars):
        for b in range(a + 1, n_vars):
            value *= Fraction(padded[a] - (a + 1) - padded[b] + (b + 1), b - a)
    assert value.denominator == 1
    return int(value)


def check_product_inequality(q: MoveQuadruple, n_vars: int) -> Verdict:
    """Compare s_lam(1^N) s_mu_hat(1^N) against s_lam_hat(1^N) s_mu(1^N).

    Removed box above the moved rows: >= must hold; below: <=; between: nothing.
    """
    lhs = schur_ones(q.lam, n_vars) * schur_ones(q.mu_hat, n_vars)
    rhs = schur_ones(q.lam_hat, n_vars) * schur_ones(q.mu, n_vars)
    if q.case == CASE_LOW:
        return compare(lhs, rhs, ">=")
    if q.case == CASE_HIGH:
        return compare(lhs, rhs, "<=")
    assert q.case == CASE_BETWEEN
    return Verdict(NOT_APPLICABLE, lhs, rhs)


def check_product_inequality_reduced(q: MoveQuadruple) -> Verdict:
    """The same comparison after cancellation: x^2 (y^2 - 1) vs (x^2 - 1) y^2.

    Here x = lam_r - r - lam_i + i and y = lam_r - r - lam_ihat + ihat - 1 for
    the removed row r and the move rows i < ihat.  The verdict agrees with
    check_product_inequality for every admissible number of variables.
    """
    r, _ = q.removed
    i, _ = q.move.from_cell
    i_hat, _ = q.move.to_cell
    lam_at = lambda a: q.lam[a - 1] if a <= len(q.lam) else 0
    x = lam_at(r) - r - lam_at(i) + i
    y = lam_at(r) - r - lam_at(i_hat) + i_hat - 1
    lhs = x * x * (y * y - 1)
    rhs = (x * x - 1) * y * y
    if q.case == CASE_LOW:
        return compare(lhs, rhs, ">=")
    if q.case == CASE_HIGH:
        return compare(lhs, rhs, "<=")
    assert q.case == CASE_BETWEEN
    return Verdict(NOT_APPLICABLE, lhs, rhs)


def horizontal_strips_below(lam: Partition, strip_size: int) -> list[Partition]:
    """All mu contained in lam with lam/mu a horizontal strip of the given size."""
    lam = as_partition(lam)
    if strip_size < 0 or strip_size > sum(lam):
        return []
    out: list[Partition] = []

    def rec(a: int, remaining: int, prefix: list[int]):
        if a == len(lam):
            if remaining == 0:
                out.append(as_partition(prefix))
            return
        below = lam[a + 1] if a + 1 < len(lam) else 0
        # interlacing: lam_{a+1} <= mu_a <= lam_a
        for part in range(lam[a], below - 1, -1):
            removed = lam[a] - part
            if removed > remaining:
                break
            rec(a + 1, remaining - removed, prefix + [part])

    rec(0, strip_size, [])
    return out


def horizontal_strips_above(lam: Partition, strip_size: int) -> list[Partition]:
    """All nu containing lam with nu/lam a horizontal strip of the given size."""
    lam = as_partition(lam)
    if strip_size < 0:
        return []
    out: list[Partition] = []
    rows = len(lam) + 1

    def rec(a: int, remaining: int, prefix: list[int]):
        if a == rows:
            if remaining == 0:
                out.append(as_partition(prefix))
            return
        here = lam[a] if a < len(lam) else 0
        above = lam[a - 1] if a >= 1 else here + remaining
        # interlacing: lam_a <= nu_a <= lam_{a-1}
        hi = min(above, here + remaining)
        for part in range(hi, here - 1, -1):
            rec(a + 1, remaining - (part - here), prefix + [part])

    rec(0, strip_size, [])
    return out


@lru_cache(maxsize=None)
def kostka(lam: Partition, content: tuple[int, ...]) -> int:
    """Semistandard tableaux of shape lam whose entry multiplicities are `content`.

    The content need not be a partition; the count is invariant under
    permuting it.  Computed by peeling the largest entry as a horizontal strip.
    """
    lam = as_partition(lam)
    if sum(lam) != sum(content):
        raise ValueError(f"size mismatch: |lam| = {sum(lam)}, |content| = {sum(content)}")
    return _kostka_rec(lam, tuple(int(c) for c in content))


@lru_cache(maxsize=None)
def _kostka_rec(lam: Partition, content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not lam else 0
    if content[-1] < 0:
        return 0
    return sum(_kostka_rec(mu, content[:-1]) for mu in horizontal_strips_below(lam, content[-1]))


_PRODUCT_CACHE: dict[tuple[Partition, Partition], dict[Partition, int]] = {}


def schur_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Expand s_lam * s_mu in the Schur basis; all coefficients are nonnegative.

    One factor is written as its Jacobi-Trudi determinant in complete
    homogeneous functions, and each monomial of h's is applied to s_lam as a
    chain of Pieri steps (horizontal strips).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    key = (lam, mu)
    if key in _PRODUCT_CACHE:
        return dict(_PRODUCT_CACHE[key])
    ell = len(mu)
    result: dict[Partition, int] = {}
    for sigma in permutations(range(ell)):
        degrees = [mu[a] - (a + 1) + (sigma[a] + 1) for a in range(ell)]
        if any(d < 0 for d in degrees):
            continue
        sign = _permutation_sign(sigma)
        terms: dict[Partition, int] = {lam: 1}
        for d in degrees:
            if d == 0:
                continue
            nxt: dict[Partition, int] = {}
            for kappa, coeff in terms.items():
                for nu in horizontal_strips_above(kappa, d):
                    nxt[nu] = nxt.get(nu, 0) + coeff
            terms = nxt
        for kappa, coeff in terms.items():
            result[kappa] = result.get(kappa, 0) + sign * coeff
    result = {k: v for k, v in result.items() if v}
    assert all(v > 0 for v in result.values())
    _PRODUCT_CACHE[key] = result
    return dict(result)


def _permutation_sign(sigma) -> int:
    sign = 1
    for a in range(len(sigma)):
        for b in range(a + 1, len(sigma)):
            if sigma[a] > sigma[b]:
                sign = -sign
    return sign


def monomial_coefficient(schur_coeffs: dict[Partition, int], nu: Partition) -> int:
    """Coefficient of the monomial symmetric function m_nu, via Kostka numbers."""
    return sum(c * kostka(kappa, nu) for kappa, c in schur_coeffs.items())


def check_monomial_positivity(q: MoveQuadruple) -> Verdict:
    """Check that the case-appropriate difference of products is monomial-positive.

    Removed box above the moved rows: s_lam s_mu_hat - s_lam_hat s_mu must have
    nonnegative monomial coefficients; below: the reversed difference; between:
    nothing is asserted.  The first failing monomial (decreasing lexicographic
    scan) is reported in the verdict details.
    """
    if q.case == CASE_BETWEEN:
        return Verdict(NOT_APPLICABLE)
    plus = schur_product(q.lam, q.mu_hat)
    minus = schur_product(q.lam_hat, q.mu)
    if q.case == CASE_HIGH:
        plus, minus = minus, plus
    diff: dict[Partition, int] = dict(plus)
    for kappa, c in minus.items():
        diff[kappa] = diff.get(kappa, 0) - c
    degree = 2 * q.level - 1
    worst = None
    for nu in enumerate_partitions(degree):
        coeff = monomial_coefficient(diff, nu)
        if coeff < 0:
            worst = (nu, coeff)
            break
    if worst is None:
        return Verdict("holds", details={"degree": degree})
    return Verdict("fails", details={"degree": degree, "monomial": worst[0], "coefficient": worst[1]})
