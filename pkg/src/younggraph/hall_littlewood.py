"""Hall-Littlewood evaluations at all-ones arguments, exact in the parameter t.

P is built by the branching rule over horizontal strips (psi coefficients) as a
polynomial in t with rational coefficients; Q = b * P with the standard
multiplicity factor b.  The literal symmetrization formula over all
permutations of the variables is implemented separately as an oracle and the
two routes are compared at generic points in the test suite.

Ratio inequalities are decided by cross-multiplication, which stays meaningful
at t = 1 where the individual denominators vanish.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    CASE_BETWEEN,
    CASE_HIGH,
    CASE_LOW,
    MoveQuadruple,
    Partition,
    as_partition,
    conjugate,
)
from .reports import FAILS, HOLDS, NOT_APPLICABLE, Verdict
from .schur import horizontal_strips_below


class Poly:
    """Univariate polynomial in t with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def one_minus_tpow(cls, a: int) -> "Poly":
        """1 - t^a (the constant 0 for a = 0)."""
        if a < 0:
            raise ValueError("exponent must be nonnegative")
        if a == 0:
            return cls()
        return cls([1] + [0] * (a - 1) + [-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    def __sub__(self, other):
        return self + Poly([-c for c in other.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, t) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def divide_by_one_minus_t(self) -> "Poly":
        """Exact quotient by (1 - t); raises if 1 is not a root."""
        if self(Fraction(1)) != 0:
            raise ValueError("1 is not a root")
        # synthetic division by (1 - t): p = (1 - t) q
        out = [Fraction(0)] * len(self.coeffs)
        carry = Fraction(0)
        for i, c in enumerate(self.coeffs):
            out[i] = c + carry
            carry = out[i]
        assert carry == 0
        return Poly(out[:-1])

    def multiplicity_at_one(self) -> int:
        p = self
        mult = 0
        while not p.is_zero() and p(Fraction(1)) == 0:
            p = p.divide_by_one_minus_t()
            mult += 1
        return mult

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def _multiplicities(lam: Partition) -> dict[int, int]:
    m: dict[int, int] = {}
    for part in lam:
        m[part] = m.get(part, 0) + 1
    return m


def psi_poly(lam: Partition, mu: Partition) -> Poly:
    """Branching coefficient for P over the horizontal strip lam/mu.

    Product of (1 - t^{m_j(mu)}) over the part sizes j whose multiplicity in mu
    exceeds the one in lam by exactly one.
    """
    m_lam = _multiplicities(lam)
    m_mu = _multiplicities(mu)
    out = Poly.constant(1)
    for j, mult in m_mu.items():
        if mult == m_lam.get(j, 0) + 1:
            out = out * Poly.one_minus_tpow(mult)
    return out


def b_poly(lam: Partition) -> Poly:
    """Multiplicity factor b_lam: product of (1 - t^i) for i up to each m_j(lam)."""
    out = Poly.constant(1)
    for mult in _multiplicities(lam).values():
        for i in range(1, mult + 1):
            out = out * Poly.one_minus_tpow(i)
    return out


@lru_cache(maxsize=None)
def hl_P_poly(lam: Partition, n_vars: int) -> Poly:
    """P at n_vars ones, as a polynomial in t (zero when ell(lam) > n_vars)."""
    if not lam:
        return Poly.constant(1)
    if n_vars == 0 or len(lam) > n_vars:
        return Poly()
    out = Poly()
    for strip_size in range(lam[0] + 1):
        for mu in horizontal_strips_below(lam, strip_size):
            out = out + psi_poly(lam, mu) * hl_P_poly(mu, n_vars - 1)
    return out


@lru_cache(maxsize=None)
def hl_Q_poly(lam: Partition, n_vars: int) -> Poly:
    return b_poly(lam) * hl_P_poly(lam, n_vars)


def _check_eval_args(lam: Partition, n_vars: int, t):
    if n_vars < len(lam):
        raise ValueError(f"need at least ell(lam) = {len(lam)} variables, got {n_vars}")
    if not 0 <= t <= 1:
        warnings.warn(f"t = {t} is outside [0, 1]; values are still exact", stacklevel=3)


def hl_P(lam, n_vars: int, t) -> Fraction:
    """P_lam at n_vars ones, evaluated exactly at rational t."""
    lam = as_partition(lam)
    t = Fraction(t)
    _check_eval_args(lam, n_vars, t)
    return hl_P_poly(lam, n_vars)(t)


def hl_Q(lam, n_vars: int, t) -> Fraction:
    """Q_lam at n_vars ones: b_lam(t) times the P value."""
    lam = as_partition(lam)
    t = Fraction(t)
    _check_eval_args(lam, n_vars, t)
    return hl_Q_poly(lam, n_vars)(t)


def hl_P_values(lam, xs, t) -> Fraction:
    """P_lam at arbitrary arguments, by the branching recursion."""
    lam = as_partition(lam)
    xs = [Fraction(x) for x in xs]
    t = Fraction(t)
    if len(xs) < len(lam):
        raise ValueError(f"need at least ell(lam) = {len(lam)} variables, got {len(xs)}")
    memo: dict[tuple[Partition, int], Fraction] = {}

    def rec(shape: Partition, k: int) -> Fraction:
        if not shape:
            return Fraction(1)
        if k == 0 or len(shape) > k:
            return Fraction(0)
        key = (shape, k)
        if key not in memo:
            total = Fraction(0)
            for strip_size in range(shape[0] + 1):
                power = xs[k - 1] ** strip_size
                if power == 0 and strip_size > 0:
                    continue
                for mu in horizontal_strips_below(shape, strip_size):
                    total += psi_poly(shape, mu)(t) * power * rec(mu, k - 1)
            memo[key] = total
        return memo[key]

    return rec(lam, len(xs))


SYMMETRIZATION_LIMIT = 8


def hl_Q_symmetrization(lam, xs, t) -> Fraction:
    """Q_lam by the literal symmetrized sum over all permutations of the variables.

    The denominators force pairwise distinct arguments; this is the slow oracle
    route used to cross-check the branching construction.  The sum is over the
    full symmetric group on the variables.
    """
    from itertools import permutations

    lam = as_partition(lam)
    xs = [Fraction(x) for x in xs]
    t = Fraction(t)
    n = len(xs)
    if n > SYMMETRIZATION_LIMIT:
        raise ValueError(f"symmetrization over {n}! permutations refused (limit {SYMMETRIZATION_LIMIT})")
    if len(set(xs)) != n:
        raise ValueError("arguments must be pairwise distinct: the symmetrized sum divides by their differences")
    if n < len(lam):
        raise ValueError(f"need at least ell(lam) = {len(lam)} variables, got {n}")
    if t == 1:
        raise ValueError("the prefactor 1/(1 - t^i) is singular at t = 1")
    padded = list(lam) + [0] * (n - len(lam))
    total = Fraction(0)
    for sigma in permutations(range(n)):
        term = Fraction(1)
        for a in range(n):
            term *= xs[sigma[a]] ** padded[a]
        for i in range(n):
            for j in range(i + 1, n):
                term *= (xs[sigma[i]] - t * xs[sigma[j]]) / (xs[sigma[i]] - xs[sigma[j]])
        total += term
    prefactor = (Fraction(1) - t) ** n
    for i in range(1, n - len(lam) + 1):
        prefactor /= 1 - t**i
    return prefactor * total


def _conjugate_diff(lam: Partition, c: int) -> int:
    """lam'_c - lam'_{c+1}: the number of parts of lam equal to c."""
    conj = conjugate(lam)
    at = lambda j: conj[j - 1] if j <= len(conj) else 0
    return at(c) - at(c + 1)


def check_hl_ratio_inequality(q: MoveQuadruple, n_vars: int, t) -> Verdict:
    """Compare the prefactored Q-ratios of the hat pair against the plain pair.

    The two sides are cross-multiplied by the (positive) denominators, so the
    comparison stays exact and limit-free at t = 1, where both sides vanish and
    every instance is an equality.  The fully reduced values after dividing out
    all shared (1 - t) powers are reported as diagnostics.
    """
    t = Fraction(t)
    if n_vars < len(q.lam_hat):
        raise ValueError(f"need at least ell(lam_hat) = {len(q.lam_hat)} variables, got {n_vars}")
    if q.case == CASE_BETWEEN:
        return Verdict(NOT_APPLICABLE)
    _, c = q.removed
    exp_hat = _conjugate_diff(q.lam_hat, c)
    exp_plain = _conjugate_diff(q.lam, c)
    q_lam = hl_Q_poly(q.lam, n_vars)
    q_lam_hat = hl_Q_poly(q.lam_hat, n_vars)
    q_mu = hl_Q_poly(q.mu, n_vars)
    q_mu_hat = hl_Q_poly(q.mu_hat, n_vars)
    lhs_poly = Poly.one_minus_tpow(exp_hat) * q_mu_hat * q_lam
    rhs_poly = Poly.one_minus_tpow(exp_plain) * q_mu * q_lam_hat
    lhs, rhs = lhs_poly(t), rhs_poly(t)
    ok = lhs >= rhs if q.case == CASE_LOW else lhs <= rhs
    details = {"t": t, "prefactor_exponents": (exp_hat, exp_plain)}
    if exp_hat == 0 or exp_plain == 0:
        details["vanishing_prefactor"] = True
    if t == 1:
        shared = min(lhs_poly.multiplicity_at_one(), rhs_poly.multiplicity_at_one())
        lc, rc = lhs_poly, rhs_poly
        for _ in range(shared):
            lc = lc.divide_by_one_minus_t()
            rc = rc.divide_by_one_minus_t()
        details["cleared_lhs"] = lc(t)
        details["cleared_rhs"] = rc(t)
        details["cleared_power"] = shared
    return Verdict(HOLDS if ok else FAILS, lhs, rhs, equality=(lhs == rhs), details=details)
