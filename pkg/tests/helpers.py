"""Independent brute-force oracles and random generators for the test suite.

Everything here deliberately avoids the library's own computation paths:
partitions are regenerated by a different recursion, tableau counts come from
explicit enumeration of fillings, and upper sets from filtering all subsets.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from younggraph import MeasureOnLevel, ThomaParams
from younggraph.partitions import dominance_geq


def brute_partitions(n: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of n by a max-part recursion (not the library's generator)."""
    cap = n if cap is None else cap
    if n == 0:
        return [()]
    out = []
    for first in range(1, min(cap, n) + 1):
        for rest in brute_partitions(n - first, first):
            out.append((first,) + rest)
    return sorted(out, reverse=True)


def brute_ssyt_count(shape: tuple[int, ...], max_entry: int, content: tuple[int, ...] | None = None) -> int:
    """Count semistandard fillings by explicit row-by-row enumeration.

    Rows weakly increase left to right, columns strictly increase top to bottom.
    With `content`, additionally fix the multiplicity of every entry value.
    """
    rows: list[tuple[int, ...]] = []
    count = 0

    def fill_row(r: int, row: list[int], col: int):
        nonlocal count
        if col == shape[r]:
            rows.append(tuple(row))
            fill_next(r + 1)
            rows.pop()
            return
        lo = row[col - 1] if col else 1
        if r > 0 and col < shape[r - 1]:
            lo = max(lo, rows[r - 1][col] + 1)
        for v in range(lo, max_entry + 1):
            row.append(v)
            fill_row(r, row, col + 1)
            row.pop()

    def fill_next(r: int):
        nonlocal count
        if r == len(shape):
            if content is not None:
                seen = [0] * (max_entry + 1)
                for row in rows:
                    for v in row:
                        seen[v] += 1
                if tuple(seen[1 : len(content) + 1]) != tuple(content) or any(
                    seen[len(content) + 1 :]
                ):
                    return
            count += 1
            return
        fill_row(r, [], 0)

    fill_next(0)
    return count


def brute_schur_polynomial(shape: tuple[int, ...], n_vars: int) -> dict[tuple[int, ...], int]:
    """Dense monomial expansion of the Schur polynomial by enumerating fillings.

    Returns exponent vector -> coefficient for the polynomial in n_vars
    variables (exponent vectors of fixed length n_vars).
    """
    out: dict[tuple[int, ...], int] = {}
    rows: list[tuple[int, ...]] = []

    def fill_row(r: int, row: list[int], col: int):
        if col == shape[r]:
            rows.append(tuple(row))
            fill_next(r + 1)
            rows.pop()
            return
        lo = row[col - 1] if col else 1
        if r > 0 and col < shape[r - 1]:
            lo = max(lo, rows[r - 1][col] + 1)
        for v in range(lo, n_vars + 1):
            row.append(v)
            fill_row(r, row, col + 1)
            row.pop()

    def fill_next(r: int):
        if r == len(shape):
            weight = [0] * n_vars
            for row in rows:
                for v in row:
                    weight[v - 1] += 1
            key = tuple(weight)
            out[key] = out.get(key, 0) + 1
            return
        fill_row(r, [], 0)

    fill_next(0)
    return out


def brute_product_monomial_coefficient(
    lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...], n_vars: int
) -> int:
    """Coefficient of m_nu in s_lam s_mu via dense polynomial multiplication."""
    a = brute_schur_polynomial(lam, n_vars)
    b = brute_schur_polynomial(mu, n_vars)
    prod: dict[tuple[int, ...], int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            prod[key] = prod.get(key, 0) + ca * cb
    target = tuple(nu) + (0,) * (n_vars - len(nu))
    return prod.get(target, 0)


def brute_skew_paths(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Oriented paths from mu up to lam, by explicit one-box growth."""
    if lam == mu:
        return 1
    total = 0
    padded = list(mu) + [0] * (len(lam) - len(mu))
    for a in range(len(lam)):
        can_grow = padded[a] < lam[a] and (a == 0 or padded[a] < padded[a - 1])
        if can_grow:
            bigger = padded[:]
            bigger[a] += 1
            grown = tuple(p for p in bigger if p)
            total += brute_skew_paths(lam, grown)
    return total


def brute_upper_sets(elems: list[tuple[int, ...]]) -> list[frozenset]:
    """All upward-closed subsets by filtering the full power set."""
    out = []
    for mask in range(1 << len(elems)):
        chosen = {elems[i] for i in range(len(elems)) if (mask >> i) & 1}
        ok = all(
            (y in chosen) for x in chosen for y in elems if y != x and dominance_geq(y, x)
        )
        if ok:
            out.append(frozenset(chosen))
    return out


def random_measure(rng: random.Random, level: int, n_atoms: int = 3, denominator: int = 24) -> MeasureOnLevel:
    """A random rational measure on the given level with small denominators."""
    from younggraph.partitions import enumerate_partitions

    support = list(enumerate_partitions(level))
    rng.shuffle(support)
    masses = {}
    for lam in support[: min(n_atoms, len(support))]:
        masses[lam] = Fraction(rng.randint(1, 12), denominator)
    return MeasureOnLevel(level, masses)


def random_equal_mass_pair(rng: random.Random, level: int):
    """Two random measures on the level scaled to the same total mass 1."""
    def normalized():
        m = random_measure(rng, level)
        total = m.total_mass
        return MeasureOnLevel(level, {lam: mass / total for lam, mass in m.items()})

    return normalized(), normalized()


def random_omega_point(rng: random.Random, max_parts: int = 3, denominator: int = 60) -> ThomaParams:
    """A random boundary point with strictly decreasing rational coordinates."""
    def seq():
        k = rng.randint(0, max_parts)
        values = sorted(rng.sample(range(1, denominator // 2), k), reverse=True) if k else []
        return [Fraction(v, denominator * 2) for v in values]

    alpha, beta = seq(), seq()
    total = sum(alpha) + sum(beta)
    if total > 1:
        alpha = [a / (2 * total) for a in alpha]
        beta = [b / (2 * total) for b in beta]
    return ThomaParams(tuple(alpha), tuple(beta))
