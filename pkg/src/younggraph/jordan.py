"""Jordan types of uni-uppertriangular matrices over a prime field, by enumeration.

dim_t(lam) counts the matrices in U_n (ones on the diagonal, entries above it
in F_p) whose nilpotent part has Jordan block sizes lam; the edge count fixes
in addition the Jordan type of the top-left (n-1) x (n-1) corner.  Everything
here is exact integer counting over the full set of p^(n(n-1)/2) matrices, so
the level sets are guarded by hard caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import (
    CASE_BETWEEN,
    CASE_HIGH,
    CASE_LOW,
    Partition,
    conjugate,
    enumerate_move_quadruples,
)
from .reports import NOT_APPLICABLE, Verdict, compare, quadruple_fields

DEFAULT_LIMITS = {2: 6, 3: 5}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_guard(n: int, p: int, limit: int | None):
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    cap = limit if limit is not None else DEFAULT_LIMITS.get(p)
    if cap is None:
        raise ValueError(
            f"no default cap for p = {p}; pass an explicit limit "
            f"(cost is p^(n(n-1)/2) = {p ** (n * (n - 1) // 2)} matrices)"
        )
    if n > cap:
        raise ValueError(
            f"level n = {n} exceeds the cap {cap} for p = {p}; "
            f"enumeration would visit p^(n(n-1)/2) = {p ** (n * (n - 1) // 2)} matrices"
        )


@dataclass(frozen=True)
class UnipotentMatrix:
    """An n x n matrix over F_p with unit diagonal and zeros below it."""

    n: int
    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix shape does not match n")
        for i in range(self.n):
            for j in range(self.n):
                e = self.rows[i][j]
                if j < i and e != 0:
                    raise ValueError(f"entry ({i + 1},{j + 1}) below the diagonal must be 0")
                if j == i and e != 1:
                    raise ValueError(f"diagonal entry ({i + 1},{i + 1}) must be 1")
                if not 0 <= e < self.p:
                    raise ValueError(f"entry ({i + 1},{j + 1}) not reduced mod {self.p}")

    @classmethod
    def from_free_entries(cls, n: int, p: int, entries) -> "UnipotentMatrix":
        """Build from the n(n-1)/2 above-diagonal entries in row-major order."""
        entries = list(entries)
        if len(entries) != n * (n - 1) // 2:
            raise ValueError(f"expected {n * (n - 1) // 2} free entries, got {len(entries)}")
        it = iter(entries)
        rows = []
        for i in range(n):
            row = [0] * i + [1] + [next(it) % p for _ in range(n - i - 1)]
            rows.append(tuple(row))
        return cls(n, p, tuple(rows))

    def corner(self) -> "UnipotentMatrix":
        """The top-left (n-1) x (n-1) corner."""
        return UnipotentMatrix(self.n - 1, self.p, tuple(r[: self.n - 1] for r in self.rows[: self.n - 1]))


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over F_p by Gaussian elimination; `rows` is consumed."""
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    col = 0
    m = len(rows)
    while rank < m and col < n_cols:
        pivot = None
        for r in range(rank, m):
            if rows[r][col] % p:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [(v * inv) % p for v in rows[rank]]
        rows[rank] = prow
        for r in range(rank + 1, m):
            f = rows[r][col] % p
            if f:
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], prow)]
        rank += 1
        col += 1
    return rank


def _mat_mult_mod_p(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            f = ai[k]
            if f:
                bk = b[k]
                for j in range(n):
                    if bk[j]:
                        oi[j] = (oi[j] + f * bk[j]) % p
    return out


def _jordan_from_nilpotent(nil: list[list[int]], p: int) -> Partition:
    """Jordan block sizes from the ranks of the powers of a nilpotent matrix."""
    n = len(nil)
    ranks = [n]
    power = nil
    while True:
        r = _rank_mod_p([row[:] for row in power], p)
        ranks.append(r)
        if r == 0:
            break
        power = _mat_mult_mod_p(power, nil, p)
    col_lengths = tuple(ranks[k - 1] - ranks[k] for k in range(1, len(ranks)))
    return conjugate(col_lengths)


def jordan_type(u: UnipotentMatrix) -> Partition:
    """Partition of n whose parts are the Jordan block sizes of u."""
    nil = [[(e - (1 if i == j else 0)) % u.p for j, e in enumerate(row)] for i, row in enumerate(u.rows)]
    return _jordan_from_nilpotent(nil, u.p)


# ---------------------------------------------------------------------------
# Exhaustive level/edge tables.  The corner's free entries run in an outer
# odometer so its Jordan type is computed once per corner; the last column
# runs in the inner loop.  Counts do not depend on the iteration order.

def _bit_rank(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            msb = row.bit_length() - 1
            if msb in pivots:
                row ^= pivots[msb]
            else:
                pivots[msb] = row
                rank += 1
                break
    return rank


def _bit_mult(a: list[int], b: list[int], n: int) -> list[int]:
    out = []
    for i in range(n):
        acc = 0
        ai = a[i]
        while ai:
            low = ai & -ai
            acc ^= b[low.bit_length() - 1]
            ai ^= low
        out.append(acc)
    return out


def _jordan_from_nilpotent_bits(nil: list[int], n: int) -> Partition:
    ranks = [n]
    power = nil
    while True:
        r = _bit_rank(power)
        ranks.append(r)
        if r == 0:
            break
        power = _bit_mult(power, nil, n)
    col_lengths = tuple(ranks[k - 1] - ranks[k] for k in range(1, len(ranks)))
    return conjugate(col_lengths)


def _tables_p2(n: int):
    level: dict[Partition, int] = {}
    edge: dict[tuple[Partition, Partition], int] = {}
    m = n - 1
    corner_bits = m * (m - 1) // 2
    corner_positions = [(i, j) for i in range(m) for j in range(i + 1, m)]
    for corner_code in range(1 << corner_bits):
        corner = [0] * m
        for idx, (i, j) in enumerate(corner_positions):
            if (corner_code >> idx) & 1:
                corner[i] |= 1 << j
        mu = _jordan_from_nilpotent_bits(corner, m)
        for col_code in range(1 << m):
            nil = [corner[i] | (((col_code >> i) & 1) << m) for i in range(m)]
            nil.append(0)
            lam = _jordan_from_nilpotent_bits(nil, n)
            level[lam] = level.get(lam, 0) + 1
            key = (mu, lam)
            edge[key] = edge.get(key, 0) + 1
    return level, edge


def _tables_generic(n: int, p: int):
    level: dict[Partition, int] = {}
    edge: dict[tuple[Partition, Partition], int] = {}
    m = n - 1
    corner_positions = [(i, j) for i in range(m) for j in range(i + 1, m)]
    ncorner = len(corner_positions)

    def odometer(k):
        state = [0] * k
        while True:
            yield state
            idx = k - 1
            while idx >= 0:
                state[idx] += 1
                if state[idx] < p:
                    break
                state[idx] = 0
                idx -= 1
            if idx < 0:
                return

    for corner_entries in odometer(ncorner) if ncorner else [[]]:
        corner = [[0] * m for _ in range(m)]
        for idx, (i, j) in enumerate(corner_positions):
            corner[i][j] = corner_entries[idx]
        mu = _jordan_from_nilpotent(corner, p)
        for col_entries in odometer(m) if m else [[]]:
            nil = [corner[i] + [col_entries[i]] for i in range(m)]
            nil.append([0] * n)
            lam = _jordan_from_nilpotent(nil, p)
            level[lam] = level.get(lam, 0) + 1
            key = (mu, lam)
            edge[key] = edge.get(key, 0) + 1
    return level, edge


_TABLE_CACHE: dict[tuple[int, int], tuple[dict, dict]] = {}


def jordan_tables(n: int, p: int, limit: int | None = None):
    """(level counts on Y_n, edge counts Y_{n-1} x Y_n) for U_n over F_p."""
    if n < 1:
        raise ValueError("need n >= 1")
    _check_guard(n, p, limit)
    key = (n, p)
    if key not in _TABLE_CACHE:
        if n == 1:
            _TABLE_CACHE[key] = ({(1,): 1}, {((), (1,)): 1})
        elif p == 2:
            _TABLE_CACHE[key] = _tables_p2(n)
        else:
            _TABLE_CACHE[key] = _tables_generic(n, p)
    return _TABLE_CACHE[key]


def dim_t_enum(lam: Partition, p: int, limit: int | None = None) -> int:
    """Number of u in U_n with Jordan type lam, n = |lam|."""
    level, _ = jordan_tables(sum(lam), p, limit)
    return level.get(lam, 0)


def dim_t_edge_enum(mu: Partition, lam: Partition, p: int, limit: int | None = None) -> int:
    """Number of u in U_n with corner Jordan type mu and full Jordan type lam."""
    if sum(mu) != sum(lam) - 1:
        raise ValueError("edge counts need |mu| = |lam| - 1")
    _, edge = jordan_tables(sum(lam), p, limit)
    return edge.get((mu, lam), 0)


def check_jordan_ratio_inequality(q, p: int, limit: int | None = None) -> Verdict:
    """Compare the edge/level count ratios of the hat pair against the plain pair."""
    level, edge = jordan_tables(q.level, p, limit)
    lhs = Fraction(edge.get((q.mu_hat, q.lam_hat), 0), level[q.lam_hat])
    rhs = Fraction(edge.get((q.mu, q.lam), 0), level[q.lam])
    if q.case == CASE_LOW:
        return compare(lhs, rhs, ">=")
    if q.case == CASE_HIGH:
        return compare(lhs, rhs, "<=")
    assert q.case == CASE_BETWEEN
    return Verdict(NOT_APPLICABLE, lhs, rhs)


def sweep_jordan_inequality(n: int, p: int, limit: int | None = None) -> list[dict]:
    """Rows for every quadruple at level n, exact ratios as strings."""
    rows = []
    for q in enumerate_move_quadruples(n):
        v = check_jordan_ratio_inequality(q, p, limit)
        row = quadruple_fields(q)
        row.update(lhs=str(v.lhs), rhs=str(v.rhs), verdict=v.verdict, equality=v.equality)
        rows.append(row)
    return rows
