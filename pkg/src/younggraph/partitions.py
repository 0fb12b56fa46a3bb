"""Partitions, the levels of the Young graph, dominance order, covers and box moves.

A partition is stored as a tuple of weakly decreasing positive integers; the
empty tuple is the empty partition.  Cells are 1-based (row, column) pairs with
the row index increasing downward.  All functions are pure and all returned
orders are deterministic, so results can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Partition = tuple[int, ...]
Cell = tuple[int, int]

# Tags for the position of the removed box relative to the moved box's rows.
CASE_LOW = "r<i"
CASE_HIGH = "r>i_hat"
CASE_BETWEEN = "between"

UPPER_SET_LIMIT = 8


def as_partition(parts) -> Partition:
    """Validate an iterable of row lengths, trimming trailing zeros."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for a, (p, q) in enumerate(zip(parts, parts[1:])):
        if p < q:
            raise ValueError(f"row lengths must be weakly decreasing, got {p} < {q} at row {a + 1}")
    if parts and parts[-1] < 0:
        raise ValueError("row lengths must be nonnegative")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse the "a,b,c" text form; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(piece) for piece in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def conjugate(lam: Partition) -> Partition:
    """Column lengths of lam; an involution."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominance_geq(lam: Partition, mu: Partition) -> bool:
    """True iff every prefix sum of lam weakly exceeds that of mu."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance compares partitions of equal size, got {sum(lam)} and {sum(mu)}")
    acc = 0
    for a in range(min(len(lam), len(mu))):
        acc += lam[a] - mu[a]
        if acc < 0:
            return False
    # beyond the common length the prefix difference can only move toward 0
    return True


def dominance_gt(lam: Partition, mu: Partition) -> bool:
    return lam != mu and dominance_geq(lam, mu)


def removable_corners(lam: Partition) -> list[Cell]:
    """Cells whose removal leaves a partition, in increasing row order."""
    corners = []
    for a, p in enumerate(lam):
        below = lam[a + 1] if a + 1 < len(lam) else 0
        if p > below:
            corners.append((a + 1, p))
    return corners


def addable_cells(lam: Partition) -> list[Cell]:
    """Cells whose addition leaves a partition, in increasing row order."""
    cells = []
    for a in range(len(lam) + 1):
        here = lam[a] if a < len(lam) else 0
        above = lam[a - 1] if a >= 1 else None
        if a == 0 or above >= here + 1:
            cells.append((a + 1, here + 1))
    return cells


def remove_box(lam: Partition, cell: Cell) -> Partition:
    i, j = cell
    if not (1 <= i <= len(lam)) or lam[i - 1] != j:
        raise ValueError(f"cell ({i},{j}) is not a removable corner of {lam}")
    below = lam[i] if i < len(lam) else 0
    if j - 1 < below:
        raise ValueError(f"cell ({i},{j}) is not a removable corner of {lam}")
    out = list(lam)
    out[i - 1] -= 1
    return as_partition(out)


def add_box(lam: Partition, cell: Cell) -> Partition:
    i, j = cell
    if i < 1 or i > len(lam) + 1:
        raise ValueError(f"cell ({i},{j}) is not addable to {lam}")
    here = lam[i - 1] if i <= len(lam) else 0
    if here + 1 != j:
        raise ValueError(f"cell ({i},{j}) is not addable to {lam}")
    if i >= 2 and lam[i - 2] < j:
        raise ValueError(f"cell ({i},{j}) is not addable to {lam}")
    out = list(lam) + [0] * (i - len(lam))
    out[i - 1] += 1
    return as_partition(out)


def down_neighbors(lam: Partition) -> list[tuple[Partition, Cell]]:
    """All mu with mu followed by one box addition giving lam, with the removed cell."""
    return [(remove_box(lam, cell), cell) for cell in removable_corners(lam)]


def up_neighbors(lam: Partition) -> list[tuple[Partition, Cell]]:
    return [(add_box(lam, cell), cell) for cell in addable_cells(lam)]


@dataclass(frozen=True)
class BoxMove:
    """A single box moved from one cell to another (the rows must differ)."""

    from_cell: Cell
    to_cell: Cell

    def __post_init__(self):
        if self.from_cell[0] == self.to_cell[0]:
            raise ValueError(f"box move must change the row, got {self.from_cell} -> {self.to_cell}")


def apply_move(lam: Partition, move: BoxMove) -> Partition:
    """Remove the move's source box and add its target box."""
    return add_box(remove_box(lam, move.from_cell), move.to_cell)


def covers(lam: Partition) -> list[tuple[Partition, BoxMove]]:
    """All partitions covered by lam in dominance order, with the witnessing move.

    The covered partitions are exactly those reachable by moving one box from
    (i, j) to (i_hat, j_hat) with i_hat - i = 1 or j_hat - j = -1; they are
    immediate dominance neighbors below lam.
    """
    found = []
    for (i, j) in removable_corners(lam):
        mu = remove_box(lam, (i, j))
        for (ih, jh) in addable_cells(mu):
            if ih <= i:
                continue
            if ih - i == 1 or jh - j == -1:
                found.append((add_box(mu, (ih, jh)), BoxMove((i, j), (ih, jh))))
    return found


@dataclass(frozen=True)
class MoveQuadruple:
    """Two box-move pairs (lam, lam_hat) and (mu, mu_hat) sharing the removed cell.

    lam and lam_hat differ by moving the box at move.from_cell = (i, j) down to
    move.to_cell = (i_hat, j_hat) with i_hat > i; mu and mu_hat are obtained by
    deleting the same removable corner `removed` = (r, c) from lam and lam_hat,
    and differ by the same move.  `case` records where r sits relative to the
    move's rows.
    """

    lam: Partition
    lam_hat: Partition
    mu: Partition
    mu_hat: Partition
    move: BoxMove
    removed: Cell
    case: str

    @property
    def level(self) -> int:
        return sum(self.lam)


def _case_tag(r: int, i: int, i_hat: int) -> str:
    if r < i:
        return CASE_LOW
    if r > i_hat:
        return CASE_HIGH
    return CASE_BETWEEN


def enumerate_move_quadruples(n: int) -> list[MoveQuadruple]:
    """All valid quadruples at level n, in a deterministic order."""
    if n < 1:
        raise ValueError("quadruples need level n >= 1")
    out = []
    for lam in enumerate_partitions(n):
        for (i, j) in removable_corners(lam):
            base = remove_box(lam, (i, j))
            for (ih, jh) in addable_cells(base):
                if ih <= i:
                    continue
                move = BoxMove((i, j), (ih, jh))
                lam_hat = add_box(base, (ih, jh))
                for (r, c) in removable_corners(lam):
                    if (r, c) == (i, j):
                        continue
                    try:
                        mu = remove_box(lam, (r, c))
                        mu_hat = remove_box(lam_hat, (r, c))
                        if apply_move(mu, move) != mu_hat:
                            continue
                    except ValueError:
                        continue
                    out.append(MoveQuadruple(lam, lam_hat, mu, mu_hat, move, (r, c), _case_tag(r, i, ih)))
    return out


def classify_corners(lam: Partition, i: int, i_hat: int):
    """Split the corners of lam by the removed-box row r relative to [i, i_hat].

    Returns three lists of (mu, removed_cell): rows r < i, rows i <= r <= i_hat,
    and rows r > i_hat.  Each list is linearly ordered by dominance (increasing
    row r gives increasing mu).
    """
    if i >= i_hat:
        raise ValueError(f"move rows must satisfy i < i_hat, got {i} >= {i_hat}")
    above, between, below = [], [], []
    for (r, c) in removable_corners(lam):
        entry = (remove_box(lam, (r, c)), (r, c))
        if r < i:
            above.append(entry)
        elif r <= i_hat:
            between.append(entry)
        else:
            below.append(entry)
    return above, between, below


def upper_sets(n: int, limit: int = UPPER_SET_LIMIT) -> list[frozenset[Partition]]:
    """All upward-closed subsets of the dominance order on partitions of n.

    Guarded by `limit` (antichain counting blows up); for stochastic-dominance
    queries on larger levels use the flow-based checker in younggraph.measures.
    """
    if n > limit:
        raise ValueError(
            f"upper_sets(n={n}) exceeds the guard {limit}; "
            "use measures.dominates_flow for dominance checks at this level"
        )
    elems = list(enumerate_partitions(n))  # decreasing lex extends dominance
    strict_above = {
        x: [y for y in elems if y != x and dominance_geq(y, x)] for x in elems
    }
    results: list[frozenset[Partition]] = []

    def walk(idx: int, chosen: set[Partition]):
        if idx == len(elems):
            results.append(frozenset(chosen))
            return
        x = elems[idx]
        walk(idx + 1, chosen)
        if all(y in chosen for y in strict_above[x]):
            chosen.add(x)
            walk(idx + 1, chosen)
            chosen.remove(x)

    walk(0, set())
    results.sort(key=lambda s: (len(s), sorted(s, reverse=True)))
    return results
