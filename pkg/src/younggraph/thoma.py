"""Boundary parameters (alpha, beta), specialized Schur values, extreme measures,
the coherent growth sampler, and the approximation experiments.

A parameter point is a pair of weakly decreasing finite nonnegative rational
sequences with total mass at most 1; the missing mass gamma = 1 - sum is
implicit.  Specializations are driven entirely by power-sum values, so gamma
is supported for free; the all-empty point is the Plancherel case.

Everything defaults to exact rational arithmetic.  The growth sampler also has
an explicit floating-point mode for long chains (n ~ 10^3), which evaluates
the specialized Schur values in the log domain through the bialternant in the
finitely many parameters; that route needs one-sided strictly decreasing
parameters of total mass 1, exactly the law-of-large-numbers hypotheses.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .measures import MeasureOnLevel, project_atom_direct, tv_distance
from .dimensions import dim_hook
from .partitions import (
    Partition,
    addable_cells,
    add_box,
    as_partition,
    conjugate,
    enumerate_partitions,
)
from .rationals import parse_rational_list
from .reports import Verdict, compare


def _check_sequence(seq, name: str) -> tuple[Fraction, ...]:
    seq = tuple(Fraction(x) for x in seq)
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    for a, (p, q) in enumerate(zip(seq, seq[1:])):
        if p < q:
            raise ValueError(f"{name} must be weakly decreasing, got {p} < {q} at index {a + 1}")
    if seq and seq[-1] < 0:
        raise ValueError(f"{name} entries must be nonnegative")
    return seq


@dataclass(frozen=True)
class ThomaParams:
    """A boundary parameter point: two decreasing sequences with total mass <= 1."""

    alpha: tuple[Fraction, ...] = ()
    beta: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alpha", _check_sequence(self.alpha, "alpha"))
        object.__setattr__(self, "beta", _check_sequence(self.beta, "beta"))
        if sum(self.alpha) + sum(self.beta) > 1:
            raise ValueError(f"total mass {sum(self.alpha) + sum(self.beta)} exceeds 1")

    @classmethod
    def parse(cls, alpha_text: str, beta_text: str = "") -> "ThomaParams":
        return cls(parse_rational_list(alpha_text), parse_rational_list(beta_text))

    @property
    def gamma(self) -> Fraction:
        return 1 - sum(self.alpha, Fraction(0)) - sum(self.beta, Fraction(0))

    def swapped(self) -> "ThomaParams":
        """The conjugate-dual point (beta, alpha)."""
        return ThomaParams(self.beta, self.alpha)

    def lln_hypotheses_error(self) -> str | None:
        """Why this point fails the law-of-large-numbers hypotheses, or None."""
        for name, seq in (("alpha", self.alpha), ("beta", self.beta)):
            if any(p <= q for p, q in zip(seq, seq[1:])) or (seq and seq[-1] <= 0):
                return f"{name} must be strictly decreasing and positive"
        if self.gamma != 0:
            return f"total mass must be exactly 1, got {1 - self.gamma}"
        return None


PLANCHEREL = ThomaParams((), ())


def power_sum(params: ThomaParams, k: int) -> Fraction:
    """Specialized power sum: 1 for k = 1, else sum alpha^k + (-1)^(k-1) sum beta^k."""
    if k < 1:
        raise ValueError("power sums are indexed by k >= 1")
    if k == 1:
        return Fraction(1)
    sign = 1 if k % 2 else -1
    return sum((a**k for a in params.alpha), Fraction(0)) + sign * sum(
        (b**k for b in params.beta), Fraction(0)
    )


_H_CACHE: dict[ThomaParams, list[Fraction]] = {}


def _h_values(params: ThomaParams, upto: int) -> list[Fraction]:
    """Complete homogeneous values h_0..h_upto from power sums (Newton recursion)."""
    hs = _H_CACHE.setdefault(params, [Fraction(1)])
    while len(hs) <= upto:
        k = len(hs)
        total = sum(power_sum(params, i) * hs[k - i] for i in range(1, k + 1))
        hs.append(total / k)
    return hs


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    m = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def super_schur(lam, params: ThomaParams) -> Fraction:
    """The specialized Schur value s_lam(alpha, beta); always nonnegative.

    Computed from the h-values by the Jacobi-Trudi determinant, on whichever of
    lam and its conjugate has fewer rows (the value is invariant under
    conjugating lam and swapping the two parameter sequences).
    """
    lam = as_partition(lam)
    if lam and lam[0] < len(lam):
        return super_schur(conjugate(lam), params.swapped())
    ell = len(lam)
    if ell == 0:
        return Fraction(1)
    hs = _h_values(params, lam[0] + ell)
    rows = []
    for a in range(ell):
        row = []
        for b in range(ell):
            idx = lam[a] - a + b
            row.append(hs[idx] if idx >= 0 else Fraction(0))
        rows.append(row)
    value = _det_fraction(rows)
    assert value >= 0, f"specialized Schur value must be nonnegative, got {value} at {lam}"
    return value


def extreme_measure(n: int, params: ThomaParams) -> MeasureOnLevel:
    """The level-n member of the extreme coherent family: mass dim(lam) s_lam."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    masses = {}
    for lam in enumerate_partitions(n):
        s = super_schur(lam, params)
        if s:
            masses[lam] = dim_hook(lam) * s
    out = MeasureOnLevel(n, masses)
    assert out.total_mass == 1
    return out


# ---------------------------------------------------------------------------
# Growth sampler


def _log_schur_alpha(lam: Partition, xs: list[float], logs: list[float], log_vandermonde: float):
    """log s_lam(xs) by the bialternant in the log domain; None when it vanishes."""
    a = len(xs)
    if len(lam) > a:
        return None
    padded = list(lam) + [0] * (a - len(lam))
    exps = [padded[j] + a - (j + 1) for j in range(a)]
    terms = []
    for sigma in permutations(range(a)):
        sign = 1
        for i in range(a):
            for j in range(i + 1, a):
                if sigma[i] > sigma[j]:
                    sign = -sign
        log_term = sum(exps[i] * logs[sigma[i]] for i in range(a))
        terms.append((sign, log_term))
    peak = max(t for _, t in terms)
    acc = sum(sign * math.exp(t - peak) for sign, t in terms)
    if acc <= 0:
        return None
    return peak + math.log(acc) - log_vandermonde


class GrowthChain:
    """Markov growth on partitions: one box per step, up-probability s_new/s_old.

    mode="exact" keeps every probability an exact rational and asserts that the
    corner probabilities sum to 1.  mode="float" (an explicit opt-in for long
    chains) works in the log domain and requires one-sided strictly decreasing
    parameters with total mass 1; a pure-beta point is handled by running the
    conjugate chain for the swapped point.
    """

    def __init__(self, params: ThomaParams, mode: str = "exact"):
        if mode not in ("exact", "float"):
            raise ValueError(f"unknown mode {mode!r}")
        self.params = params
        self.mode = mode
        self._conjugated = False
        if mode == "float":
            problem = params.lln_hypotheses_error()
            if problem:
                raise ValueError(f"float mode needs the law-of-large-numbers hypotheses: {problem}")
            if params.alpha and params.beta:
                raise ValueError("float mode supports one-sided parameters; use exact mode for mixed points")
            work = params
            if params.beta:
                work = params.swapped()
                self._conjugated = True
            self._xs = [float(a) for a in work.alpha]
            self._logs = [math.log(x) for x in self._xs]
            lv = 0.0
            for i in range(len(self._xs)):
                for j in range(i + 1, len(self._xs)):
                    lv += math.log(self._xs[i] - self._xs[j])
            self._log_vandermonde = lv
            self._log_values: dict[Partition, float | None] = {}
        self._values: dict[Partition, Fraction] = {}
        self._transitions: dict[Partition, list[tuple[Partition, Fraction]]] = {}

    # exact mode ------------------------------------------------------------

    def value(self, lam: Partition) -> Fraction:
        if lam not in self._values:
            self._values[lam] = super_schur(lam, self.params)
        return self._values[lam]

    def transitions(self, lam: Partition) -> list[tuple[Partition, Fraction]]:
        """Exact transition list from lam; probabilities sum to 1."""
        if lam not in self._transitions:
            base = self.value(lam)
            if base == 0:
                raise ValueError(f"state {lam} has zero mass under these parameters")
            rows = []
            for cell in addable_cells(lam):
                target = add_box(lam, cell)
                v = self.value(target)
                if v:
                    rows.append((target, v / base))
            assert sum(p for _, p in rows) == 1
            self._transitions[lam] = rows
        return self._transitions[lam]

    # float mode ------------------------------------------------------------

    def _log_value(self, lam: Partition):
        if lam not in self._log_values:
            self._log_values[lam] = _log_schur_alpha(lam, self._xs, self._logs, self._log_vandermonde)
        return self._log_values[lam]

    def _float_step(self, lam: Partition, rng: random.Random) -> Partition:
        base = self._log_value(lam)
        assert base is not None
        targets, weights = [], []
        for cell in addable_cells(lam):
            target = add_box(lam, cell)
            lv = self._log_value(target)
            if lv is not None:
                targets.append(target)
                weights.append(math.exp(lv - base))
        total = sum(weights)
        assert abs(total - 1.0) < 1e-6, f"corner probabilities sum to {total}"
        u = rng.random() * total
        acc = 0.0
        for target, w in zip(targets, weights):
            acc += w
            if u < acc:
                return target
        return targets[-1]

    # sampling ---------------------------------------------------------------

    def step(self, lam: Partition, rng: random.Random) -> Partition:
        if self.mode == "float":
            return self._float_step(lam, rng)
        u = Fraction(rng.getrandbits(64), 1 << 64)
        acc = Fraction(0)
        rows = self.transitions(lam)
        for target, prob in rows:
            acc += prob
            if u < acc:
                return target
        return rows[-1][0]

    def sample(self, n: int, rng: random.Random) -> Partition:
        lam: Partition = ()
        for _ in range(n):
            lam = self.step(lam, rng)
        if self.mode == "float" and self._conjugated:
            return conjugate(lam)
        return lam


_CHAIN_CACHE: dict[tuple[ThomaParams, str], GrowthChain] = {}


def _chain(params: ThomaParams, mode: str) -> GrowthChain:
    key = (params, mode)
    if key not in _CHAIN_CACHE:
        _CHAIN_CACHE[key] = GrowthChain(params, mode)
    return _CHAIN_CACHE[key]


def growth_transitions(lam, params: ThomaParams) -> list[tuple[Partition, Fraction]]:
    """Exact one-step transition probabilities out of lam."""
    return _chain(params, "exact").transitions(as_partition(lam))


def sample_diagram(n: int, params: ThomaParams, seed: int, mode: str = "exact") -> Partition:
    """One random partition of n grown box by box; deterministic in the seed."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _chain(params, mode).sample(n, random.Random(seed))


def lln_experiment(
    params: ThomaParams, n: int, trials: int, seed: int, mode: str = "exact"
) -> list[dict]:
    """Scaled row and column lengths of sampled diagrams, one row per statistic.

    Rows carry trial index, level n, kind "row" (lam_i / n, i up to len(alpha))
    or "col" (lam'_j / n, j up to len(beta)), 1-based index, and the exact
    value.  Trial seeds are seed + trial, so trials can be sharded freely.
    """
    problem = params.lln_hypotheses_error()
    if problem:
        raise ValueError(f"the law-of-large-numbers sampler requires strictly decreasing "
                         f"positive sequences of total mass 1: {problem}")
    chain = _chain(params, mode)
    rows = []
    for trial in range(trials):
        lam = chain.sample(n, random.Random(seed + trial))
        conj = conjugate(lam) if params.beta else ()
        for i in range(1, len(params.alpha) + 1):
            value = Fraction(lam[i - 1] if i <= len(lam) else 0, n)
            rows.append({"trial": trial, "n": n, "kind": "row", "index": i, "value": value})
        for j in range(1, len(params.beta) + 1):
            value = Fraction(conj[j - 1] if j <= len(conj) else 0, n)
            rows.append({"trial": trial, "n": n, "kind": "col", "index": j, "value": value})
    return rows


# ---------------------------------------------------------------------------
# Metric on the parameter space and the clutching construction


def d_inf(params: ThomaParams, other: ThomaParams) -> Fraction:
    """Sup distance over the alpha and beta coordinates, padded with zeros."""
    best = Fraction(0)
    for seq, other_seq in ((params.alpha, other.alpha), (params.beta, other.beta)):
        for i in range(max(len(seq), len(other_seq))):
            x = seq[i] if i < len(seq) else Fraction(0)
            y = other_seq[i] if i < len(other_seq) else Fraction(0)
            best = max(best, abs(x - y))
    return best


def lipschitz_check(params: ThomaParams, other: ThomaParams, k: int) -> Verdict:
    """Verify |p_k - p_k'| <= 4 k d_inf; returns both exact sides."""
    lhs = abs(power_sum(params, k) - power_sum(other, k))
    rhs = 4 * k * d_inf(params, other)
    return compare(lhs, rhs, "<=")


def _value_at(seq: tuple[Fraction, ...], index: int) -> Fraction:
    return seq[index - 1] if index <= len(seq) else Fraction(0)


def _first_below(seq: tuple[Fraction, ...], threshold: Fraction) -> int:
    """Least 1-based index whose entry drops below the threshold."""
    i = 1
    while _value_at(seq, i) >= threshold:
        i += 1
    return i


def _raised_side(primary: tuple[Fraction, ...], secondary: tuple[Fraction, ...], eps: Fraction):
    """Raise `primary` (with filler entries, total mass exactly 1) and lower `secondary`.

    Every produced coordinate stays strictly within eps/2 of the input, both
    outputs are strictly decreasing, positive and finite, and the raised side
    absorbs whatever mass is needed to reach total 1.
    """
    half = eps / 2
    l_p = _first_below(primary, half)
    l_s = _first_below(secondary, half)
    margin = min(half - _value_at(primary, l_p), half - _value_at(secondary, l_s))
    v = max(Fraction(3), 2 * eps / margin)

    lowered = []
    for j in range(1, l_s + 1):
        value = _value_at(secondary, j) - eps / (v * 2 ** (l_s + 1 - j))
        if value > 0:
            lowered.append(value)

    raised = []
    if l_p >= 2:
        raised.append(_value_at(primary, 1) + eps / (2 * v))
        for i in range(2, l_p):
            raised.append(_value_at(primary, i) + eps / (v * 2**i))
    total = sum(raised, Fraction(0)) + sum(lowered, Fraction(0))

    if total > 1:
        # the base entries already overshoot; take the excess (at most eps/v)
        # out of the last raised entry instead of adding fillers
        raised[-1] -= total - 1
    elif total < 1:
        filler_at = lambda i: half - eps / v + eps / (v * 2**i)
        i = max(2, l_p) if l_p >= 2 else 1
        while True:
            f = filler_at(i)
            if total + f >= 1:
                raised.append(1 - total)
                break
            raised.append(f)
            total += f
            i += 1

    for a, (x, y) in enumerate(zip(raised, raised[1:])):
        assert x > y > 0, f"raised side not strictly decreasing at {a}: {raised}"
    assert sum(raised, Fraction(0)) + sum(lowered, Fraction(0)) == 1
    return tuple(raised), tuple(lowered)


def clutch_params(params: ThomaParams, eps) -> tuple[ThomaParams, ThomaParams]:
    """Two nearby boundary points bracketing the input from below and above.

    The plus side raises the alpha coordinates (adding filler entries just
    under eps/2 so the total mass becomes exactly 1) and lowers beta; the minus
    side mirrors the roles.  Both satisfy the law-of-large-numbers hypotheses
    and their sup distance is strictly below eps.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    plus_alpha, plus_beta = _raised_side(params.alpha, params.beta, eps)
    minus_beta, minus_alpha = _raised_side(params.beta, params.alpha, eps)
    minus = ThomaParams(minus_alpha, minus_beta)
    plus = ThomaParams(plus_alpha, plus_beta)
    assert minus.lln_hypotheses_error() is None, minus
    assert plus.lln_hypotheses_error() is None, plus
    assert d_inf(minus, plus) < eps
    return minus, plus


# ---------------------------------------------------------------------------
# Deterministic staircase shapes and the convergence experiment


def staircase_sequence(params: ThomaParams, k: int) -> Partition:
    """A deterministic partition of k whose scaled profile tracks (alpha, beta).

    Rows floor(alpha_i k) first, then the beta part as unit-width columns of
    height floor(beta_j k) (appended below as the conjugate block); leftover
    boxes are appended at the bottom as width-1 rows.  Putting the leftover at
    the bottom rather than on row 1 keeps every discretization error pushing
    the projected second moment the same way, so the total-variation
    convergence to the extreme measure is monotone on doubling level grids
    instead of oscillating with the rounding.
    """
    if sum(params.alpha) + sum(params.beta) != 1:
        raise ValueError("staircase shapes need total parameter mass exactly 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    rows = [int(a * k) for a in params.alpha]
    while rows and rows[-1] == 0:
        rows.pop()
    heights = as_partition(int(b * k) for b in params.beta)
    block = list(conjugate(heights))
    if rows and block and rows[-1] < block[0]:
        raise ValueError(
            f"infeasible staircase at k = {k}: alpha row {rows[-1]} is narrower "
            f"than the beta block width {block[0]} (grows feasible for larger k)"
        )
    combined = rows + block
    leftover = k - sum(combined)
    assert leftover >= 0
    combined += [1] * leftover
    lam = as_partition(combined)
    assert sum(lam) == k
    return lam


def convergence_experiment(params: ThomaParams, r: int, k_list) -> list[tuple[int, Fraction]]:
    """Total variation between the projected staircase atom and the extreme measure.

    For each k, the unit atom on staircase_sequence(params, k) is projected
    straight down to level r and compared with the level-r extreme measure.
    """
    k_list = list(k_list)
    if k_list and r > min(k_list):
        raise ValueError(f"target level r = {r} exceeds the smallest k = {min(k_list)}")
    target = extreme_measure(r, params)
    out = []
    for k in k_list:
        lam = staircase_sequence(params, k)
        tv = tv_distance(project_atom_direct(lam, r), target)
        out.append((k, tv))
    return out
