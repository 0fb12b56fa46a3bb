"""Exact measures on a level of the Young graph: projections, distance, dominance.

A measure stores only its positive masses, as exact rationals.  Projection
moves mass down one level weighted by dimension ratios and conserves total
mass.  Stochastic dominance is decided by two independent procedures: an
integer max-flow feasibility check (which also returns a witness coupling)
and the upper-set mass criterion.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm

from .dimensions import dim_hook, skew_dim
from .maxflow import FlowNetwork
from .partitions import (
    Partition,
    as_partition,
    dominance_geq,
    down_neighbors,
    enumerate_partitions,
    format_partition,
    parse_partition,
    upper_sets,
)

# (source, target, mass) rows; source dominates target and the row masses
# marginalize to the two measures being coupled.
Coupling = list[tuple[Partition, Partition, Fraction]]


class DominancePreconditionError(ValueError):
    """Raised when a check requires stochastic dominance that does not hold."""


class MeasureOnLevel:
    """Nonnegative rational mass assignment on the partitions of one level."""

    def __init__(self, level: int, masses):
        if level < 0:
            raise ValueError("level must be nonnegative")
        self.level = level
        cleaned: dict[Partition, Fraction] = {}
        for lam, mass in dict(masses).items():
            lam = as_partition(lam)
            mass = Fraction(mass)
            if mass < 0:
                raise ValueError(f"negative mass {mass} on {lam}")
            if sum(lam) != level:
                raise ValueError(f"{lam} does not live on level {level}")
            if mass:
                cleaned[lam] = mass
        self._masses = cleaned

    @classmethod
    def atom(cls, lam, mass=1) -> "MeasureOnLevel":
        lam = as_partition(lam)
        return cls(sum(lam), {lam: Fraction(mass)})

    @property
    def total_mass(self) -> Fraction:
        return sum(self._masses.values(), Fraction(0))

    def support(self) -> list[Partition]:
        return sorted(self._masses, reverse=True)

    def mass(self, lam) -> Fraction:
        return self._masses.get(as_partition(lam), Fraction(0))

    def mass_of(self, subset) -> Fraction:
        return sum((m for lam, m in self._masses.items() if lam in subset), Fraction(0))

    def items(self) -> list[tuple[Partition, Fraction]]:
        """(partition, mass) pairs in decreasing lexicographic order."""
        return [(lam, self._masses[lam]) for lam in self.support()]

    def __eq__(self, other):
        return (
            isinstance(other, MeasureOnLevel)
            and self.level == other.level
            and self._masses == other._masses
        )

    def __hash__(self):
        return hash((self.level, tuple(self.items())))

    def __repr__(self):
        inner = ", ".join(f"{format_partition(lam) or 'empty'}: {m}" for lam, m in self.items())
        return f"MeasureOnLevel({self.level}, {{{inner}}})"

    def to_json_dict(self) -> dict:
        return {
            "level": self.level,
            "masses": [
                {"partition": format_partition(lam), "mass": str(m)} for lam, m in self.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MeasureOnLevel":
        masses = {}
        for row in data["masses"]:
            lam = parse_partition(row["partition"])
            masses[lam] = masses.get(lam, Fraction(0)) + Fraction(row["mass"])
        return cls(int(data["level"]), masses)

    @classmethod
    def load(cls, path: str) -> "MeasureOnLevel":
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))


def project_one(measure: MeasureOnLevel) -> MeasureOnLevel:
    """Push the measure one level down, weighting each edge by dim(mu)/dim(lam)."""
    if measure.level < 1:
        raise ValueError("cannot project below level 0")
    out: dict[Partition, Fraction] = {}
    for lam, mass in measure.items():
        d_lam = dim_hook(lam)
        for mu, _ in down_neighbors(lam):
            out[mu] = out.get(mu, Fraction(0)) + mass * Fraction(dim_hook(mu), d_lam)
    return MeasureOnLevel(measure.level - 1, out)


def project_to(measure: MeasureOnLevel, k: int) -> MeasureOnLevel:
    """Iterated one-step projection down to level k (identity at k = level)."""
    if not 0 <= k <= measure.level:
        raise ValueError(f"target level {k} outside [0, {measure.level}]")
    for _ in range(measure.level - k):
        measure = project_one(measure)
    return measure


def project_atom_direct(lam, r: int) -> MeasureOnLevel:
    """Projection of the unit atom on lam down to level r, in one shot.

    Uses skew path counts: the mass on mu is skew_dim(lam, mu) dim(mu)/dim(lam).
    Equals project_to(atom, r) exactly but skips the intermediate levels.
    """
    lam = as_partition(lam)
    if r > sum(lam):
        raise ValueError(f"target level {r} above |lam| = {sum(lam)}")
    d_lam = dim_hook(lam)
    masses = {}
    for mu in enumerate_partitions(r):
        if len(mu) <= len(lam) and all(mu[a] <= lam[a] for a in range(len(mu))):
            masses[mu] = Fraction(skew_dim(lam, mu) * dim_hook(mu), d_lam)
    out = MeasureOnLevel(r, masses)
    assert out.total_mass == 1
    return out


def tv_distance(rho: MeasureOnLevel, rho_hat: MeasureOnLevel) -> Fraction:
    """Total variation distance: half the sum of absolute mass differences."""
    if rho.level != rho_hat.level:
        raise ValueError(f"levels differ: {rho.level} vs {rho_hat.level}")
    keys = set(rho.support()) | set(rho_hat.support())
    return sum((abs(rho.mass(k) - rho_hat.mass(k)) for k in keys), Fraction(0)) / 2


def _check_comparable(rho: MeasureOnLevel, rho_hat: MeasureOnLevel):
    if rho.level != rho_hat.level:
        raise ValueError(f"levels differ: {rho.level} vs {rho_hat.level}")
    if rho.total_mass != rho_hat.total_mass:
        raise ValueError(
            f"stochastic dominance compares measures of equal total mass, "
            f"got {rho.total_mass} vs {rho_hat.total_mass}"
        )


def dominates_flow(rho: MeasureOnLevel, rho_hat: MeasureOnLevel):
    """Decide rho >= rho_hat by exact integer max-flow; returns (bool, coupling).

    Masses are scaled by the common denominator; a coupling exists iff the
    bipartite network (edges where dominance holds) carries the full mass.
    """
    _check_comparable(rho, rho_hat)
    left = rho.support()
    right = rho_hat.support()
    if not left and not right:
        return True, []
    scale = lcm(*[m.denominator for _, m in rho.items() + rho_hat.items()])
    total = int(rho.total_mass * scale)
    n_nodes = len(left) + len(right) + 2
    source, sink = n_nodes - 2, n_nodes - 1
    net = FlowNetwork(n_nodes)
    for a, lam in enumerate(left):
        net.add_edge(source, a, int(rho.mass(lam) * scale))
    for b, mu in enumerate(right):
        net.add_edge(len(left) + b, sink, int(rho_hat.mass(mu) * scale))
    middle: dict[int, tuple[Partition, Partition]] = {}
    for a, lam in enumerate(left):
        for b, mu in enumerate(right):
            if dominance_geq(lam, mu):
                eid = net.add_edge(a, len(left) + b, total)
                middle[eid] = (lam, mu)
    if net.max_flow(source, sink) != total:
        return False, None
    coupling: Coupling = []
    for eid, (lam, mu) in middle.items():
        f = net.flow_on(eid)
        if f:
            coupling.append((lam, mu, Fraction(f, scale)))
    coupling.sort(key=lambda row: (row[0], row[1]), reverse=True)
    return True, coupling


def coupling_is_valid(rho: MeasureOnLevel, rho_hat: MeasureOnLevel, coupling: Coupling) -> bool:
    """Marginals reproduce the measures exactly and every row moves mass down."""
    src: dict[Partition, Fraction] = {}
    tgt: dict[Partition, Fraction] = {}
    for lam, mu, mass in coupling:
        if mass <= 0 or not dominance_geq(lam, mu):
            return False
        src[lam] = src.get(lam, Fraction(0)) + mass
        tgt[mu] = tgt.get(mu, Fraction(0)) + mass
    return src == dict(rho.items()) and tgt == dict(rho_hat.items())


def dominates_upperset(rho: MeasureOnLevel, rho_hat: MeasureOnLevel, limit: int | None = None) -> bool:
    """Decide rho >= rho_hat by checking rho(U) >= rho_hat(U) on every upper set."""
    _check_comparable(rho, rho_hat)
    kwargs = {} if limit is None else {"limit": limit}
    for upper in upper_sets(rho.level, **kwargs):
        if rho.mass_of(upper) < rho_hat.mass_of(upper):
            return False
    return True


def check_projection_dominance(rho: MeasureOnLevel, rho_hat: MeasureOnLevel, k: int):
    """Verify that dominance survives projection to level k; returns the coupling.

    Requires rho >= rho_hat to begin with; that precondition failing is
    reported as DominancePreconditionError, distinct from a projection failure.
    """
    ok, _ = dominates_flow(rho, rho_hat)
    if not ok:
        raise DominancePreconditionError("rho does not stochastically dominate rho_hat")
    holds, coupling = dominates_flow(project_to(rho, k), project_to(rho_hat, k))
    return holds, coupling
