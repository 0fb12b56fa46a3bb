"""Exact measures on a level, projections, and stochastic dominance.

The dominance checker runs two independent decision procedures: max-flow
feasibility (which yields a witness coupling) and the upper-set criterion.

Run: python demos/03_measures_and_projection.py
"""

from fractions import Fraction as F

from younggraph import (
    MeasureOnLevel,
    dominates_flow,
    dominates_upperset,
    format_partition,
    project_to,
    tv_distance,
)

atom = MeasureOnLevel.atom((3, 1))
print("Projecting the unit atom on (3,1) down the graph:")
for k in (3, 2, 1):
    print(f"   level {k}:", project_to(atom, k))

rho = MeasureOnLevel(4, {(4,): F(1, 2), (2, 2): F(1, 2)})
rho_hat = MeasureOnLevel(4, {(3, 1): F(3, 4), (2, 1, 1): F(1, 4)})
ok, coupling = dominates_flow(rho, rho_hat)
print("\nDoes {(4): 1/2, (2,2): 1/2} dominate {(3,1): 3/4, (2,1,1): 1/4}?", ok)
if ok:
    print("Witness coupling (all mass moves downward in dominance):")
    for src, tgt, mass in coupling:
        print(f"   {format_partition(src):8s} -> {format_partition(tgt):8s}  mass {mass}")
print("Upper-set criterion agrees:", dominates_upperset(rho, rho_hat) == ok)

print("\nDominance survives projection (checked at every level):")
for k in (3, 2, 1):
    down_ok, _ = dominates_flow(project_to(rho, k), project_to(rho_hat, k))
    gap = tv_distance(project_to(rho, k), project_to(rho_hat, k))
    print(f"   level {k}: dominates = {down_ok}, tv distance = {gap}")
