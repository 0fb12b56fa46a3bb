"""Projected staircase atoms converge to the extreme measure, and the
clutching construction brackets a parameter point from both sides.

Run: python demos/07_thoma_convergence.py
"""

from fractions import Fraction as F

from younggraph import (
    ThomaParams,
    clutch_params,
    convergence_experiment,
    d_inf,
    extreme_measure,
    staircase_sequence,
)

params = ThomaParams((F(1, 2), F(1, 4)), (F(1, 8), F(1, 8)))

print("Deterministic staircase shapes tracking alpha=(1/2,1/4), beta=(1/8,1/8):")
for k in (24, 48, 96):
    lam = staircase_sequence(params, k)
    head = ",".join(map(str, lam[:4]))
    print(f"   k = {k:3d}: ({head},...)  with {len(lam)} rows")

print("\nLevel-2 extreme measure:", extreme_measure(2, params))
print("Total variation of the projected staircase atom against it:")
for k, tv in convergence_experiment(params, 2, [50, 100, 200, 400]):
    print(f"   k = {k:3d}: tv = {float(tv):.6f}  (exact {tv})")

print("\nClutching at eps = 1/10 brackets the point between two nearby ones:")
minus, plus = clutch_params(params, F(1, 10))
print("   below:", minus)
print("   above:", plus)
print("   sup distance between the two sides:", d_inf(minus, plus), "< 1/10")
