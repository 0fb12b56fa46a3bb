"""Sweeping the four box-move inequalities over all configurations.

For pairs of diagrams differing by one downward box move, with a second pair
obtained by deleting a shared corner, the dimension and specialization ratios
compare in a direction controlled by where the deleted corner sits.  Two of
the four statements are proved (the sweeps are regression tests); the monomial
and Hall-Littlewood forms are conjectural and these runs are the evidence.

Run: python demos/04_inequality_sweeps.py
"""

from fractions import Fraction as F

from younggraph.partitions import enumerate_move_quadruples
from younggraph.sweeps import (
    sweep_dim_ratio_inequality,
    sweep_hl_ratio_inequality,
    sweep_monomial_positivity,
    sweep_product_inequality,
)


def summarize(title, rows):
    holds = sum(1 for r in rows if r["verdict"] == "holds")
    fails = sum(1 for r in rows if r["verdict"] == "fails")
    na = sum(1 for r in rows if r["verdict"] == "not-applicable")
    print(f"{title}: {len(rows)} rows | holds {holds} | fails {fails} | not applicable {na}")


print("Move quadruples first appear at level 5:")
for n in range(3, 8):
    print(f"   level {n}: {len(enumerate_move_quadruples(n))} quadruples")
print()

summarize("product inequality   (n<=8, N<=10)", sweep_product_inequality(8, 10))
summarize("dimension ratios     (n<=8)       ", sweep_dim_ratio_inequality(8))
summarize("monomial positivity  (n<=6)       ", sweep_monomial_positivity(6))
summarize(
    "Hall-Littlewood grid (n<=5, N<=4)  ",
    sweep_hl_ratio_inequality(5, 4, (F(0), F(1, 4), F(1, 2), F(3, 4), F(1))),
)
