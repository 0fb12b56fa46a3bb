"""The coherent growth chain and the law of large numbers for row lengths.

Starting from the empty diagram, one box is added per step with probability
proportional to the specialized Schur value of the target shape.  For strictly
decreasing parameters of total mass 1, the scaled rows (and columns) of the
sampled diagram converge to the parameters.

Run: python demos/06_growth_sampler_lln.py
"""

from collections import Counter

from younggraph import PLANCHEREL, ThomaParams, extreme_measure, lln_experiment, sample_diagram

print("One-step distribution out of (2,1) under the Plancherel point:")
from younggraph import growth_transitions

for target, prob in growth_transitions((2, 1), PLANCHEREL):
    print(f"   -> {target} with probability {prob}")

print("\nEmpirical check at level 4 (20000 exact-arithmetic samples):")
counts = Counter(sample_diagram(4, PLANCHEREL, seed) for seed in range(20000))
exact = extreme_measure(4, PLANCHEREL)
for lam, mass in exact.items():
    print(f"   {str(lam):14s} expected {float(mass):.4f}  observed {counts[lam] / 20000:.4f}")

params = ThomaParams.parse("7/10,3/10")
print("\nScaled first rows at n = 2000 (float sampler mode, 8 trials):")
rows = lln_experiment(params, 2000, 8, seed=11, mode="float")
for r in rows:
    if r["kind"] == "row" and r["index"] == 1:
        print(f"   trial {r['trial']}: lambda_1/n = {float(r['value']):.4f}   (target 0.7)")
