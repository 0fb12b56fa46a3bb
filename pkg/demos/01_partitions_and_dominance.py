"""Partitions, the graded graph structure, dominance order, covers, upper sets.

Run: python demos/01_partitions_and_dominance.py
"""

from younggraph import (
    conjugate,
    covers,
    dominance_geq,
    enumerate_partitions,
    format_partition,
    upper_sets,
)

print("Partitions of 6, decreasing lexicographic:")
for lam in enumerate_partitions(6):
    print("  ", format_partition(lam))

print("\nConjugation flips rows and columns: (4,2,1) <->", conjugate((4, 2, 1)))

print("\nDominance order on level 6 (prefix sums):")
print("  (4,1,1) >= (3,3)?", dominance_geq((4, 1, 1), (3, 3)), " (incomparable pair)")
print("  (3,3)   >= (4,1,1)?", dominance_geq((3, 3), (4, 1, 1)))
print("  (4,2)   >= (3,3)?", dominance_geq((4, 2), (3, 3)))

print("\nCovers of (6,5,2,1) (immediate dominance neighbors below it):")
for lam_hat, move in covers((6, 5, 2, 1)):
    print(f"   {format_partition(lam_hat):12s} via box {move.from_cell} -> {move.to_cell}")

print("\nUpward-closed subsets of each small level:")
for n in range(1, 7):
    print(f"   level {n}: {len(upper_sets(n))} upper sets")
