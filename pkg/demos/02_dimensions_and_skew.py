"""Tableau-count dimensions: hook product vs path recursion, skew shapes.

Run: python demos/02_dimensions_and_skew.py
"""

from math import factorial

from younggraph import dim_hook, dim_paths, enumerate_partitions, skew_dim

print("Two independent routes to dim agree (hook product vs edge recursion):")
for lam in [(2, 1), (3, 1, 1), (4, 2), (5, 3, 1)]:
    print(f"   dim{lam} = {dim_hook(lam)} = {dim_paths(lam)}")

print("\nSum of squared dimensions is n! (paths down and back up):")
for n in (4, 6, 8):
    total = sum(dim_hook(lam) ** 2 for lam in enumerate_partitions(n))
    print(f"   n = {n}: {total} = {factorial(n)}")

print("\nSkew path counts by the factorial determinant:")
print("   paths (1)   -> (2,1):  ", skew_dim((2, 1), (1,)))
print("   paths (2)   -> (3,2):  ", skew_dim((3, 2), (2,)))
print("   paths (2,1) -> (4,3,1):", skew_dim((4, 3, 1), (2, 1)))
