"""Jordan types of unit-upper-triangular matrices over small prime fields.

Counting matrices by the Jordan type of their nilpotent part gives a
q-analogue of the tableau dimension; the analogous ratio inequality on
box-move quadruples is checked by full enumeration.

Run: python demos/05_finite_field_jordan.py
"""

from younggraph.jordan import jordan_tables, sweep_jordan_inequality
from younggraph.partitions import format_partition

for n, p in ((4, 2), (4, 3)):
    level, _ = jordan_tables(n, p)
    print(f"Counts over F_{p} at n = {n} (total {p}^{n*(n-1)//2} = {p ** (n*(n-1)//2)}):")
    for lam in sorted(level, reverse=True):
        print(f"   {format_partition(lam):10s} {level[lam]}")
    print()

for n, p in ((5, 2), (6, 2), (5, 3)):
    rows = sweep_jordan_inequality(n, p)
    holds = sum(1 for r in rows if r["verdict"] == "holds")
    eq = sum(1 for r in rows if r.get("equality"))
    na = sum(1 for r in rows if r["verdict"] == "not-applicable")
    fails = sum(1 for r in rows if r["verdict"] == "fails")
    print(
        f"ratio inequality over F_{p}, n = {n}: {len(rows)} quadruples | "
        f"holds {holds} (of which equalities {eq}) | fails {fails} | skipped {na}"
    )
