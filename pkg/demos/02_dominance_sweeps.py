"""Residue-class dominance, swept over weight grids.

For classes a < b modulo m, partitions weighted x per part (x >= 1) and
distinct parts weighted y, the class-a-heavy count dominates the
class-b-heavy count for every n.  With y = 1 the same holds for any x >= 0
whenever some divisor of b - a has a doubling orbit avoiding both classes.
"""

from qbias import (
    distinct_dominance_sweep,
    dominance_sweep,
    doubling_orbit_witness,
)

rep = dominance_sweep(m_max=5, xs=[1, 2], ys=[0, 1], N=120)
print(f"x>=1 sweep: {rep.comparisons} comparisons, violations: {rep.violations}")

rep2 = distinct_dominance_sweep(m_max=8, xs=[0, 1], N=120)
print(f"witnessed y=1 sweep: {rep2.comparisons} comparisons, "
      f"violations: {rep2.violations}")
print("witnesses found:")
for label, k in sorted(rep2.witnesses.items())[:10]:
    print(f"  {label}: k = {k}")

print("\nspot checks of the witness search:")
for (a, b, m) in [(1, 3, 4), (3, 6, 9), (1, 2, 2)]:
    print(f"  ({a},{b},{m}) ->", doubling_orbit_witness(a, b, m))
