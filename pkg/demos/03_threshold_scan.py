"""Finite-horizon thresholds for the distinct-partition bias.

For distinct partitions the class-a vs class-b dominance can fail at small
n; this scans for the last violation within a horizon.  Four class triples
have famous nonzero thresholds; symmetric triples otherwise appear to
dominate from the start, except the excluded (1,2,3) whose violations
recur forever in the class n = 2 mod 3.
"""

from qbias import conjecture_scan

print("triple      threshold  violations")
for (a, b, m) in [(2, 3, 5), (2, 4, 6), (3, 4, 7), (4, 5, 9),
                  (1, 3, 4), (1, 4, 5), (2, 5, 7), (3, 6, 9)]:
    rep = conjecture_scan(a, b, m, 500)
    print(f"({a},{b},{m})     {rep.threshold:>5}      {rep.violations}")

rep = conjecture_scan(1, 2, 3, 300)
print(f"\n(1,2,3) is the genuine exception: {len(rep.violations)} violations "
      f"up to 300, all with n = 2 mod 3: "
      f"{all(n % 3 == 2 for n in rep.violations)}; "
      f"flagged inconclusive: {rep.inconclusive}")
