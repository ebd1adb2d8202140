"""The identity suite behind the generating-function manipulations.

Triple-product and transformation identities verify exactly as truncated
series under monomial substitutions; the theta reciprocal and the
bilateral summation identity involve factors of negative q-order and are
checked numerically at real points instead.
"""

from qbias import verify_identity

print("formal checks (exact coefficient agreement):")
for (c, s) in [(1, 1), (1, 2), (2, 3)]:
    rep = verify_identity("jacobi", {"c": c, "s": s}, N=200)
    print(f"  triple product at zeta = {c}*q^{s}: {rep.passed}")

rep = verify_identity("fine", {"alpha": (1, 2), "gamma": (1, 3), "z": (1, 1)}, N=150)
print(f"  series transformation (fine): {rep.passed}")
rep = verify_identity(
    "heine", {"alpha": (1, 1), "beta": (1, 1), "gamma": (1, 2), "z": (1, 1)}, N=150)
print(f"  series transformation (heine): {rep.passed}")

print("\nnumeric checks (absolute residual):")
points = [(0.2, 0.5), (0.1, 0.3)]
for name in ("theta_reciprocal", "kronecker"):
    rep = verify_identity(name, {"points": points})
    print(f"  {name}: residual {float(rep.max_discrepancy):.3g}, pass {rep.passed}")
