"""Parity bias in partitions: odd parts beat even parts.

Counts partitions with more odd parts than even parts against the opposite
count, three independent ways, and shows the two classical landmark facts:
equality happens only at n = 0 and n = 2 for unrestricted partitions, while
for distinct partitions the strict inequality only sets in after n = 19.
"""

from qbias import BiasSpec, bias_series_dp, bias_series_gf, compare_bias, oracle_bias

N = 60

spec = BiasSpec(1, 2, 2, 1, 0)  # odd vs even parts, partition weights

gf = bias_series_gf(spec, N)
dp = bias_series_dp(spec, N)
oracle = [oracle_bias(spec, n) for n in range(21)]

print("three methods, first 21 values:")
print("  double-sum :", [int(c) for c in gf.coeffs[:21]])
print("  marker DP  :", [int(c) for c in dp.coeffs[:21]])
print("  brute force:", [int(v) for v in oracle])
assert gf == dp

report = compare_bias(spec, N)
print("\nmore-odd minus more-even is never negative;")
print("ties occur exactly at n =", report.zero_indices)

distinct = compare_bias(BiasSpec(1, 2, 2, 0, 1), 200)
print("\nsame comparison restricted to distinct parts:")
print("violations at n =", distinct.violations, "(none after 19)")
