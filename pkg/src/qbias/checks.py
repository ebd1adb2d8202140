"""Inequality, non-negativity and threshold verifications.

Implements the verification side of the bias engine: the dominance sweeps
over weight grids, the divisor-witness criterion for the distinct-parts
dominance family, the four non-negativity expansions, and the finite-horizon
threshold scanner for the distinct-partition bias conjecture.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .biasspec import BiasSpec
from .engine import (
    _binom_div,
    _binom_mul,
    _mul_trunc,
    _scaled_weights,
    _ungrade,
    bias_series_dp,
    bias_series_gf,
    compare_bias,
    monotonicity_check,
    symmetric_distinct_pair,
)
from .scalars import (
    RATIONAL,
    INTEGER,
    InvalidParameterError,
    format_rational,
    rational,
)
from .series import TruncatedSeries

__all__ = [
    "doubling_orbit_witness",
    "nonneg_suite",
    "nonneg_expand",
    "random_nonneg_params",
    "NonnegReport",
    "conjecture_scan",
    "ScanReport",
    "dominance_sweep",
    "distinct_dominance_sweep",
    "SweepReport",
    "cross_check_matrix",
    "default_jobs",
]


def default_jobs() -> int:
    env = os.environ.get("QBIAS_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return max(1, os.cpu_count() or 1)


# -- divisor witness for the distinct-parts dominance family -------------------


def doubling_orbit_witness(a: int, b: int, m: int):
    """Smallest k | (b-a) whose doubling orbit {2^h k mod m : h >= 0}
    avoids both residue classes a and b; None when no divisor qualifies.

    The orbit of k under doubling mod m enters a cycle within m steps, so
    2m iterations with seen-state detection decide each candidate.
    """
    if not (1 <= a < b <= m):
        raise InvalidParameterError("need 1 <= a < b <= m")
    am, bm = a % m, b % m
    diff = b - a
    for k in range(1, diff + 1):
        if diff % k:
            continue
        state = k % m
        seen = set()
        ok = True
        for _ in range(2 * m + 1):
            if state == am or state == bm:
                ok = False
                break
            if state in seen:
                break
            seen.add(state)
            state = (2 * state) % m
        if ok:
            return k
    return None


# -- non-negativity suite -------------------------------------------------------


@dataclass
class NonnegReport:
    kind: str
    params: dict
    order: int
    passed: bool
    first_negative: int | None

    def to_json_obj(self):
        return {
            "kind": self.kind,
            "params": {k: str(v) for k, v in self.params.items()},
            "N": self.order,
            "passed": self.passed,
            "first_negative": self.first_negative,
        }


def _require(cond, message):
    if not cond:
        raise InvalidParameterError(f"hypothesis violated: {message}")


def _as_weight(v):
    v = rational(v)
    if v < 0:
        raise InvalidParameterError("weights must be non-negative")
    return v


def _graded_weight_ladder_sum(P, Q, D, s, m, exp_mult, N):
    """Graded sum over k >= 0 of prod_{j<k}(x+y q^{s+jm}) q^{exp_mult*(k+1)}
    divided by (q^s;q^m)_{k+1}.

    Shared shape of both branches of the paired-sum difference check.
    """
    acc = [0] * (N + 1)
    # ladder starts at k = 0: term q^{exp_mult} / (1 - q^s)
    term = [0] * (N + 1)
    term[0] = 1
    _binom_div(term, s, 1, N)
    k = 0
    while exp_mult * (k + 1) <= N:
        off = exp_mult * (k + 1)
        shift_pow = D ** (off - k)  # grading: entry j of term carries D^{j+off-k}
        pw = shift_pow
        lim = N - off
        tgt = acc[off:]
        if D == 1:
            for j in range(min(len(term), lim + 1)):
                t = term[j]
                if t:
                    tgt[j] += t
        else:
            for j in range(min(len(term), lim + 1)):
                t = term[j]
                if t:
                    tgt[j] += t * pw
                pw *= D
        acc[off:] = tgt
        # advance the ladder: * (x + y q^{s+km}) / (1 - q^{s+(k+1)m})
        e = s + k * m
        if Q and e <= N:
            nxt = [P * v for v in term]
            for n in range(e, N + 1):
                p = term[n - e]
                if p:
                    nxt[n] += Q * p
            term = nxt
        else:
            term = [P * v for v in term]
        _binom_div(term, s + (k + 1) * m, 1, N)
        k += 1
        if not any(term):
            break
    return acc


def _expand_f_series(params, N):
    a, b, m = params["a"], params["b"], params["m"]
    x, y = _as_weight(params["x"]), _as_weight(params["y"])
    _require(1 <= a < b <= m, "need 1 <= a < b <= m")
    _require(x >= 1, "need x >= 1")
    _require((a, b) != (1, 2), "the claim excludes (a, b) = (1, 2)")
    P, Q, D = _scaled_weights(x, y)
    co = [0] * (N + 1)
    co[0] = 1
    if Q:
        pw = 1
        for e in range(1, N + 1):
            _binom_mul(co, e, Q * pw, N)
            pw *= D
    if P:
        pw = 1
        for e in range(1, N + 1):
            _binom_div(co, e, P * pw, N)
            pw *= D
    for e0 in (a, b):
        if P:
            for e in range(e0, N + 1, m):
                _binom_mul(co, e, -P * D ** (e - 1), N)
        if Q:
            for e in range(e0, N + 1, m):
                _binom_div(co, e, -Q * D ** (e - 1), N)
    # * (1 - q^{b-a}); grading of q^{b-a} is D^{b-a}
    upper = [0] * (N + 1)
    e = b - a
    for n in range(N, e - 1, -1):
        co[n] -= (D**e) * co[n - e]
    domain = INTEGER if D == 1 else RATIONAL
    return _ungrade(co, D, domain, N)


def _expand_maino(params, N):
    a, b, m, s = params["a"], params["b"], params["m"], params["s"]
    x, y = _as_weight(params["x"]), _as_weight(params["y"])
    _require(isinstance(a, int) and a >= 1, "a must be a positive integer")
    _require(isinstance(b, int) and b >= 1, "b must be a positive integer")
    _require(isinstance(m, int) and m >= 1, "m must be a positive integer")
    _require(isinstance(s, int) and s >= 1, "s must be a positive integer")
    _require(x >= 1, "need x >= 1")
    P, Q, D = _scaled_weights(x, y)
    first = _graded_weight_ladder_sum(P, Q, D, s, m, a, N)
    second = _graded_weight_ladder_sum(P, Q, D, s, m, a * b, N)
    co = [u - v for u, v in zip(first, second)]
    domain = INTEGER if D == 1 else RATIONAL
    return _ungrade(co, D, domain, N)


def _expand_chern_corollary(params, N):
    m, s = params["m"], params["s"]
    _require(isinstance(m, int) and m >= 1, "m must be a positive integer")
    _require(isinstance(s, int) and s >= 1, "s must be a positive integer")
    acc = [0] * (N + 1)
    denom = [0] * (N + 1)
    denom[0] = 1  # 1/(q^s;q^m)_k, advanced per k
    for k in range(1, N + 1):
        _binom_div(denom, s + (k - 1) * m, 1, N)
        # add q^k (1 - q^k) * denom
        lim = N - k
        for j in range(min(len(denom), lim + 1)):
            d = denom[j]
            if d:
                acc[k + j] += d
        lim2 = N - 2 * k
        for j in range(min(len(denom), lim2 + 1)):
            d = denom[j]
            if d:
                acc[2 * k + j] -= d
    return TruncatedSeries(INTEGER, N, acc)


def _expand_andrews(params, N):
    a_seq, b_seq = list(params["a_seq"]), list(params["b_seq"])
    h = params["h"]
    x, y = _as_weight(params["x"]), _as_weight(params["y"])
    _require(len(a_seq) == len(b_seq) and a_seq, "sequences must share a positive length")
    _require(all(isinstance(v, int) and v >= 1 for v in a_seq + b_seq),
             "sequence entries must be positive integers")
    _require(all(u < v for u, v in zip(a_seq, a_seq[1:])), "first sequence must increase")
    _require(all(u < v for u, v in zip(b_seq, b_seq[1:])), "second sequence must increase")
    a0, b0 = a_seq[0], b_seq[0]
    _require(b0 > a0, "need b_0 > a_0")
    _require(b0 % a0 == 0, "need b_0 divisible by a_0")
    for j in range(1, len(a_seq)):
        _require((b_seq[j] - a_seq[j]) % a0 == 0,
                 "need b_j - a_j divisible by a_0 for every j >= 1")
    _require(isinstance(h, int) and h >= 0, "h must be a non-negative integer")
    _require(x >= 1, "need x >= 1")
    P, Q, D = _scaled_weights(x, y)

    def branch(seq, lead):
        co = [0] * (N + 1)
        off = lead * h
        if off > N:
            return co
        co[off] = P**h * D ** (off - h)  # graded (x q^lead)^h
        for e in seq:
            if Q:
                _binom_mul(co, e, Q * D ** (e - 1), N)
            _binom_div(co, e, P * D ** (e - 1), N)
        return co

    co = [u - v for u, v in zip(branch(a_seq, a0), branch(b_seq, b0))]
    domain = INTEGER if D == 1 else RATIONAL
    return _ungrade(co, D, domain, N)


_NONNEG_KINDS = {
    "f_series": _expand_f_series,
    "maino": _expand_maino,
    "chern_corollary": _expand_chern_corollary,
    "andrews": _expand_andrews,
}


def nonneg_expand(kind: str, params: dict, N: int) -> TruncatedSeries:
    """Exact expansion of one of the four non-negativity expressions.

    Hypotheses are checked up front and named on failure; the suite never
    silently evaluates outside a claim's scope.
    """
    if kind not in _NONNEG_KINDS:
        raise InvalidParameterError(f"unknown non-negativity kind {kind!r}")
    if not isinstance(N, int) or N < 1:
        raise InvalidParameterError("order must be a positive integer")
    return _NONNEG_KINDS[kind](params, N)


def nonneg_suite(kind: str, params: dict, N: int) -> NonnegReport:
    series = nonneg_expand(kind, params, N)
    first_neg = None
    for n, c in enumerate(series.coeffs):
        if c < 0:
            first_neg = n
            break
    return NonnegReport(kind, params, N, first_neg is None, first_neg)


def random_nonneg_params(kind: str, rng: random.Random) -> dict:
    """Draw parameters satisfying the hypotheses of the given kind."""
    def weight_ge1():
        return rational(rng.randint(1, 3) * 2 + rng.randint(0, 3), 2)

    def weight_ge0():
        return rational(rng.randint(0, 5), rng.choice((1, 2)))

    if kind == "f_series":
        while True:
            m = rng.randint(2, 8)
            a = rng.randint(1, m - 1)
            b = rng.randint(a + 1, m)
            if (a, b) != (1, 2):
                break
        return {"a": a, "b": b, "m": m, "x": weight_ge1(), "y": weight_ge0()}
    if kind == "maino":
        return {
            "a": rng.randint(1, 4),
            "b": rng.randint(1, 4),
            "m": rng.randint(1, 6),
            "s": rng.randint(1, 6),
            "x": weight_ge1(),
            "y": weight_ge0(),
        }
    if kind == "chern_corollary":
        return {"m": rng.randint(1, 10), "s": rng.randint(1, 10)}
    if kind == "andrews":
        a0 = rng.randint(1, 3)
        length = rng.randint(1, 5)
        a_seq = [a0]
        for _ in range(length - 1):
            a_seq.append(a_seq[-1] + rng.randint(1, 4))
        b0 = a0 * rng.randint(2, 4)
        b_seq = [b0]
        for j in range(1, length):
            lo = b_seq[-1] + 1
            # choose b_j = a_j + a0*k >= lo
            k = max(1, -(-(lo - a_seq[j]) // a0))
            b_seq.append(a_seq[j] + a0 * (k + rng.randint(0, 2)))
        return {
            "a_seq": a_seq,
            "b_seq": b_seq,
            "h": rng.randint(0, 3),
            "x": weight_ge1(),
            "y": weight_ge0(),
        }
    raise InvalidParameterError(f"unknown non-negativity kind {kind!r}")


# -- conjecture threshold scanner ------------------------------------------------


@dataclass
class ScanReport:
    a: int
    b: int
    m: int
    horizon: int
    violations: list
    threshold: int
    inconclusive: bool

    def to_json_obj(self):
        return {
            "a": self.a,
            "b": self.b,
            "m": self.m,
            "horizon": self.horizon,
            "violations": list(self.violations),
            "threshold": self.threshold,
            "inconclusive": self.inconclusive,
        }


def conjecture_scan(a: int, b: int, m: int, N: int,
                    guard_fraction: float = 0.1) -> ScanReport:
    """Scan the distinct-partition bias d_n(a,b;m) vs d_n(b,a;m) up to n = N.

    Reports every violating n, the minimal dominance threshold *within the
    horizon* (last violation + 1, or 0), and an inconclusive flag when
    violations occur in the top guard_fraction of the horizon.  No claim
    is made beyond the horizon.
    """
    if not (1 <= a < b <= m):
        raise InvalidParameterError("need 1 <= a < b <= m")
    if m < 3:
        raise InvalidParameterError("the scan needs m >= 3")
    if b == m - a and 2 * a < m:
        fwd, rev = symmetric_distinct_pair(a, m, N)
        d_ab, d_ba = fwd.coeffs, rev.coeffs
    else:
        spec = BiasSpec(a, b, m, 0, 1)
        d_ab = bias_series_gf(spec, N).coeffs
        d_ba = bias_series_gf(spec.swapped(), N).coeffs
    violations = [n for n in range(N + 1) if d_ab[n] < d_ba[n]]
    threshold = violations[-1] + 1 if violations else 0
    cut = N - int(guard_fraction * N)
    inconclusive = any(n >= cut for n in violations)
    return ScanReport(a, b, m, N, violations, threshold, inconclusive)


# -- grid sweeps ------------------------------------------------------------------


@dataclass
class SweepReport:
    name: str
    order: int
    comparisons: int
    violations: list = field(default_factory=list)  # (spec label, [n ...])
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_obj(self):
        return {
            "check": self.name,
            "N": self.order,
            "comparisons": self.comparisons,
            "violations": [
                {"spec": label, "indices": idx} for label, idx in self.violations
            ],
            "witnesses": {k: v for k, v in sorted(self.witnesses.items())},
            "passed": self.passed,
        }


def _compare_worker(args):
    a, b, m, xs, ys, N = args
    spec = BiasSpec(a, b, m, rational(*xs), rational(*ys))
    report = compare_bias(spec, N)
    mono_fwd = monotonicity_check(report.values, m)[0]
    mono_rev = monotonicity_check(report.swapped_values, m)[0]
    return spec.label(), report.violations, mono_fwd and mono_rev


def _run_comparisons(tasks, jobs):
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_compare_worker, tasks, chunksize=8))
    return [_compare_worker(t) for t in tasks]


def _as_pair(v):
    v = rational(v)
    return (int(v.numerator), int(v.denominator))


def dominance_sweep(m_max: int, xs, ys, N: int, jobs: int | None = None) -> SweepReport:
    """Residue dominance over every ordered pair a < b <= m <= m_max and
    the given weight grids; weights x must satisfy x >= 1."""
    xs = [rational(v) for v in xs]
    ys = [rational(v) for v in ys]
    if any(x < 1 for x in xs):
        raise InvalidParameterError("dominance grid needs x >= 1")
    if any(y < 0 for y in ys):
        raise InvalidParameterError("weights must be non-negative")
    tasks = []
    for m in range(1, m_max + 1):
        for b in range(2, m + 1):
            for a in range(1, b):
                for x in xs:
                    for y in ys:
                        tasks.append((a, b, m, _as_pair(x), _as_pair(y), N))
    results = _run_comparisons(tasks, jobs or default_jobs())
    report = SweepReport("thm1", N, len(tasks))
    for label, violations, mono in results:
        if violations:
            report.violations.append((label, violations))
        if not mono:
            report.violations.append((label, ["monotonicity"]))
    return report


def distinct_dominance_sweep(m_max: int, xs, N: int, jobs: int | None = None) -> SweepReport:
    """Witnessed dominance with y = 1: every triple (a, b, m) admitting a
    doubling-orbit witness is checked over the x grid."""
    xs = [rational(v) for v in xs]
    if any(x < 0 for x in xs):
        raise InvalidParameterError("weights must be non-negative")
    tasks = []
    witnesses = {}
    for m in range(1, m_max + 1):
        for b in range(2, m + 1):
            for a in range(1, b):
                k = doubling_orbit_witness(a, b, m)
                if k is None:
                    continue
                witnesses[f"({a},{b},{m})"] = k
                for x in xs:
                    tasks.append((a, b, m, _as_pair(x), (1, 1), N))
    results = _run_comparisons(tasks, jobs or default_jobs())
    report = SweepReport("thm2", N, len(tasks), witnesses=witnesses)
    for label, violations, mono in results:
        if violations:
            report.violations.append((label, violations))
        if not mono:
            report.violations.append((label, ["monotonicity"]))
    return report


# -- cross-method agreement --------------------------------------------------------


def cross_check_matrix(m_max: int, n_max: int, weights=((1, 0), (0, 1), (1, 1), (2, 1))):
    """Method-agreement matrix: gf vs dp vs brute-force oracle.

    Returns (rows, all_ok); each row records one spec and whether the three
    routes produced identical values for every n <= n_max.
    """
    from .oracle import oracle_bias

    if n_max > 36:
        raise InvalidParameterError("oracle cross-checks are capped at n = 36")
    rows = []
    all_ok = True
    for m in range(1, m_max + 1):
        for a in range(1, m + 1):
            for b in range(1, m + 1):
                if a == b:
                    continue
                for (x, y) in weights:
                    spec = BiasSpec(a, b, m, x, y)
                    gf = bias_series_gf(spec, n_max)
                    dp = bias_series_dp(spec, n_max)
                    orc = [oracle_bias(spec, n) for n in range(n_max + 1)]
                    gf_dp = gf.coeffs == dp.coeffs
                    gf_orc = all(
                        rational(gf.coeffs[n]) == rational(orc[n]) for n in range(n_max + 1)
                    )
                    ok = gf_dp and gf_orc
                    all_ok = all_ok and ok
                    rows.append({
                        "spec": spec.label(),
                        "gf_eq_dp": gf_dp,
                        "gf_eq_oracle": gf_orc,
                    })
    return rows, all_ok
