"""Residue-class bias sequences by three independent exact methods.

The three routes to p_n(a,b,m;x,y):

  * ``bias_series_gf``        -- restricted double sum attached to the
    weighted generating function, with the weight factor rewritten as the
    polynomial prod_{j<k} (x + y q^{jm}) so x = 0 needs no limit argument;
  * ``bias_series_dp``        -- a product over part sizes carrying an
    excess marker t (class-a parts contribute t, class-b parts 1/t),
    followed by summing the positive t-powers;
  * ``bias_series_symmetric`` -- single-sum closed forms available when
    the classes are symmetric (b = m - a), cheap even at large order.

All methods are exact.  The double-sum engine works internally on plain
integers: a series with weight denominators D carries coefficient c_n
scaled by D^n (the weight degree at q^n never exceeds n, so the scaled
coefficients are integers).  Integer weights take the same path with no
scaling at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .biasspec import BiasSpec
from .scalars import (
    INTEGER,
    RATIONAL,
    InvalidParameterError,
    format_rational,
    rational,
)
from .series import TruncatedSeries, theta_partial

__all__ = [
    "BiasSpec",
    "BiasReport",
    "MarkerLaurentSeries",
    "total_weighted_series",
    "bias_series_gf",
    "bias_series_dp",
    "bias_series_symmetric",
    "symmetric_distinct_pair",
    "excess_marker_series",
    "compare_bias",
    "monotonicity_check",
]


# -- low-level integer passes -------------------------------------------------


def _binom_mul(co, e, u, N):
    """In place: co *= (1 + u*q^e)."""
    for n in range(N, e - 1, -1):
        p = co[n - e]
        if p:
            co[n] += u * p


def _binom_div(co, e, u, N):
    """In place: co /= (1 - u*q^e), i.e. co *= sum_k u^k q^{ek}."""
    for n in range(e, N + 1):
        p = co[n - e]
        if p:
            co[n] += u * p


def _mul_trunc(a, b, N):
    """Schoolbook product of coefficient lists, truncated at N."""
    out = [0] * (N + 1)
    for i, ai in enumerate(a):
        if ai:
            lim = N - i + 1
            seg = b[:lim]
            tgt = out[i : i + len(seg)]
            out[i : i + len(seg)] = [t + ai * bj for t, bj in zip(tgt, seg)]
    return out


def _scaled_weights(x, y):
    """Write x = P/D, y = Q/D over the least common denominator D."""
    dx, dy = int(x.denominator), int(y.denominator)
    D = dx * dy // gcd(dx, dy)
    return int(x.numerator) * (D // dx), int(y.numerator) * (D // dy), D


def _series_domain(spec: BiasSpec) -> str:
    return INTEGER if spec.x.denominator == 1 and spec.y.denominator == 1 else RATIONAL


def _ungrade(co, D, domain, N) -> TruncatedSeries:
    """Turn D^n-scaled integer coefficients back into exact values."""
    if D == 1:
        vals = list(co)
        if domain == RATIONAL:
            vals = [rational(v) for v in vals]
    else:
        pw = 1
        vals = []
        for c in co:
            vals.append(rational(c, pw))
            pw *= D
    return TruncatedSeries(domain, N, vals)


# -- total weighted series ------------------------------------------------------

_TOTAL_CACHE: dict = {}


def _total_graded(P, Q, D, N):
    """Graded coefficients of (-yq;q)_inf / (xq;q)_inf."""
    key = (P, Q, D, N)
    cached = _TOTAL_CACHE.get(key)
    if cached is None:
        co = [0] * (N + 1)
        co[0] = 1
        if Q:
            pw = 1  # D^{e-1}
            for e in range(1, N + 1):
                _binom_mul(co, e, Q * pw, N)
                pw *= D
        if P:
            pw = 1
            for e in range(1, N + 1):
                _binom_div(co, e, P * pw, N)
                pw *= D
        if len(_TOTAL_CACHE) > 64:
            _TOTAL_CACHE.clear()
        _TOTAL_CACHE[key] = co
        cached = co
    return list(cached)


def total_weighted_series(x, y, N: int) -> TruncatedSeries:
    """Coefficient of q^n is p_n(x,y), the total weighted pair count.

    (1,0) gives the partition numbers, (0,1) the distinct-partition
    numbers, (1,1) the overpartition numbers; (0,0) is the constant 1.
    """
    x, y = rational(x), rational(y)
    if x < 0 or y < 0:
        raise InvalidParameterError("weights must be non-negative")
    if not isinstance(N, int) or N < 1:
        raise InvalidParameterError("order must be a positive integer")
    P, Q, D = _scaled_weights(x, y)
    domain = INTEGER if D == 1 else RATIONAL
    return _ungrade(_total_graded(P, Q, D, N), D, domain, N)


# -- the double-sum generating-function engine ---------------------------------

_PREFACTOR_CACHE: dict = {}


def _prefactor_graded(a, b, m, P, Q, D, N):
    """Graded coefficients of the double sum's product prefactor.

    (-yq;q)_inf (xq^a, xq^b; q^m)_inf / ((xq;q)_inf (-yq^a, -yq^b; q^m)_inf);
    symmetric under a <-> b.
    """
    lo, hi = min(a, b), max(a, b)
    key = (lo, hi, m, P, Q, D, N)
    cached = _PREFACTOR_CACHE.get(key)
    if cached is None:
        co = _total_graded(P, Q, D, N)
        for e0 in (lo, hi):
            if P:
                for e in range(e0, N + 1, m):
                    _binom_mul(co, e, -P * D ** (e - 1), N)
            if Q:
                for e in range(e0, N + 1, m):
                    _binom_div(co, e, -Q * D ** (e - 1), N)
        if len(_PREFACTOR_CACHE) > 64:
            _PREFACTOR_CACHE.clear()
        _PREFACTOR_CACHE[key] = co
        cached = co
    return list(cached)


def _ord_u(k, P, m):
    """q-order of the k-th weight ladder series (quadratic when x = 0)."""
    return 0 if P else m * k * (k - 1) // 2


def _u_ladder(P, Q, D, m, N, kmax):
    """Integer ladder L_k = D^k * prod_{j<k}(x+y q^{jm}) / (q^m;q^m)_k, k <= kmax."""
    ladder = [[0] * (N + 1)]
    ladder[0][0] = 1
    for k in range(1, kmax + 1):
        prev = ladder[-1]
        e = (k - 1) * m
        if e == 0:
            cur = [(P + Q) * v for v in prev]
        elif Q == 0:
            cur = [P * v for v in prev]
        else:
            cur = [P * v for v in prev]
            for n in range(e, N + 1):
                p = prev[n - e]
                if p:
                    cur[n] += Q * p
        _binom_div(cur, k * m, 1, N)
        ladder.append(cur)
    return ladder


def _graded_shift(u, k, mult, D, N):
    """Graded list of (ladder k) * q^{mult*k}: entry j carries D^{j+(mult-1)k}."""
    off = mult * k
    lim = N + 1 - off
    if lim <= 0:
        return []
    if D == 1:
        return u[:lim]
    pw = D ** ((mult - 1) * k)
    out = []
    for j in range(min(len(u), lim)):
        out.append(u[j] * pw)
        pw *= D
    return out


def bias_series_gf(spec: BiasSpec, N: int) -> TruncatedSeries:
    """p_n(a,b,m;x,y) for n <= N via the restricted double-sum form.

    The sum runs over index pairs n1 > n >= 0 with weight ladder factors
    at q^{a*n1 + b*n}; truncation bounds follow the exact q-orders, so the
    x = 0 case (quadratic orders) stays cheap at large N.
    """
    if spec.marker:
        raise InvalidParameterError("generating-function engine needs numeric weights")
    if not isinstance(N, int) or N < 1:
        raise InvalidParameterError("order must be a positive integer")
    a, b, m = spec.a, spec.b, spec.m
    P, Q, D = _scaled_weights(spec.x, spec.y)
    domain = _series_domain(spec)

    kmax = 0
    while _ord_u(kmax + 1, P, m) + a * (kmax + 1) <= N:
        kmax += 1
    graded = [0] * (N + 1)
    if kmax >= 1:
        ladder = _u_ladder(P, Q, D, m, N, kmax)
        shifted_a = [None] + [_graded_shift(ladder[k], k, a, D, N) for k in range(1, kmax + 1)]
        suffix = [0] * (N + 1)
        for k in range(1, kmax + 1):
            off = a * k
            seg = shifted_a[k]
            tgt = suffix[off : off + len(seg)]
            suffix[off : off + len(seg)] = [s + g for s, g in zip(tgt, seg)]
        acc = [0] * (N + 1)
        n = 0
        while n + 1 <= kmax and (_ord_u(n, P, m) + b * n
                                 + _ord_u(n + 1, P, m) + a * (n + 1)) <= N:
            if n >= 1:
                off = a * n
                seg = shifted_a[n]
                tgt = suffix[off : off + len(seg)]
                suffix[off : off + len(seg)] = [s - g for s, g in zip(tgt, seg)]
            s_start = a * (n + 1) + _ord_u(n + 1, P, m)
            inner = _graded_shift(ladder[n], n, b, D, N)
            base = b * n
            for j in range(_ord_u(n, P, m), len(inner)):
                p = inner[j]
                if not p:
                    continue
                i = base + j
                hi = N - i
                if hi < s_start:
                    break
                seg = suffix[s_start : hi + 1]
                tgt = acc[i + s_start : i + s_start + len(seg)]
                acc[i + s_start : i + s_start + len(seg)] = [
                    t + p * s for t, s in zip(tgt, seg)
                ]
            n += 1
        prefactor = _prefactor_graded(a, b, m, P, Q, D, N)
        graded = _mul_trunc(prefactor, acc, N)
    return _ungrade(graded, D, domain, N)


# -- the excess-marker dynamic programme ---------------------------------------


class MarkerLaurentSeries:
    """q-series whose q^n coefficient is a Laurent polynomial in the excess marker t.

    t tracks (parts in class a) - (parts in class b) over weighted pairs;
    the t-support of the q^n coefficient sits inside [-n, n].
    """

    __slots__ = ("spec", "order", "polys")

    def __init__(self, spec: BiasSpec, order: int, polys):
        self.spec = spec
        self.order = order
        self.polys = polys  # list of {t-exponent: weight} dicts

    def support_bounds(self, n: int):
        poly = self.polys[n]
        if not poly:
            return (0, 0)
        return (min(poly), max(poly))

    def collapse_total(self) -> TruncatedSeries:
        """Set t = 1: the unweighted total series."""
        domain = _series_domain(self.spec)
        zero = 0 if domain == INTEGER else rational(0)
        vals = [sum(poly.values(), zero) for poly in self.polys]
        return TruncatedSeries(domain, self.order, vals)

    def positive_excess(self) -> TruncatedSeries:
        """Sum of coefficients of t^k for k > 0: the bias sequence."""
        domain = _series_domain(self.spec)
        zero = 0 if domain == INTEGER else rational(0)
        vals = []
        for poly in self.polys:
            acc = zero
            for e, c in poly.items():
                if e > 0:
                    acc += c
            vals.append(acc)
        return TruncatedSeries(domain, self.order, vals)


def excess_marker_series(spec: BiasSpec, N: int) -> MarkerLaurentSeries:
    """Build the marker product over part sizes 1..N.

    Every part size d contributes the factor (1 + y w q^d)/(1 - x w q^d)
    with w = t, 1/t or 1 according to the residue class of d.
    """
    if spec.marker:
        raise InvalidParameterError("marker-weight specs are oracle-only")
    if not isinstance(N, int) or N < 1:
        raise InvalidParameterError("order must be a positive integer")
    a, b, m = spec.a, spec.b, spec.m
    domain = _series_domain(spec)
    if domain == INTEGER:
        x, y = int(spec.x), int(spec.y)
        one = 1
    else:
        x, y = spec.x, spec.y
        one = rational(1)
    polys = [dict() for _ in range(N + 1)]
    polys[0][0] = one
    am, bm = a % m, b % m
    for d in range(1, N + 1):
        r = d % m
        e = 1 if r == am else (-1 if r == bm else 0)
        if x:
            for n in range(d, N + 1):
                src = polys[n - d]
                if src:
                    tgt = polys[n]
                    for te, c in src.items():
                        k = te + e
                        v = x * c
                        if k in tgt:
                            tgt[k] += v
                        else:
                            tgt[k] = v
        if y:
            for n in range(N, d - 1, -1):
                src = polys[n - d]
                if src:
                    tgt = polys[n]
                    for te, c in src.items():
                        k = te + e
                        v = y * c
                        if k in tgt:
                            tgt[k] += v
                        else:
                            tgt[k] = v
    return MarkerLaurentSeries(spec, N, polys)


def bias_series_dp(spec: BiasSpec, N: int) -> TruncatedSeries:
    """p_n(a,b,m;x,y) via the excess-marker product; independent of the
    double-sum engine."""
    return excess_marker_series(spec, N).positive_excess()


# -- symmetric closed forms -----------------------------------------------------

_FLAVOR_WEIGHTS = {"01": (0, 1), "10": (1, 0), "11": (1, 1)}


def _check_symmetric_args(a, m, flavor):
    if flavor not in _FLAVOR_WEIGHTS:
        raise InvalidParameterError("flavor must be one of '01', '10', '11'")
    if not (isinstance(a, int) and isinstance(m, int)):
        raise InvalidParameterError("a and m must be integers")
    if not (1 <= a and 2 * a < m):
        raise InvalidParameterError(
            "symmetric classes need 1 <= a < m/2 (so that m-a differs from a)")


def _symmetric_prefactor_01(a, m, N):
    """(q^2;q^2)_inf / ((-q^a, -q^{m-a}, q^m; q^m)_inf (q;q)_inf)."""
    co = [0] * (N + 1)
    co[0] = 1
    for e in range(2, N + 1, 2):
        _binom_mul(co, e, -1, N)
    for e0 in (a, m - a):
        for e in range(e0, N + 1, m):
            _binom_div(co, e, -1, N)
    for e in range(m, N + 1, m):
        _binom_div(co, e, 1, N)
    for e in range(1, N + 1):
        _binom_div(co, e, 1, N)
    return co


def bias_series_symmetric(a: int, m: int, flavor: str, N: int) -> TruncatedSeries:
    """p_n(a, m-a, m; x, y) via the single-sum closed forms, flavors
    01 -> (x,y)=(0,1), 10 -> (1,0), 11 -> (1,1)."""
    _check_symmetric_args(a, m, flavor)
    if not isinstance(N, int) or N < 1:
        raise InvalidParameterError("order must be a positive integer")

    if flavor == "01":
        co = _symmetric_prefactor_01(a, m, N)
        theta = theta_partial(m, a, N).coeffs
        out = _mul_trunc(co, theta, N)
        return TruncatedSeries(INTEGER, N, out)

    if flavor == "10":
        co = [0] * (N + 1)
        co[0] = 1
        for e0 in (a, m - a):
            for e in range(e0, N + 1, m):
                _binom_mul(co, e, -1, N)
        for e in range(1, N + 1):
            _binom_div(co, e, 1, N)
        for e in range(m, N + 1, m):
            _binom_div(co, e, 1, N)
            _binom_div(co, e, 1, N)
        tail = [0] * (N + 1)
        n = 0
        while True:
            base = m * n * (n + 1) // 2 + m * n + a
            if base > N:
                break
            sign = 1 if n % 2 == 0 else -1
            step = m * n + a
            for e in range(base, N + 1, step):
                tail[e] += sign
            n += 1
        out = _mul_trunc(co, tail, N)
        return TruncatedSeries(INTEGER, N, out)

    # flavor "11"
    co = [0] * (N + 1)
    co[0] = 1
    for e in range(2, N + 1, 2):
        _binom_mul(co, e, -1, N)
    for e in range(2 * m, N + 1, 2 * m):
        _binom_mul(co, e, -1, N)
        _binom_mul(co, e, -1, N)
    for e0 in (a, m - a):
        for e in range(e0, N + 1, m):
            _binom_mul(co, e, -1, N)
    for e in range(1, N + 1):
        _binom_div(co, e, 1, N)
        _binom_div(co, e, 1, N)
    for e in range(m, N + 1, m):
        for _ in range(4):
            _binom_div(co, e, 1, N)
    for e0 in (a, m - a):
        for e in range(e0, N + 1, m):
            _binom_div(co, e, -1, N)
    tail = [0] * (N + 1)
    n = 1
    while a * n <= N:
        sign = 1
        e = a * n
        while e <= N:
            tail[e] += sign
            sign = -sign
            e += m * n
        n += 1
    out = _mul_trunc(co, tail, N)
    out = [2 * v for v in out]
    return TruncatedSeries(INTEGER, N, out)


def symmetric_distinct_pair(a: int, m: int, N: int):
    """Both orders of the symmetric distinct-partition bias, cheaply.

    Returns (d_n(a, m-a; m), d_n(m-a, a; m)) as integer series: collecting
    the negative marker powers swaps the theta argument a -> m-a under the
    same product prefactor.
    """
    _check_symmetric_args(a, m, "01")
    co = _symmetric_prefactor_01(a, m, N)
    fwd = _mul_trunc(co, theta_partial(m, a, N).coeffs, N)
    rev = _mul_trunc(co, theta_partial(m, m - a, N).coeffs, N)
    return (TruncatedSeries(INTEGER, N, fwd), TruncatedSeries(INTEGER, N, rev))


# -- comparisons ------------------------------------------------------------------

_METHODS = {
    "gf": bias_series_gf,
    "dp": bias_series_dp,
}


@dataclass
class BiasReport:
    """Tabulated bias sequence with its swapped-class counterpart."""

    spec: BiasSpec
    method: str
    order: int
    values: list
    swapped_values: list
    signs: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    def __post_init__(self):
        if not self.signs:
            diffs = [p - q for p, q in zip(self.values, self.swapped_values)]
            self.signs = [(d > 0) - (d < 0) for d in diffs]
            self.violations = [n for n, s in enumerate(self.signs) if s < 0]

    @property
    def zero_indices(self):
        return [n for n, s in enumerate(self.signs) if s == 0]

    def to_json_obj(self) -> dict:
        def fmt(v):
            return str(v) if isinstance(v, int) else format_rational(v)

        return {
            "spec": self.spec.to_json_obj(),
            "method": self.method,
            "N": self.order,
            "values": [fmt(v) for v in self.values],
            "swapped_values": [fmt(v) for v in self.swapped_values],
            "violations": list(self.violations),
        }

    def to_csv_rows(self):
        rows = [("n", "p_ab", "p_ba", "diff_sign")]
        for n, (p, q, s) in enumerate(zip(self.values, self.swapped_values, self.signs)):
            rows.append((n, p, q, s))
        return rows


def compare_bias(spec: BiasSpec, N: int, method: str = "gf") -> BiasReport:
    """Tabulate p_n(a,b,m;x,y) against p_n(b,a,m;x,y) for n <= N.

    The swapped sequence always comes from an independent run on the
    swapped spec, never from algebraic manipulation of the first run.
    """
    if method not in _METHODS:
        raise InvalidParameterError(f"unknown method {method!r}")
    fn = _METHODS[method]
    fwd = fn(spec, N)
    rev = fn(spec.swapped(), N)
    return BiasReport(spec, method, N, list(fwd.coeffs), list(rev.coeffs))


def monotonicity_check(values, m: int):
    """Check c_{n+m} >= c_n along a sequence; returns (ok, first bad index)."""
    if not isinstance(m, int) or m < 1:
        raise InvalidParameterError("modulus must be a positive integer")
    for n in range(len(values) - m):
        if values[n + m] < values[n]:
            return False, n
    return True, None
