"""Classical q-series identity checks, exact where possible.

Three identities verify formally under monomial substitutions (both sides
become genuine truncated series and must match coefficient by coefficient);
two involve q/zeta factors of non-positive q-order under any monomial
substitution and are checked numerically at real sample points instead,
with truncation-tail-derived tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import _binom_div, _binom_mul
from .scalars import (
    RATIONAL,
    InvalidParameterError,
    rational,
)
from .series import TruncatedSeries, pochhammer_product

__all__ = ["verify_identity", "IdentityReport", "FORMAL_IDENTITIES", "NUMERIC_IDENTITIES"]

FORMAL_IDENTITIES = ("jacobi", "fine", "heine")
NUMERIC_IDENTITIES = ("theta_reciprocal", "kronecker")


@dataclass
class IdentityReport:
    name: str
    mode: str  # "formal" | "numeric"
    params: dict
    order: int | None
    passed: bool
    max_discrepancy: str
    detail: str = ""

    def to_json_obj(self):
        return {
            "identity": self.name,
            "mode": self.mode,
            "params": {k: str(v) for k, v in self.params.items()},
            "N": self.order,
            "passed": self.passed,
            "max_discrepancy": self.max_discrepancy,
            "detail": self.detail,
        }


def _monomial(value) -> tuple:
    """Normalise a (coefficient, exponent) monomial parameter c*q^s."""
    if isinstance(value, tuple):
        c, s = value
    else:
        c, s = value, 1
    c = rational(c)
    if not isinstance(s, int):
        raise InvalidParameterError("monomial exponent must be an integer")
    if c == 0:
        raise InvalidParameterError("monomial coefficient must be nonzero")
    return c, s


def _require_formal(cond, what):
    if not cond:
        raise InvalidParameterError(
            f"substitution leaves the formal validity region: {what}")


def _mul_one_minus(co, c, e, N):
    """In place: co *= (1 - c q^e), e >= 0 (e = 0 is a scalar factor)."""
    if e == 0:
        f = rational(1) - c
        co[:] = [f * v for v in co]
    else:
        _binom_mul(co, e, -c, N)


def _div_one_minus(co, c, e, N):
    """In place: co /= (1 - c q^e), e >= 1."""
    _binom_div(co, e, c, N)


def _shift_scale(co, c, e, N):
    """In place: co *= c * q^e."""
    if e:
        co[:] = [rational(0)] * e + co[: N + 1 - e]
    if c != 1:
        co[:] = [c * v for v in co]


def _rational_one(N):
    co = [rational(0)] * (N + 1)
    co[0] = rational(1)
    return co


def _check_jacobi(params, N):
    """(-zeta, -q/zeta, q; q)_inf = sum_n q^{n(n-1)/2} zeta^n with zeta = c q^s.

    For s >= 2 both sides are Laurent with lowest exponent -s(s-1)/2; the
    common shift q^{s(s-1)/2} turns them into genuine power series.
    """
    c, s = _monomial(params.get("zeta", (params.get("c", 1), params.get("s", 1))))
    _require_formal(s >= 1, "zeta must have positive q-order")
    shift = s * (s - 1) // 2
    inv_c = rational(1) / c

    # Laurent factors of (-q/zeta;q)_inf with exponent <= 0, times q^shift.
    lau = {0: rational(1)}
    for k in range(s):
        nxt = dict(lau)
        for e, v in lau.items():
            key = e - k
            nxt[key] = nxt.get(key, rational(0)) + inv_c * v
        lau = nxt
    lhs = [rational(0)] * (N + 1)
    for e, v in lau.items():
        if 0 <= e + shift <= N:
            lhs[e + shift] = v

    head = TruncatedSeries(RATIONAL, N, lhs)
    head = head * pochhammer_product(inv_c, 1, 1, 1, N, RATIONAL)
    head = head * pochhammer_product(c, 1, s, 1, N, RATIONAL)
    head = head * pochhammer_product(1, -1, 1, 1, N, RATIONAL)

    rhs = [rational(0)] * (N + 1)
    n = 0
    while True:
        e = n * (n - 1) // 2 + s * n + shift
        if e > N:
            break
        rhs[e] += c**n
        n += 1
    n = -1
    while True:
        e = n * (n - 1) // 2 + s * n + shift
        if e > N:
            break
        rhs[e] += inv_c ** (-n)
        n -= 1
    return head.coeffs, rhs


def _check_fine(params, N):
    """sum (alpha;q)_n z^n / (gamma;q)_{n+1} = sum (alpha z/gamma;q)_n gamma^n / (z;q)_{n+1}."""
    ca, sa = _monomial(params["alpha"])
    cg, sg = _monomial(params["gamma"])
    cz, sz = _monomial(params["z"])
    for s, who in ((sa, "alpha"), (sg, "gamma"), (sz, "z")):
        _require_formal(s >= 1, f"{who} must have positive q-order")
    su = sa + sz - sg
    cu = ca * cz / cg
    _require_formal(su >= 0, "alpha*z/gamma must have non-negative q-order")

    lhs = [rational(0)] * (N + 1)
    term = _rational_one(N)
    _div_one_minus(term, cg, sg, N)
    n = 0
    while n * sz <= N:
        lhs = [u + v for u, v in zip(lhs, term)]
        _mul_one_minus(term, ca, sa + n, N)
        _shift_scale(term, cz, sz, N)
        _div_one_minus(term, cg, sg + n + 1, N)
        n += 1

    rhs = [rational(0)] * (N + 1)
    term = _rational_one(N)
    _div_one_minus(term, cz, sz, N)
    n = 0
    while n * sg <= N:
        rhs = [u + v for u, v in zip(rhs, term)]
        _mul_one_minus(term, cu, su + n, N)
        _shift_scale(term, cg, sg, N)
        _div_one_minus(term, cz, sz + n + 1, N)
        n += 1
    return lhs, rhs


def _check_heine(params, N):
    """Heine's transformation under monomial substitutions.

    sum (alpha,beta;q)_n z^n / ((gamma,q;q)_n)
      = (gamma/beta, beta z;q)_inf / ((gamma, z;q)_inf)
        * sum (alpha beta z/gamma, beta;q)_n (gamma/beta)^n / ((beta z, q;q)_n).
    """
    ca, sa = _monomial(params["alpha"])
    cb, sb = _monomial(params["beta"])
    cg, sg = _monomial(params["gamma"])
    cz, sz = _monomial(params["z"])
    for s, who in ((sa, "alpha"), (sb, "beta"), (sg, "gamma"), (sz, "z")):
        _require_formal(s >= 1, f"{who} must have positive q-order")
    sv = sg - sb
    cv = cg / cb
    _require_formal(sv >= 1, "gamma/beta must have positive q-order")
    sw = sa + sb + sz - sg
    cw = ca * cb * cz / cg
    _require_formal(sw >= 0, "alpha*beta*z/gamma must have non-negative q-order")

    lhs = [rational(0)] * (N + 1)
    term = _rational_one(N)
    n = 0
    while n * sz <= N:
        lhs = [u + v for u, v in zip(lhs, term)]
        _mul_one_minus(term, ca, sa + n, N)
        _mul_one_minus(term, cb, sb + n, N)
        _div_one_minus(term, cg, sg + n, N)
        _div_one_minus(term, 1, n + 1, N)
        _shift_scale(term, cz, sz, N)
        n += 1

    inner = [rational(0)] * (N + 1)
    term = _rational_one(N)
    n = 0
    while n * sv <= N:
        inner = [u + v for u, v in zip(inner, term)]
        _mul_one_minus(term, cw, sw + n, N)
        _mul_one_minus(term, cb, sb + n, N)
        _div_one_minus(term, cb * cz, sb + sz + n, N)
        _div_one_minus(term, 1, n + 1, N)
        _shift_scale(term, cv, sv, N)
        n += 1
    rhs = TruncatedSeries(RATIONAL, N, inner)
    rhs = rhs * pochhammer_product(cv, -1, sv, 1, N, RATIONAL)
    rhs = rhs * pochhammer_product(cb * cz, -1, sb + sz, 1, N, RATIONAL)
    rhs = rhs * pochhammer_product(cg, -1, sg, 1, N, RATIONAL).invert()
    rhs = rhs * pochhammer_product(cz, -1, sz, 1, N, RATIONAL).invert()
    return lhs, rhs.coeffs


def _product(factor_gen, tol=1e-30, cap=100000):
    acc = 1.0
    for f in factor_gen:
        acc *= f
        cap -= 1
        if cap <= 0 or abs(f - 1.0) < tol:
            break
    return acc


def _poch_inf_numeric(a, q0):
    """(a;q0)_inf for |q0| < 1."""
    def gen():
        t = a
        while True:
            yield 1.0 - t
            t *= q0

    return _product(gen())


def _check_theta_reciprocal_point(q0, z0):
    if not (0.0 < q0 < z0 < 1.0):
        raise InvalidParameterError("need real samples 0 < q < zeta < 1")
    euler = _poch_inf_numeric(q0, q0)
    lhs = euler * euler / (_poch_inf_numeric(z0, q0) * _poch_inf_numeric(q0 / z0, q0))
    rhs = 0.0
    n = 0
    while True:
        t = (-1.0) ** n * q0 ** (n * (n + 1) // 2) / (1.0 - z0 * q0**n)
        rhs += t
        if n > 2 and abs(t) < 1e-30:
            break
        n += 1
    k = 1
    while True:
        # n = -k rewritten stably: (-1)^k q^{k(k+1)/2} / (q^k - z)
        t = (-1.0) ** k * q0 ** (k * (k + 1) // 2) / (q0**k - z0)
        rhs += t
        if k > 2 and abs(t) < 1e-30:
            break
        k += 1
    return lhs, rhs


def _check_kronecker_point(q0, z0):
    if not (0.0 < q0 < z0 < 1.0):
        raise InvalidParameterError("need real samples 0 < q < zeta < 1")
    w = q0 / z0
    lhs = (_poch_inf_numeric(-w, q0) * _poch_inf_numeric(-z0, q0)) / (
        _poch_inf_numeric(w, q0) * _poch_inf_numeric(z0, q0))
    ratio = _poch_inf_numeric(-q0 * 1.0, q0) / _poch_inf_numeric(q0, q0)
    s = 0.0
    n = 1
    while True:
        t = (z0**n + w**n) / (1.0 + q0**n)
        s += t
        if abs(t) < 1e-30:
            break
        n += 1
    rhs = ratio * ratio * (1.0 + 2.0 * s)
    return lhs, rhs


_FORMAL = {"jacobi": _check_jacobi, "fine": _check_fine, "heine": _check_heine}
_NUMERIC = {
    "theta_reciprocal": _check_theta_reciprocal_point,
    "kronecker": _check_kronecker_point,
}


def verify_identity(name: str, params: dict, N: int | None = None,
                    tolerance: float = 1e-10) -> IdentityReport:
    """Check one identity and report the worst discrepancy.

    Formal identities take monomial parameters (c, s) meaning c*q^s and a
    truncation order N; they pass only on exact coefficient agreement.
    Numeric identities take params={"points": [(q, zeta), ...]} and pass
    when every absolute residual stays below the tolerance.
    """
    if name in _FORMAL:
        if N is None or not isinstance(N, int) or N < 1:
            raise InvalidParameterError("formal checks need a positive order N")
        lhs, rhs = _FORMAL[name](params, N)
        diffs = [abs(u - v) for u, v in zip(lhs, rhs)]
        worst = max(diffs)
        return IdentityReport(
            name, "formal", params, N, worst == 0, str(worst),
            detail="exact coefficient comparison mod q^(N+1)")
    if name in _NUMERIC:
        points = params.get("points")
        if not points:
            raise InvalidParameterError("numeric checks need sample points")
        worst = 0.0
        for (q0, z0) in points:
            lhs, rhs = _NUMERIC[name](float(q0), float(z0))
            worst = max(worst, abs(lhs - rhs))
        return IdentityReport(
            name, "numeric", params, None, worst < tolerance, repr(worst),
            detail=f"max absolute residual over {len(points)} points, tol {tolerance:g}")
    raise InvalidParameterError(f"unknown identity {name!r}")
