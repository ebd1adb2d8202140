"""Exact truncated formal power series over pluggable coefficient domains.

A series is a dense coefficient vector c_0..c_N; every operation is exact
modulo q^{N+1}.  No floating point enters series arithmetic anywhere; the
only numeric escape hatch is :func:`evaluate_numeric`.
"""

from __future__ import annotations

from .scalars import (
    INTEGER,
    MARKER,
    RATIONAL,
    DOMAINS,
    DomainMismatchError,
    InvalidParameterError,
    MarkerPoly,
    SingularSeriesError,
    format_rational,
    parse_rational,
    rational,
)


def _zero(domain):
    if domain == MARKER:
        return MarkerPoly.constant(0)
    if domain == RATIONAL:
        return rational(0)
    return 0


def _one(domain):
    if domain == MARKER:
        return MarkerPoly.constant(1)
    if domain == RATIONAL:
        return rational(1)
    return 1


def _coerce(domain, value):
    """Bring a scalar into the domain; rejects lossy coercions."""
    if domain == MARKER:
        if isinstance(value, MarkerPoly):
            return value
        return MarkerPoly.constant(value)
    if domain == RATIONAL:
        if isinstance(value, MarkerPoly):
            raise DomainMismatchError("marker scalar in rational series")
        return rational(value) if isinstance(value, int) else value
    if isinstance(value, int):
        return value
    raise DomainMismatchError(f"non-integer scalar {value!r} in integer series")


class TruncatedSeries:
    """Coefficients c_0..c_N of a formal power series, exact mod q^{N+1}."""

    __slots__ = ("domain", "order", "coeffs")

    def __init__(self, domain, order, coeffs=None):
        if domain not in DOMAINS:
            raise InvalidParameterError(f"unknown domain {domain!r}")
        if not isinstance(order, int) or order <= 0:
            raise InvalidParameterError(
                f"truncation order must be a positive integer, got {order!r}")
        self.domain = domain
        self.order = order
        if coeffs is None:
            self.coeffs = [_zero(domain)] * (order + 1)
        else:
            if len(coeffs) != order + 1:
                raise InvalidParameterError(
                    f"need {order + 1} coefficients, got {len(coeffs)}")
            self.coeffs = [_coerce(domain, c) for c in coeffs]

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(domain, order) -> "TruncatedSeries":
        return TruncatedSeries(domain, order)

    @staticmethod
    def one(domain, order) -> "TruncatedSeries":
        s = TruncatedSeries(domain, order)
        s.coeffs[0] = _one(domain)
        return s

    @staticmethod
    def monomial(domain, order, exponent, coeff=1) -> "TruncatedSeries":
        s = TruncatedSeries(domain, order)
        if not 0 <= exponent <= order:
            raise InvalidParameterError("monomial exponent outside 0..N")
        s.coeffs[exponent] = _coerce(domain, coeff)
        return s

    @staticmethod
    def from_coeffs(domain, coeffs) -> "TruncatedSeries":
        return TruncatedSeries(domain, len(coeffs) - 1, coeffs)

    def copy(self) -> "TruncatedSeries":
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.domain, s.order, s.coeffs = self.domain, self.order, list(self.coeffs)
        return s

    # -- basic protocol ---------------------------------------------------

    def __len__(self) -> int:
        return self.order + 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.domain == other.domain
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries({self.domain}, N={self.order}, [{head}{tail}])"

    def _check_compatible(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise DomainMismatchError("operand is not a TruncatedSeries")
        if self.domain != other.domain:
            raise DomainMismatchError(
                f"domain mismatch: {self.domain} vs {other.domain}")
        if self.order != other.order:
            raise DomainMismatchError(
                f"truncation order mismatch: {self.order} vs {other.order}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.domain, s.order = self.domain, self.order
        s.coeffs = [a + b for a, b in zip(self.coeffs, other.coeffs)]
        return s

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.domain, s.order = self.domain, self.order
        s.coeffs = [a - b for a, b in zip(self.coeffs, other.coeffs)]
        return s

    def __neg__(self) -> "TruncatedSeries":
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.domain, s.order = self.domain, self.order
        s.coeffs = [-a for a in self.coeffs]
        return s

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Full schoolbook convolution, exact mod q^{N+1}."""
        self._check_compatible(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        out = [_zero(self.domain)] * (N + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            lim = N - i
            row = b[: lim + 1]
            seg = out[i : i + len(row)]
            out[i : i + len(row)] = [s + ai * bj for s, bj in zip(seg, row)]
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.domain, s.order, s.coeffs = self.domain, N, out
        return s

    def scale(self, c) -> "TruncatedSeries":
        c = _coerce(self.domain, c)
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.domain, s.order = self.domain, self.order
        s.coeffs = [a * c for a in self.coeffs]
        return s

    def shift(self, e: int) -> "TruncatedSeries":
        """Multiply by q^e (e >= 0), discarding overflow past the order."""
        if e < 0:
            raise InvalidParameterError("negative shift")
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.domain, s.order = self.domain, self.order
        s.coeffs = [_zero(self.domain)] * min(e, self.order + 1) + self.coeffs[
            : max(self.order + 1 - e, 0)
        ]
        return s

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse mod q^{N+1}.

        The constant term must be invertible in the domain: +-1 for
        integer series, nonzero for rational series, a nonzero constant
        for marker series.
        """
        c0 = self.coeffs[0]
        domain = self.domain
        if domain == INTEGER:
            if c0 not in (1, -1):
                raise SingularSeriesError(
                    f"integer series with constant term {c0} is not invertible")
            inv0 = c0
        elif domain == RATIONAL:
            if not c0:
                raise SingularSeriesError("zero constant term")
            inv0 = rational(1) / c0
        else:
            if not c0.is_constant() or c0.is_zero():
                raise SingularSeriesError(
                    "marker series constant term must be a nonzero constant")
            v = c0.constant_value()
            inv0 = MarkerPoly.constant(v if v in (1, -1) else rational(1, 1) / v)
        N = self.order
        out = [_zero(domain)] * (N + 1)
        out[0] = inv0
        a = self.coeffs
        for n in range(1, N + 1):
            acc = _zero(domain)
            for k in range(1, n + 1):
                ak = a[k]
                if ak:
                    acc = acc + ak * out[n - k]
            out[n] = -(inv0 * acc) if domain == MARKER else -(acc * inv0)
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.domain, s.order, s.coeffs = domain, N, out
        return s

    # -- structural operations -------------------------------------------

    def truncate(self, new_order: int) -> "TruncatedSeries":
        """Discard coefficients past new_order (new_order <= N)."""
        if not isinstance(new_order, int) or new_order <= 0:
            raise InvalidParameterError("truncation order must be positive")
        if new_order > self.order:
            raise InvalidParameterError("cannot extend a truncated series")
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.domain, s.order = self.domain, new_order
        s.coeffs = self.coeffs[: new_order + 1]
        return s

    def convert(self, domain) -> "TruncatedSeries":
        """Explicit promotion integer -> rational -> marker.

        Demotions are rejected; promotion never happens implicitly.
        """
        if domain == self.domain:
            return self.copy()
        rank = {INTEGER: 0, RATIONAL: 1, MARKER: 2}
        if rank[domain] < rank[self.domain]:
            raise DomainMismatchError(
                f"cannot demote {self.domain} series to {domain}")
        return TruncatedSeries(domain, self.order, list(self.coeffs))

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict:
        if self.domain == INTEGER:
            coeffs = [str(c) for c in self.coeffs]
        elif self.domain == RATIONAL:
            coeffs = [format_rational(c) for c in self.coeffs]
        else:
            coeffs = [c.to_triples() for c in self.coeffs]
        return {
            "domain": self.domain,
            "truncation_order": self.order,
            "coeffs": coeffs,
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "TruncatedSeries":
        domain = obj["domain"]
        order = obj["truncation_order"]
        raw = obj["coeffs"]
        if domain == INTEGER:
            coeffs = [int(c) for c in raw]
        elif domain == RATIONAL:
            coeffs = [parse_rational(c) for c in raw]
        elif domain == MARKER:
            coeffs = [MarkerPoly.from_triples(t) for t in raw]
        else:
            raise InvalidParameterError(f"unknown domain {domain!r}")
        return TruncatedSeries(domain, order, coeffs)


# -- q-product builders ------------------------------------------------------


def pochhammer_product(c, sign, offset, step, order, domain=None):
    """Truncation of the infinite product prod_{j>=0} (1 + sign*c*q^{offset+j*step}).

    Only factors with exponent <= order contribute; offset >= 1 so the
    product stabilises mod q^{N+1}.
    """
    if sign not in (1, -1):
        raise InvalidParameterError("sign must be +1 or -1")
    if not isinstance(offset, int) or offset < 1:
        raise InvalidParameterError(
            "offset must be >= 1 (the infinite product needs positive q-order)")
    if not isinstance(step, int) or step < 1:
        raise InvalidParameterError("step must be a positive integer")
    if domain is None:
        domain = INTEGER if isinstance(c, int) else RATIONAL
    out = TruncatedSeries.one(domain, order)
    u = _coerce(domain, c if sign == 1 else -c)
    if not u:
        return out
    co = out.coeffs
    for e in range(offset, order + 1, step):
        for n in range(order, e - 1, -1):
            prev = co[n - e]
            if prev:
                co[n] = co[n] + u * prev
    return out


def pochhammer_finite(c, offset, step, count, order, domain=None):
    """Finite product prod_{j=0}^{count-1} (1 - c*q^{offset+j*step}).

    With offset = 0 this is the classical finite q-shifted factorial of a
    scalar; constant factors are allowed here because the product is finite.
    """
    if not isinstance(count, int) or count < 0:
        raise InvalidParameterError("count must be a non-negative integer")
    if not isinstance(offset, int) or offset < 0:
        raise InvalidParameterError("offset must be >= 0")
    if not isinstance(step, int) or step < 1:
        raise InvalidParameterError("step must be a positive integer")
    if domain is None:
        domain = INTEGER if isinstance(c, int) else RATIONAL
    out = TruncatedSeries.one(domain, order)
    u = _coerce(domain, c)
    if not u:
        return out
    co = out.coeffs
    for j in range(count):
        e = offset + j * step
        if e == 0:
            one = _one(domain)
            factor = one - u
            co[:] = [factor * v if domain == MARKER else v * factor for v in co]
            continue
        if e > order:
            break
        for n in range(order, e - 1, -1):
            prev = co[n - e]
            if prev:
                co[n] = co[n] - u * prev
    return out


def theta_partial(m, a, order):
    """Partial theta sum: q^{m*n*(n-1)/2 + a*n} summed over n >= 1, exponent <= N."""
    if not isinstance(m, int) or m < 1:
        raise InvalidParameterError("m must be a positive integer")
    if not isinstance(a, int) or a < 1:
        raise InvalidParameterError("a must be >= 1")
    out = TruncatedSeries.zero(INTEGER, order)
    n = 1
    while True:
        e = m * n * (n - 1) // 2 + a * n
        if e > order:
            break
        out.coeffs[e] += 1
        n += 1
    return out


def euler_product(order):
    """(q;q)_infinity truncated: prod_{j>=1} (1 - q^j)."""
    return pochhammer_product(1, -1, 1, 1, order)


# -- numeric evaluation -------------------------------------------------------


class NumericValue:
    """Float value of a truncated series plus a crude tail alarm."""

    __slots__ = ("value", "tail_alarm")

    def __init__(self, value, tail_alarm):
        self.value = value
        self.tail_alarm = tail_alarm

    def __repr__(self):
        return f"NumericValue({self.value!r}, tail_alarm={self.tail_alarm})"


def evaluate_numeric(series: TruncatedSeries, q0) -> NumericValue:
    """Sum c_n q0^n in floating point for |q0| < 1.

    The tail alarm raises when |c_N q0^N| * N exceeds 1e-6 of the partial
    sum magnitude, signalling that the truncation order was too small for
    this evaluation point.
    """
    if series.domain == MARKER:
        raise InvalidParameterError("numeric evaluation needs integer or rational coefficients")
    if abs(q0) >= 1:
        raise InvalidParameterError("evaluation point must satisfy |q0| < 1")
    q0 = complex(q0) if isinstance(q0, complex) else float(q0)
    # Horner from the top coefficient: numerically stable for |q0| < 1.
    acc = 0.0
    for c in reversed(series.coeffs):
        acc = acc * q0 + float(c)
    cn = float(series.coeffs[-1])
    tail = abs(cn * q0**series.order) * series.order
    alarm = tail > 1e-6 * abs(acc) if acc else tail > 0.0
    return NumericValue(acc, alarm)
