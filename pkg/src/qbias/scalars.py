"""Exact scalar arithmetic: arbitrary-precision integers, rationals, and
bivariate marker polynomials.

All series coefficients are one of three kinds ("domains"):

  * ``integer``  -- Python ints (arbitrary precision),
  * ``rational`` -- exact rationals, normalised, positive denominator,
  * ``marker``   -- polynomials in two formal weight markers X, Y with
                    exact coefficients (integers, or rationals after a
                    division).

gmpy2 is used for rationals when available; the pure-Python Fraction
fallback is semantically identical, only slower.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def rational(p, q=1):
        """Exact rational p/q, normalised with positive denominator."""
        return _mpq(p, q)

    _RATIONAL_TYPES = (int, _mpq, Fraction)
except ImportError:  # pragma: no cover - mirror always has gmpy2
    def rational(p, q=1):
        return Fraction(p, q)

    _RATIONAL_TYPES = (int, Fraction)

INTEGER = "integer"
RATIONAL = "rational"
MARKER = "marker"

DOMAINS = (INTEGER, RATIONAL, MARKER)


class QbiasError(Exception):
    """Base for all package errors."""


class InvalidParameterError(QbiasError, ValueError):
    """Rejected input: parameter outside an operation's precondition."""


class DomainMismatchError(InvalidParameterError):
    """Operands live in different coefficient domains or orders."""


class SingularSeriesError(QbiasError, ZeroDivisionError):
    """Constant term not invertible in its coefficient domain."""


class TailBoundError(InvalidParameterError):
    """Truncation tail too large for the requested numeric evaluation."""


def is_rational_value(v) -> bool:
    return isinstance(v, _RATIONAL_TYPES)


def parse_rational(text: str):
    """Parse "p/q" or "p" into an exact rational.

    Floating-point notation is rejected; exact inputs only.
    """
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            p, q = int(num), int(den)
        except ValueError:
            raise InvalidParameterError(f"not an exact rational: {text!r}")
        if q == 0:
            raise InvalidParameterError(f"zero denominator: {text!r}")
        return rational(p, q)
    try:
        return rational(int(s))
    except ValueError:
        raise InvalidParameterError(f"not an exact rational: {text!r}")


def format_rational(v) -> str:
    """Canonical "p/q" form (denominator always present, positive)."""
    return f"{v.numerator}/{v.denominator}"


def as_int(v) -> int:
    """Exact conversion to int; rejects non-integral values."""
    if isinstance(v, int):
        return v
    if v.denominator != 1:
        raise InvalidParameterError(f"not an integer: {v}")
    return int(v.numerator)


class MarkerPoly:
    """Polynomial in the weight markers X, Y.

    Stored as a map (i, j) -> coefficient of X^i Y^j; zero coefficients
    are never stored.  Coefficients are integers, or exact rationals when
    a division has occurred.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for (i, j), c in terms.items():
                if c:
                    cleaned[(int(i), int(j))] = c
        self.terms = cleaned

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(c) -> "MarkerPoly":
        return MarkerPoly({(0, 0): c} if c else {})

    @staticmethod
    def x_marker() -> "MarkerPoly":
        return MarkerPoly({(1, 0): 1})

    @staticmethod
    def y_marker() -> "MarkerPoly":
        return MarkerPoly({(0, 1): 1})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "MarkerPoly") -> "MarkerPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = MarkerPoly.__new__(MarkerPoly)
        res.terms = out
        return res

    def __sub__(self, other: "MarkerPoly") -> "MarkerPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) - c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = MarkerPoly.__new__(MarkerPoly)
        res.terms = out
        return res

    def __neg__(self) -> "MarkerPoly":
        res = MarkerPoly.__new__(MarkerPoly)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __mul__(self, other):
        if not isinstance(other, MarkerPoly):
            return self.scale(other)
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        res = MarkerPoly.__new__(MarkerPoly)
        res.terms = out
        return res

    def scale(self, c) -> "MarkerPoly":
        if not c:
            return MarkerPoly.constant(0)
        res = MarkerPoly.__new__(MarkerPoly)
        res.terms = {k: v * c for k, v in self.terms.items()}
        return res

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_value(self):
        return self.terms.get((0, 0), 0)

    def evaluate(self, x, y):
        """Exact value at markers X=x, Y=y."""
        total = rational(0)
        for (i, j), c in self.terms.items():
            total += c * x**i * y**j
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, MarkerPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "MarkerPoly(0)"
        bits = []
        for (i, j), c in sorted(self.terms.items()):
            mono = f"X^{i}Y^{j}" if i or j else ""
            bits.append(f"{c}{mono}")
        return "MarkerPoly(" + " + ".join(bits) + ")"

    # -- serialization ---------------------------------------------------

    def to_triples(self):
        """Sorted [i, j, "coef"] triples; rationals as "p/q" strings."""
        out = []
        for (i, j), c in sorted(self.terms.items()):
            if isinstance(c, int):
                out.append([i, j, str(c)])
            else:
                out.append([i, j, format_rational(c)])
        return out

    @staticmethod
    def from_triples(triples) -> "MarkerPoly":
        terms = {}
        for i, j, c in triples:
            v = parse_rational(c)
            if v.denominator == 1:
                v = int(v.numerator)
            terms[(int(i), int(j))] = v
        return MarkerPoly(terms)
