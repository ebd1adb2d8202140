"""Brute-force partition enumeration and direct weighted-bias evaluation.

Everything here works straight from the combinatorial definitions, with no
generating functions anywhere: this module is the ground truth the series
engines are tested against.  Enumeration is streamed and nothing is cached
between calls; these routines are for correctness at desk scale, not speed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .biasspec import BiasSpec
from .scalars import InvalidParameterError, MarkerPoly, rational

ENUM_CAP = 60      # single-set enumeration cap
PAIR_CAP = 36      # cap for sums over pairs (lam, mu) with |lam|+|mu| = n


@dataclass(frozen=True)
class Partition:
    """Nonincreasing tuple of positive integer parts; the empty partition has size 0."""

    parts: tuple

    def __post_init__(self):
        prev = None
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise InvalidParameterError(f"invalid part {p!r}")
            if prev is not None and p > prev:
                raise InvalidParameterError("parts must be nonincreasing")
            prev = p

    @property
    def size(self) -> int:
        return sum(self.parts)

    def num_parts(self) -> int:
        return len(self.parts)

    def residue_count(self, a: int, m: int) -> int:
        """Number of parts congruent to a modulo m (residues taken in 1..m)."""
        if not 1 <= a <= m:
            raise InvalidParameterError("residue class must lie in 1..m")
        return sum(1 for p in self.parts if (p - a) % m == 0)


def _iter_partitions(n: int, maxpart: int):
    """Yield nonincreasing part tuples of n with parts <= maxpart."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _iter_partitions(n - first, first):
            yield (first,) + rest


def _iter_distinct(n: int, maxpart: int):
    """Yield strictly decreasing part tuples of n with parts <= maxpart."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _iter_distinct(n - first, first - 1):
            yield (first,) + rest


def _check_enum_cap(n: int):
    if not isinstance(n, int) or n < 0:
        raise InvalidParameterError("n must be a non-negative integer")
    if n > ENUM_CAP:
        raise InvalidParameterError(
            f"n={n} exceeds the enumeration cap {ENUM_CAP}; "
            "use the series engine for larger sizes")


def enumerate_partitions(n: int):
    """Stream every partition of n exactly once (n <= 60)."""
    _check_enum_cap(n)
    for parts in _iter_partitions(n, n if n else 1):
        yield Partition(parts)


def enumerate_distinct(n: int):
    """Stream every partition of n into distinct parts exactly once (n <= 60)."""
    _check_enum_cap(n)
    for parts in _iter_distinct(n, n if n else 1):
        yield Partition(parts)


def _check_pair_cap(n: int):
    if not isinstance(n, int) or n < 0:
        raise InvalidParameterError("n must be a non-negative integer")
    if n > PAIR_CAP:
        raise InvalidParameterError(
            f"n={n} exceeds the pair-enumeration cap {PAIR_CAP}; "
            "use the series engine for larger sizes")


def _weight_tables(x, y, marker: bool):
    """Powers of the weights, either exact rationals or marker monomials."""
    if marker:
        def wx(l):
            return MarkerPoly({(l, 0): 1})

        def wy(l):
            return MarkerPoly({(0, l): 1})

        zero = MarkerPoly.constant(0)
    else:
        def wx(l):
            return x**l

        def wy(l):
            return y**l

        zero = rational(0)
    return wx, wy, zero


def _excess_histogram(n: int, a: int, b: int, m: int, weight, distinct: bool):
    """Map (residue-a count minus residue-b count) -> summed weight over one set.

    The sum runs over P(n) or D(n); the weight of a partition with l parts
    is weight(l).  This is the direct definitional sum, merely grouped by
    the excess statistic.
    """
    hist: dict = {}
    iterator = _iter_distinct(n, n if n else 1) if distinct else _iter_partitions(n, n if n else 1)
    for parts in iterator:
        ca = 0
        cb = 0
        for p in parts:
            r = p % m
            if r == a % m:
                ca += 1
            elif r == b % m:
                cb += 1
        d = ca - cb
        w = weight(len(parts))
        if d in hist:
            hist[d] = hist[d] + w
        else:
            hist[d] = w
    return hist


def oracle_bias(spec: BiasSpec, n: int):
    """p_n(a,b,m;x,y) straight from the definition.

    Sums x^{l(lam)} y^{l(mu)} over pairs (lam, mu) in P x D with
    |lam| + |mu| = n and more parts in class a than in class b (classes
    counted jointly over the pair).  A marker spec returns the exact
    polynomial sum of X^{l(lam)} Y^{l(mu)} instead.
    """
    _check_pair_cap(n)
    a, b, m = spec.a, spec.b, spec.m
    wx, wy, zero = _weight_tables(spec.x, spec.y, spec.marker)
    total = zero
    for j in range(n + 1):
        hp = _excess_histogram(j, a, b, m, wx, distinct=False)
        hd = _excess_histogram(n - j, a, b, m, wy, distinct=True)
        for dp, wp in hp.items():
            for dd, wd in hd.items():
                if dp + dd > 0:
                    total = total + wp * wd
    return total


def oracle_total(x, y, n: int, marker: bool = False):
    """p_n(x,y): summed weights over all pairs (lam, mu) with |lam|+|mu| = n.

    Specialisations: (1,0) counts partitions, (0,1) distinct partitions,
    (1,1) overpartitions.
    """
    _check_pair_cap(n)
    if not marker:
        x, y = rational(x), rational(y)
        if x < 0 or y < 0:
            raise InvalidParameterError("weights must be non-negative")
    wx, wy, zero = _weight_tables(x, y, marker)
    total = zero
    for j in range(n + 1):
        sp = zero
        for parts in _iter_partitions(j, j if j else 1):
            sp = sp + wx(len(parts))
        sd = zero
        for parts in _iter_distinct(n - j, (n - j) if n - j else 1):
            sd = sd + wy(len(parts))
        total = total + sp * sd
    return total


def count_partitions(n: int) -> int:
    """|P(n)| by direct enumeration."""
    _check_enum_cap(n)
    return sum(1 for _ in _iter_partitions(n, n if n else 1))


def count_distinct(n: int) -> int:
    """|D(n)| by direct enumeration."""
    _check_enum_cap(n)
    return sum(1 for _ in _iter_distinct(n, n if n else 1))
