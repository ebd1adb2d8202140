"""Cross-method agreement and landmark values for the bias engines."""

import pytest
from hypothesis import given, settings, strategies as st

from qbias import (
    BiasSpec,
    InvalidParameterError,
    bias_series_dp,
    bias_series_gf,
    bias_series_symmetric,
    compare_bias,
    excess_marker_series,
    monotonicity_check,
    oracle_bias,
    rational,
    symmetric_distinct_pair,
    theta_partial,
    total_weighted_series,
    TruncatedSeries,
)
from qbias.engine import _binom_div, _binom_mul

WEIGHT_GRID = [(1, 0), (0, 1), (1, 1), (2, 1), (rational(3, 2), rational(1, 2))]


def naive_double_sum(spec, N):
    """Direct sum over index pairs n1 > n with full series products.

    Slow reference built only from TruncatedSeries primitives; exercises
    none of the engine's incremental machinery.
    """
    x, y = spec.x, spec.y
    a, b, m = spec.a, spec.b, spec.m
    one = TruncatedSeries.one("rational", N)

    def ladder(k):
        acc = one
        for j in range(k):
            e = j * m
            co = [rational(0)] * (N + 1)
            co[0] = x
            if e <= N:
                co[e] += y
            acc = acc * TruncatedSeries("rational", N, co)
        for j in range(1, k + 1):
            if j * m <= N:
                fac = [rational(0)] * (N + 1)
                fac[0] = rational(1)
                fac[j * m] = rational(-1)
                acc = acc * TruncatedSeries("rational", N, fac).invert()
        return acc

    total = TruncatedSeries.zero("rational", N)
    n1 = 1
    while a * n1 <= N:
        un1 = ladder(n1).shift(a * n1)
        n = 0
        while n < n1 and a * n1 + b * n <= N:
            total = total + un1 * ladder(n).shift(b * n)
            n += 1
        n1 += 1

    pref = one
    for e in range(1, N + 1):
        co = [rational(0)] * (N + 1)
        co[0] = rational(1)
        co[e] = y
        pref = pref * TruncatedSeries("rational", N, co)
    for e in range(1, N + 1):
        co = [rational(0)] * (N + 1)
        co[0] = rational(1)
        co[e] = -x
        pref = pref * TruncatedSeries("rational", N, co).invert()
    for e0 in (a, b):
        for e in range(e0, N + 1, m):
            co = [rational(0)] * (N + 1)
            co[0] = rational(1)
            co[e] = -x
            pref = pref * TruncatedSeries("rational", N, co)
            co2 = [rational(0)] * (N + 1)
            co2[0] = rational(1)
            co2[e] = y
            pref = pref * TruncatedSeries("rational", N, co2).invert()
    return pref * total


@pytest.mark.parametrize("abm", [(1, 2, 2), (2, 1, 2), (1, 2, 3), (2, 3, 4), (1, 4, 5)])
@pytest.mark.parametrize("xy", WEIGHT_GRID)
def test_gf_dp_oracle_agree(abm, xy):
    a, b, m = abm
    spec = BiasSpec(a, b, m, *xy)
    gf = bias_series_gf(spec, 16)
    dp = bias_series_dp(spec, 16)
    assert gf == dp
    for n in range(17):
        assert rational(gf.coeffs[n]) == rational(oracle_bias(spec, n))


def test_gf_matches_naive_reference():
    for spec in (BiasSpec(1, 2, 2, 1, 1), BiasSpec(2, 3, 4, rational(3, 2), rational(1, 2)),
                 BiasSpec(1, 3, 3, 0, 1), BiasSpec(3, 1, 4, 2, 0)):
        fast = bias_series_gf(spec, 30)
        slow = naive_double_sum(spec, 30)
        assert [rational(c) for c in fast.coeffs] == slow.coeffs


def test_bias_starts_at_q_a():
    spec = BiasSpec(3, 5, 6, 1, 1)
    series = bias_series_gf(spec, 20)
    assert all(c == 0 for c in series.coeffs[:3])
    assert series.coeffs[3] == 2  # single part 3, as lambda or as mu


def test_parity_landmark_partitions():
    rep = compare_bias(BiasSpec(1, 2, 2, 1, 0), 100)
    assert rep.violations == []
    assert rep.zero_indices == [0, 2]


def test_parity_landmark_distinct():
    rep = compare_bias(BiasSpec(1, 2, 2, 0, 1), 200)
    early = [n for n in rep.violations if n <= 19]
    late = [n for n in rep.violations if n > 19]
    assert early, "strict inequality must fail somewhere below 20"
    assert late == []
    # strictness after 19: no ties either
    assert all(s > 0 for s in rep.signs[20:])


def test_symmetric_flavors_match_dp():
    for (a, m) in [(1, 3), (1, 4), (2, 5)]:
        for flavor, xy in (("01", (0, 1)), ("10", (1, 0)), ("11", (1, 1))):
            sym = bias_series_symmetric(a, m, flavor, 120)
            dp = bias_series_dp(BiasSpec(a, m - a, m, *xy), 120)
            assert sym.coeffs == dp.coeffs


def test_symmetric_example_values():
    s = bias_series_symmetric(1, 3, "01", 60)
    assert s.coeffs[1] == 1
    d = bias_series_dp(BiasSpec(1, 2, 3, 0, 1), 60)
    assert s.coeffs == d.coeffs


def test_symmetric_product_identity():
    # the distinct-part symmetric series equals the doubled-parts product
    # form (-q;q)_inf / ((-q^a, -q^{m-a}, q^m;q^m)_inf) * theta partial sum
    from qbias import pochhammer_product

    for (a, m) in [(1, 3), (2, 5), (1, 4)]:
        N = 150
        pref = pochhammer_product(1, 1, 1, 1, N)
        pref = pref * pochhammer_product(1, 1, a, m, N).invert()
        pref = pref * pochhammer_product(1, 1, m - a, m, N).invert()
        pref = pref * pochhammer_product(1, -1, m, m, N).invert()
        lhs = pref * theta_partial(m, a, N)
        assert lhs.coeffs == bias_series_symmetric(a, m, "01", N).coeffs


def test_symmetric_rejects_bad_classes():
    with pytest.raises(InvalidParameterError):
        bias_series_symmetric(2, 4, "01", 20)  # a = m/2
    with pytest.raises(InvalidParameterError):
        bias_series_symmetric(3, 5, "01", 20)  # a > m/2
    with pytest.raises(InvalidParameterError):
        bias_series_symmetric(1, 3, "xx", 20)


def test_symmetric_distinct_pair_swap():
    fwd, rev = symmetric_distinct_pair(2, 5, 100)
    assert fwd.coeffs == bias_series_gf(BiasSpec(2, 3, 5, 0, 1), 100).coeffs
    assert rev.coeffs == bias_series_gf(BiasSpec(3, 2, 5, 0, 1), 100).coeffs


def test_marker_collapse_equals_total():
    for spec in (BiasSpec(1, 2, 3, 1, 1), BiasSpec(2, 3, 4, rational(1, 2), 1)):
        marked = excess_marker_series(spec, 40)
        total = total_weighted_series(spec.x, spec.y, 40)
        assert marked.collapse_total().coeffs == total.coeffs


def test_marker_support_bounds():
    marked = excess_marker_series(BiasSpec(1, 2, 2, 1, 1), 30)
    for n in range(31):
        lo, hi = marked.support_bounds(n)
        assert -n <= lo <= hi <= n
        # smallest class parts are 1 and 2: support within [-n/2, n]
        assert hi <= n and lo >= -(n // 2)


def test_total_weighted_series_values():
    assert total_weighted_series(1, 0, 10).coeffs == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert total_weighted_series(0, 1, 8).coeffs == [1, 1, 1, 2, 2, 3, 4, 5, 6]
    assert total_weighted_series(1, 1, 6).coeffs == [1, 2, 4, 8, 14, 24, 40]
    assert total_weighted_series(0, 0, 5).coeffs == [1, 0, 0, 0, 0, 0]


def test_monotonicity_mod_m():
    for spec in (BiasSpec(1, 2, 2, 1, 0), BiasSpec(2, 3, 5, 1, 1), BiasSpec(1, 3, 4, 0, 1)):
        series = bias_series_gf(spec, 120)
        ok, bad = monotonicity_check(series.coeffs, spec.m)
        assert ok, f"monotonicity failed at {bad}"
    assert monotonicity_check([5, 5, 5, 5], 2) == (True, None)
    assert monotonicity_check([0, 1, 0, 2], 2)[0] is True
    assert monotonicity_check([3, 1, 2, 1], 2) == (False, 0)


def test_compare_bias_report_shape():
    rep = compare_bias(BiasSpec(1, 2, 3, 1, 0), 30)
    assert rep.signs[0] == 0
    assert len(rep.values) == 31
    obj = rep.to_json_obj()
    assert obj["N"] == 30 and obj["violations"] == []
    rows = rep.to_csv_rows()
    assert rows[0] == ("n", "p_ab", "p_ba", "diff_sign")
    assert len(rows) == 32


def test_gf_rejects_marker_spec():
    with pytest.raises(InvalidParameterError):
        bias_series_gf(BiasSpec(1, 2, 3, marker=True), 10)


@settings(max_examples=15, deadline=None)
@given(
    st.integers(min_value=2, max_value=5).flatmap(
        lambda m: st.tuples(
            st.just(m),
            st.integers(min_value=1, max_value=m),
            st.integers(min_value=1, max_value=m),
        )
    ),
    st.sampled_from(WEIGHT_GRID),
)
def test_gf_dp_agree_random(abm, xy):
    m, a, b = abm
    if a == b:
        return
    spec = BiasSpec(a, b, m, *xy)
    assert bias_series_gf(spec, 25) == bias_series_dp(spec, 25)
