import math
import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from biclab import problab as P
from oracles import f_exact, f_i_exact, g_exact, g_i_exact, h_i_exact, log2_fraction


# f, g, k0

@pytest.mark.parametrize("n", [2, 3, 7, 20, 33, 50])
def test_log2_f_g_match_exact_rationals(n):
    for k in range(0, n + 1):
        assert P.log2_f(n, k) == pytest.approx(log2_fraction(f_exact(n, k)), abs=1e-9)
        if k + 2 <= n:
            assert P.log2_g(n, k) == pytest.approx(log2_fraction(g_exact(n, k)), abs=1e-9)


def test_log2_f_small_k():
    n = 12345
    assert P.log2_f(n, 1) == pytest.approx(math.log2(n), abs=1e-12)
    assert P.log2_f(n, 2) == pytest.approx(math.log2(n * (n - 1) / 4), abs=1e-12)
    assert P.log2_g(6, 1) == pytest.approx(math.log2(7.5), abs=1e-12)
    with pytest.raises(ValueError):
        P.log2_f(5, 6)
    with pytest.raises(ValueError):
        P.log2_g(5, 4)


def test_log2_binom_large_n_is_finite():
    for n in (10**6, 10**9):
        assert math.isfinite(P.log2_f(n, 60))
    # the lgamma branch agrees with exact integers where both apply
    n, k = 100000, 5000
    exact = math.log2(math.comb(n, k))
    lg = (math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)) / math.log(2)
    assert P.log2_binom(n, k) == pytest.approx(exact, rel=1e-12) and lg == pytest.approx(exact, rel=1e-9)


def test_f_recurrence():
    n = 10**6
    for k in range(1, 61):
        lhs = P.log2_f(n, k + 1) - P.log2_f(n, k)
        assert lhs == pytest.approx(math.log2((n - k) / (k + 1)) - k, abs=1e-9)


@pytest.mark.parametrize("n", [10**3, 10**4, 10**6])
def test_g_over_f_identity(n):
    k = P.k0_of_n(n)
    rhs = (P.log2_f(n, k) + math.log2((n - k) * (n - k - 1) / ((k + 2) * (k + 1)))
           + math.log2(2 ** (k + 1) - 1) - (2 * k + 1))
    assert P.log2_g(n, k) == pytest.approx(rhs, abs=1e-9)


def test_k0_small_values():
    assert P.k0_of_n(2) == 1      # f(1) = 2, f(2) = 1/2
    assert P.k0_of_n(3) == 2      # f(2) = 3/2, f(3) = 1/8
    with pytest.raises(ValueError):
        P.k0_of_n(1)


@pytest.mark.xfail(strict=True, reason="stated value 2 conflicts with f(2) = 1/2 < 1; the definition gives 1")
def test_k0_of_two_stated_value():
    assert P.k0_of_n(2) == 2


def test_k0_of_1024():
    # direct evaluation: f(15) ~ 2^5.6 >= 1 > f(16) ~ 2^-9.8
    assert P.k0_of_n(1024) == 15


@pytest.mark.xfail(strict=True, reason="2 log2 n is only the leading asymptotic term; at n = 1024 k0 is 15")
def test_k0_of_1024_near_twice_log():
    assert abs(P.k0_of_n(1024) - 20) <= 2


def test_k0_definition_scan():
    for n in sorted({int(round(10 ** (1 + 5 * i / 200))) for i in range(201)}):
        k0 = P.k0_of_n(n)
        assert P.log2_f(n, k0) >= 0 > P.log2_f(n, k0 + 1)
        assert P.log2_f(n, k0) <= math.log2(n)


def test_k0_monotone():
    ks = [P.k0_of_n(n) for n in range(100, 2001)]
    assert all(a <= b for a, b in zip(ks, ks[1:]))


@pytest.mark.parametrize("n", [10**4, 10**5, 10**6, 10**8])
def test_ratio_near_k0(n):
    k0 = P.k0_of_n(n)
    assert P.log2_f(n, k0 + 1) - P.log2_f(n, k0) <= -0.5 * math.log2(n)


# regimes and events

def test_classify_rule():
    l2 = math.log2
    assert P.classify(l2(50), l2(1e-3)) == "I"
    assert P.classify(l2(2.5), l2(1e-3)) == "II"
    assert P.classify(l2(500), l2(0.5)) == "III"
    with pytest.raises(ValueError):
        P.classify(0.0, -1.0, T=1.0)


@pytest.mark.parametrize("n", [2, 50, 1000, 10**4, 10**6])
def test_regime_report(n):
    r = P.regime_classify(n)
    assert r.regime in ("I", "II", "III")
    assert r.log2_f_k0 >= 0 > r.log2_f_k0_plus_1
    assert r.k == (r.k0 + 1 if r.regime == "III" else r.k0)
    assert r.lam == pytest.approx(2 ** P.log2_f(n, r.k))
    d = r.to_dict()
    assert d["event_probs"].keys() == {"E11", "E10", "E01", "E00"}


def test_regime_at_50():
    r = P.regime_classify(50)
    assert (r.k0, r.regime) == (8, "II")
    assert r.lam == pytest.approx(2.0000303, rel=1e-6)


def test_event_examples():
    e = P.event_probabilities(0, 0)
    assert (e.p00, e.p10, e.p01, e.p11) == (1, 0, 0, 0)
    e = P.event_probabilities(math.log(2), math.log(2))
    for v in e.as_dict().values():
        assert v == pytest.approx(0.25, abs=1e-15)
    assert abs(P.event_probabilities(50, 50).p11 - 1) < 1e-20
    with pytest.raises(ValueError):
        P.event_probabilities(-1, 0)
    with pytest.raises(ValueError):
        P.event_probabilities(math.inf, 0)


@given(st.floats(0, 700), st.floats(0, 700))
def test_event_probabilities_are_a_distribution(lam, mu):
    e = P.event_probabilities(lam, mu)
    vals = list(e.as_dict().values())
    assert all(0 <= v <= 1 for v in vals)
    assert math.fsum(vals) == pytest.approx(1, abs=1e-12)
    assert e.p00 + e.p01 == pytest.approx(math.exp(-lam), abs=1e-12)
    assert e.p00 + e.p10 == pytest.approx(math.exp(-mu), abs=1e-12)


# moment terms

def test_moment_terms_match_exact_rationals():
    n, k = 40, 8
    for i in range(2, k):
        assert P.moment_term_f(n, k, i) == pytest.approx(log2_fraction(f_i_exact(n, k, i)), abs=1e-9)
    for i in range(2, k + 2):
        assert P.moment_term_g(n, k, i) == pytest.approx(log2_fraction(g_i_exact(n, k, i)), abs=1e-9)
    for i in range(2, k + 1):
        assert P.moment_term_h(n, k, i) == pytest.approx(log2_fraction(h_i_exact(n, k, i)), abs=1e-9)
    # the i = k-1 closed form
    direct = Fraction(math.comb(n, k) * k * (n - k), 2 ** (2 * math.comb(k, 2) - math.comb(k - 1, 2)))
    assert P.moment_term_f(n, k, k - 1) == pytest.approx(log2_fraction(direct), abs=1e-9)


def test_moment_term_ranges():
    with pytest.raises(ValueError):
        P.moment_term_f(40, 8, 8)
    with pytest.raises(ValueError):
        P.moment_term_g(40, 8, 1)
    with pytest.raises(ValueError):
        P.moment_term_h(40, 8, 9)


def test_moment_tables_shape_and_csv():
    t = P.lemma21_check(10**6)
    assert t.k == 33 and t.kind == "f"
    assert {r.case for r in t.rows} == {1, 2}
    csv_text = t.to_csv()
    assert csv_text.splitlines()[0] == "i,log2_term,log2_bound,margin"
    assert len(csv_text.splitlines()) == len(t.rows) + 1
    with pytest.raises(ValueError):
        P.lemma22_check(50)   # k0(50) = 8 < 9


def test_case_two_margins_hold_at_one_million():
    for check in (P.lemma21_check, P.lemma22_check, P.cross_term_check):
        assert all(r.margin <= 0 for r in check(10**6).rows if r.case == 2)


@pytest.mark.parametrize("check", [P.lemma21_check, P.lemma22_check, P.cross_term_check])
def test_margin_at_i2_decreases_with_n(check):
    margins = []
    for n in (10**4, 10**5, 10**6, 10**7, 10**8):
        margins.append(next(r.margin for r in check(n).rows if r.i == 2 and r.case == 1))
    assert all(a > b for a, b in zip(margins, margins[1:]))
    assert margins[-1] < 0


# entropy and the divisor sum

def test_entropy_values():
    assert P.entropy(0.5) == 1
    assert P.entropy(0) == 0 == P.entropy(1)
    assert P.entropy(0.25) == pytest.approx(0.5 + 0.75 * math.log2(4 / 3), abs=1e-15)
    assert P.entropy(0.25) == pytest.approx(0.8112781244591328, abs=1e-15)
    with pytest.raises(ValueError):
        P.entropy(1.5)


@given(st.floats(0, 1))
def test_entropy_symmetric_and_bounded(x):
    assert 0 <= P.entropy(x) <= 1
    assert P.entropy(x) == pytest.approx(P.entropy(1 - x), abs=1e-12)


def test_divisor_sum_m4():
    n, p = 100, 0.5
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        s = P.lemma31_sum(n, p, 4)
    assert s == pytest.approx(math.log2(math.comb(n, 2) * math.comb(n - 2, 2) * p**4), abs=1e-9)


def test_divisor_sum_prime_is_empty():
    n, p = 10**4, 0.01
    assert P.lemma31_sum(n, p, 13) == -math.inf
    assert P.lemma31_sum(n, p, 13, odd_surrogate=True) == pytest.approx(P.log2_binom(n, 7) + 14 * math.log2(p))


def test_divisor_sum_warns_outside_range():
    with pytest.warns(UserWarning):
        P.lemma31_sum(10**4, 0.01, 100)


def test_divisor_sum_d2_dominates_m12():
    terms = dict(P.lemma31_terms(10**5, 0.001, 12))
    assert set(terms) == {2, 3}
    assert terms[2] - terms[3] > 0.5 * math.log2(10**5)


def test_lemma31_check_preconditions():
    with pytest.raises(ValueError):
        P.lemma31_check(10**5, 0.2)
    with pytest.raises(ValueError):
        P.lemma31_check(10**4, 0.001)
    with pytest.raises(ValueError):
        P.lemma31_check(10**5, 0.001)


def test_lemma31_check_d2_dominance():
    n = 10**5
    b, rows = P.lemma31_check(n, 0.01)
    assert rows and all(r.m % 2 == 0 for r in rows)
    for r in rows:
        if r.m <= math.sqrt(n):
            assert r.log2_dominance >= 0.4 * math.log2(n)


def test_lemma31_b_positive_in_sparser_settings():
    assert P.lemma31_check(10**6, 0.0005)[0] > 0
    assert P.lemma31_check(10**7, 5e-5)[0] > 0


@pytest.mark.xfail(strict=True, raises=AssertionError, reason="direct scan: b is not monotone in p at n = 1e5")
def test_lemma31_b_increases_as_p_decreases():
    # p = 0.001 is excluded: np = 100 < 10 log2 n
    bs = [P.lemma31_check(10**5, p)[0] for p in (0.05, 0.02, 0.01, 0.005, 0.002)]
    assert all(a < b for a, b in zip(bs, bs[1:]))
