import math

import oracle
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcalib.bayes_factors import (
    bf_anova,
    bf_anova_two_groups,
    bf_bic,
    bf_bic_unit,
    bf_fisher_exact,
    bf_pbic_linear,
    bf_ttest,
)
from pcalib.calibration import posterior_from_bf
from pcalib.errors import (
    DegenerateBracketError,
    DegenerateLikelihoodError,
    DesignError,
    DomainError,
)


def test_bic_golden():
    assert bf_bic(0.05, 1, 100, 0) == pytest.approx(1.2918771803369433, rel=1e-12)


@pytest.mark.parametrize("alpha,q,n,C,xi0", [(0.05, 1, 100, 0, 1), (0.01, 2, 30, 0.5, 1.3),
                                              (0.2, 3, 1000, -1.0, 2.0)])
def test_bic_against_mpmath(alpha, q, n, C, xi0):
    assert bf_bic(alpha, q, n, C, xi0) == pytest.approx(
        float(oracle.bf_bic(alpha, q, n, C, xi0)), rel=1e-11)


@given(st.floats(min_value=1e-6, max_value=0.9), st.integers(min_value=1, max_value=6),
       st.floats(min_value=2, max_value=1e5), st.floats(min_value=-0.5, max_value=3))
@settings(max_examples=50)
def test_bic_xi_one_is_unit_form(alpha, q, n, C):
    assert bf_bic(alpha, q, n, C, 1.0) == pytest.approx(bf_bic_unit(alpha, q, n, C), rel=1e-12)


def test_bic_grows_with_n():
    values = [bf_bic(0.05, 1, n) for n in (10, 100, 1000, 10_000)]
    assert values == sorted(values)


def test_linear_golden():
    assert bf_pbic_linear(0.05, 1, 82, 3, 100, 0) == pytest.approx(1.2358302820775598, rel=1e-12)


@pytest.mark.parametrize("g", ["chi2", "f_deviance"])
def test_linear_against_mpmath(g):
    assert bf_pbic_linear(0.03, 2, 60, 4, 25.0, 0.2, g) == pytest.approx(
        float(oracle.bf_linear(0.03, 2, 60, 4, 25.0, 0.2, g)), rel=1e-10)


def test_linear_domain():
    with pytest.raises(DesignError):
        bf_pbic_linear(0.05, 1, 50, 3, -1.0)
    with pytest.raises(DegenerateBracketError):
        bf_pbic_linear(0.05, 1, 50, 3, 1.0, C=-50)


def test_anova_against_mpmath():
    assert bf_anova(3, 10, 0.05) == pytest.approx(0.173312685940743, rel=1e-12)
    for k, r in [(2, 4), (4, 7), (6, 3)]:
        assert bf_anova(k, r, 0.02, 0.3) == pytest.approx(
            float(oracle.bf_anova(k, r, 0.02, 0.3)), rel=1e-11)


@given(st.integers(min_value=2, max_value=200), st.floats(min_value=1e-4, max_value=0.9))
@settings(max_examples=50)
def test_two_group_closed_form(r, alpha):
    assert bf_anova_two_groups(r, alpha) == pytest.approx(bf_anova(2, r, alpha), rel=1e-12)


def test_ttest_golden():
    assert bf_ttest(0, 50, 6) == pytest.approx(3.0550504633038933, rel=1e-13)
    assert bf_ttest(2, 50, 6) == pytest.approx(0.53403917676249691, rel=1e-13)
    assert bf_ttest(0, 50, 6) == pytest.approx(math.sqrt(56 / 6), rel=1e-15)


@given(st.floats(min_value=-20, max_value=20), st.integers(min_value=2, max_value=500),
       st.floats(min_value=0.1, max_value=50))
@settings(max_examples=50)
def test_ttest_symmetric_and_oracle(t, n, tau0):
    assert bf_ttest(t, n, tau0) == bf_ttest(-t, n, tau0)
    assert bf_ttest(t, n, tau0) == pytest.approx(float(oracle.bf_ttest(t, n, tau0)), rel=1e-11)


def test_ttest_decreasing_in_t():
    values = [bf_ttest(t, 30, 6) for t in (0, 1, 2, 3, 4)]
    assert values == sorted(values, reverse=True)


def test_fisher_golden():
    assert bf_fisher_exact(1, 1, 1, 1, 1) == pytest.approx(1.5, rel=1e-15)
    assert bf_fisher_exact(0, 1, 1, 1, 1) == pytest.approx(0.75, rel=1e-15)


def test_fisher_matches_direct_integral():
    from mpmath import beta, mpf
    s, n, a, b = 7, 20, 2.0, 3.0
    p0 = mpf(a) / (a + b)
    ref = beta(a, b) / beta(s + a, n - s + b) * p0**s * (1 - p0) ** (n - s)
    assert bf_fisher_exact(s, 12, 8, a, b) == pytest.approx(float(ref), rel=1e-12)


def test_fisher_errors():
    with pytest.raises(DomainError):
        bf_fisher_exact(3, 5, 5, 1, 1, p0=0.3)
    with pytest.raises(DomainError):
        bf_fisher_exact(11, 5, 5, 1, 1)
    with pytest.raises(DomainError):
        bf_fisher_exact(1, 5, 5, 0, 1)


def test_fisher_degenerate_p0():
    # p0 is only ever a/(a+b) inside (0, 1), so degeneracy needs an explicit p0 match
    with pytest.raises(DegenerateLikelihoodError):
        bf_fisher_exact(3, 5, 5, 1e-300, 1.0, p0=0.0)


def test_posteriors_are_probabilities():
    for bf in (bf_bic(0.05, 1, 100), bf_anova(3, 10, 0.05), bf_ttest(2, 50, 6)):
        assert 0 < posterior_from_bf(bf) < 1


@pytest.mark.parametrize("n1,n2,beta_hat", [(25, 25, 0.0), (40, 10, 0.3), (100, 50, 0.1)])
def test_lower_bound_dominance(n1, n2, beta_hat):
    import numpy as np

    from pcalib.adapters import TwoMeansData, tess_two_means, two_means_design_ratio
    from pcalib.calibration import INV_E, rlb

    n = n1 + n2
    tq = tess_two_means(TwoMeansData(n1, n2, beta_hat=beta_hat))
    b = two_means_design_ratio(n1, n2)
    for alpha in np.linspace(0.001, INV_E, 200, endpoint=False):
        floor = posterior_from_bf(rlb(alpha))
        pl = bf_pbic_linear(alpha, 1, n, 2, b, tq.C)
        pg = bf_bic(alpha, 1, n, tq.C)
        assert math.isfinite(pl) and math.isfinite(pg) and pl > 0 and pg > 0
        assert posterior_from_bf(pl) > floor
        assert posterior_from_bf(pg) > floor


def test_fisher_log_space_matches_naive():
    from math import comb, gamma

    def naive(s, n, a, b):
        beta_ab = gamma(a) * gamma(b) / gamma(a + b)
        beta_post = gamma(s + a) * gamma(n - s + b) / gamma(n + a + b)
        p0 = a / (a + b)
        return beta_ab / beta_post * p0**s * (1 - p0) ** (n - s)

    for n1 in range(1, 16):
        for n2 in range(1, 31 - n1):
            n = n1 + n2
            for s in range(0, n + 1, 3):
                for a, b in ((1.0, 1.0), (2.0, 5.0), (0.5, 0.5)):
                    assert bf_fisher_exact(s, n1, n2, a, b) == pytest.approx(
                        naive(s, n, a, b), rel=1e-10)
    assert comb(4, 2) == 6


def test_fisher_small_p0_against_rising_factorials():
    from fractions import Fraction

    def rising(x, k):
        out = Fraction(1)
        for i in range(k):
            out *= x + i
        return out

    for a in (Fraction(1, 500), Fraction(1, 10**6)):
        b = Fraction(1)
        p0 = a / (a + b)
        for n1, n2 in ((3, 3), (5, 2)):
            n = n1 + n2
            for s in range(n + 1):
                marginal = rising(a, s) * rising(b, n - s) / rising(a + b, n)
                ref = p0**s * (1 - p0) ** (n - s) / marginal
                assert bf_fisher_exact(s, n1, n2, float(a), float(b)) == pytest.approx(
                    float(ref), rel=1e-9)
