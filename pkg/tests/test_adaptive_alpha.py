import math

import oracle
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcalib.adapters import TwoProportionData, tess_two_proportions
from pcalib.adaptive_alpha import (
    adaptive_alpha_anova,
    adaptive_alpha_bic,
    adaptive_alpha_pbic_adjusted,
    adaptive_alpha_pbic_linear,
    adaptive_alpha_two_proportions,
    anova_substitution,
    reference_quantile,
)
from pcalib.errors import (
    ConfigurationError,
    DegenerateBracketError,
    DegreesOfFreedomError,
    DesignError,
    DomainError,
)

TABLE_N = [20, 50, 100, 150, 200]


def test_bic_form_golden():
    value = adaptive_alpha_bic(0.05, 1, 100, c_alpha=1.0)
    assert value == pytest.approx(0.027453539948590978, rel=1e-12)
    assert value == pytest.approx(float(oracle.alpha_bic(0.05, 1, 100, 1)), rel=1e-12)


def test_bic_form_requires_constant():
    with pytest.raises(ConfigurationError):
        adaptive_alpha_bic(0.05, 1, 100)


def test_pbic_adjusted_golden():
    assert adaptive_alpha_pbic_adjusted(0.05, 1, 100, 0.0) == pytest.approx(
        0.0040219453728398662, rel=1e-12)
    assert adaptive_alpha_pbic_adjusted(0.05, 1, 20, 0.731630) == pytest.approx(
        0.0065898772294216152, rel=1e-12)


@pytest.mark.parametrize("alpha,q,n,C", [(0.05, 2, 50, 0.3), (0.01, 3, 500, 1.0),
                                         (0.5, 1, 20, 0.73)])
def test_pbic_adjusted_against_mpmath(alpha, q, n, C):
    assert adaptive_alpha_pbic_adjusted(alpha, q, n, C) == pytest.approx(
        float(oracle.alpha_pbic_adjusted(alpha, q, n, C)), rel=1e-12)


def test_two_proportions_closed_form_equals_generic():
    for n in TABLE_N:
        for C in (0.0, math.log(2), 0.73):
            assert adaptive_alpha_two_proportions(0.05, n, C) == pytest.approx(
                adaptive_alpha_pbic_adjusted(0.05, 1, n, C), rel=1e-13)


def test_two_proportions_log2_levels_against_mpmath():
    for n in TABLE_N:
        assert adaptive_alpha_two_proportions(0.05, n, math.log(2)) == pytest.approx(
            float(oracle.alpha_pbic_adjusted(0.05, 1, n, oracle.pbic_correction(0))), rel=1e-12)
    got = [round(adaptive_alpha_two_proportions(0.05, n, math.log(2)), 4) for n in TABLE_N]
    assert got == [0.0067, 0.0040, 0.0027, 0.0022, 0.0019]


def test_two_proportion_example_chain():
    tq = tess_two_proportions(TwoProportionData(10, 10, sigma1_sq=0.2, sigma2_sq=0.2,
                                                p_hat_diff=0.0))
    assert tq.C == pytest.approx(math.log(2), rel=1e-15)


@given(st.integers(min_value=5, max_value=10_000), st.integers(min_value=5, max_value=10_000))
@settings(max_examples=40)
def test_decreasing_in_n(n1, n2):
    lo, hi = sorted((n1, n2))
    if lo == hi:
        return
    assert adaptive_alpha_pbic_adjusted(0.05, 1, hi, 0.5) < adaptive_alpha_pbic_adjusted(
        0.05, 1, lo, 0.5)


def test_reference_quantile_options():
    assert reference_quantile(0.05, 1) == pytest.approx(3.8414588206941260, rel=1e-13)
    fd = reference_quantile(0.05, 2, 30, 3, "f_deviance")
    assert fd == pytest.approx(float(oracle.g_value(0.05, 2, 30, 3, "f_deviance")), rel=1e-10)
    assert reference_quantile(0.05, 1, 10, 2, lambda a, q, n, j: 7.0) == 7.0
    with pytest.raises(ConfigurationError):
        reference_quantile(0.05, 1, g="nope")
    with pytest.raises(ConfigurationError):
        reference_quantile(0.05, 1, g="f_deviance")
    with pytest.raises(DegreesOfFreedomError):
        reference_quantile(0.05, 1, 3, 3, "f_deviance")


def test_f_deviance_approaches_chi2():
    big = reference_quantile(0.05, 2, 1e7, 3, "f_deviance")
    assert big == pytest.approx(reference_quantile(0.05, 2), rel=1e-5)


@pytest.mark.parametrize("g", ["chi2", "f_deviance"])
@pytest.mark.parametrize("args", [(0.05, 1, 82, 3, 100.0, 0.0), (0.01, 2, 40, 4, 12.5, -0.4)])
def test_linear_against_mpmath(args, g):
    assert adaptive_alpha_pbic_linear(*args, g=g) == pytest.approx(
        float(oracle.alpha_linear(*args, g=g)), rel=1e-10)


def test_linear_golden():
    assert adaptive_alpha_pbic_linear(0.05, 1, 82, 3, 100, 0) == pytest.approx(
        0.0045201524932749362, rel=1e-12)


def test_linear_domain():
    with pytest.raises(DesignError):
        adaptive_alpha_pbic_linear(0.05, 1, 50, 3, 0.0)
    with pytest.raises(DegreesOfFreedomError):
        adaptive_alpha_pbic_linear(0.05, 1, 3, 3, 2.0)
    with pytest.raises(DomainError):
        adaptive_alpha_pbic_linear(0.05, 3, 50, 2, 2.0)
    with pytest.raises(DegenerateBracketError):
        adaptive_alpha_pbic_linear(0.05, 1, 50, 3, 2.0, C=-100)


@pytest.mark.parametrize("mode", ["printed", "nested"])
def test_anova_substitution_ratio(mode):
    for k in range(2, 7):
        for r in range(2, 12):
            sub = anova_substitution(k, r, mode)
            ratio = (sub["n"] - sub["j"]) / (sub["n"] - 1)
            assert ratio == pytest.approx((r - 1) / (r - 1 / k), rel=1e-14)
            assert sub["q"] == k - 1
            assert sub["b"] == pytest.approx(r ** (k - 1) / k, rel=1e-15)


def test_anova_modes_coincide_for_chi2():
    for k, r in [(2, 5), (3, 10), (5, 4)]:
        assert adaptive_alpha_anova(k, r, 0.05, mode="printed") == adaptive_alpha_anova(
            k, r, 0.05, mode="nested")


def test_anova_modes_differ_under_f_deviance_except_k3():
    a = adaptive_alpha_anova(4, 6, 0.05, g="f_deviance", mode="printed")
    b = adaptive_alpha_anova(4, 6, 0.05, g="f_deviance", mode="nested")
    assert a != pytest.approx(b, rel=1e-6)


def test_anova_errors():
    with pytest.raises(DegreesOfFreedomError):
        adaptive_alpha_anova(1, 5, 0.05)
    with pytest.raises(ConfigurationError):
        adaptive_alpha_anova(3, 5, 0.05, mode="other")


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.5])
def test_alpha_domain(bad):
    with pytest.raises(DomainError):
        adaptive_alpha_pbic_adjusted(bad, 1, 10)
