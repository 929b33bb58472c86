"""Calibrated and exact Bayes factors B01.

The calibrated factors evaluate the minimum Bayes factor at an adaptive
significance level, which brings the lower bound up to the scale of an
objective Bayes factor:

* :func:`bf_bic` -- BIC structure, any null shape ``xi0``.
* :func:`bf_pbic_linear` -- nested linear models, design ratio ``b``.
* :func:`bf_anova` / :func:`bf_anova_two_groups` -- balanced one-way ANOVA.

Two exact factors serve as comparators: :func:`bf_ttest` (normal prior on
the mean difference) and :func:`bf_fisher_exact` (beta prior on the common
proportion).

All products are accumulated in log space.
"""

import math

from .adaptive_alpha import anova_substitution, reference_quantile
from .errors import (
    DegenerateBracketError,
    DegenerateLikelihoodError,
    DegreesOfFreedomError,
    DesignError,
    DomainError,
)
from .numerics import chi2_quantile, log_beta

__all__ = [
    "bf_bic",
    "bf_bic_unit",
    "bf_pbic_linear",
    "bf_anova",
    "bf_anova_two_groups",
    "bf_ttest",
    "bf_fisher_exact",
]


def _log_neg_alpha_log_alpha(alpha, xi0=1.0):
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie strictly inside (0, 1), got {alpha!r}")
    return xi0 * math.log(alpha) + math.log(-math.log(alpha))


def _log_positive(value, what):
    if not value > 0:
        raise DegenerateBracketError(f"{what} = {value!r} must be positive")
    return math.log(value)


def bf_bic(alpha, q, n, C=0.0, xi0=1.0, tail="upper"):
    """Calibrated Bayes factor with BIC structure.

    Parameters
    ----------
    alpha : float
        Observed significance level (p-value), in (0, 1).
    q : int
        Number of parameters tested.
    n : float
        Sample size.
    C : float
        PBIC correction constant.
    xi0 : float
        Shape of the pseudo p-value null distribution, ``xi0 >= 1``.
    tail : {"upper", "lower"}
        Chi-square critical value convention.

    Returns
    -------
    float
        ``-alpha**xi0 log(alpha) Gamma(q/2)**xi0 n**(xi0 q/2)
        [2 / (chi2 + q log n + C)]**(xi0 q/2 - (xi0 - 1))``

    Notes
    -----
    For large ``xi0`` and ``q = 1`` the bracket exponent turns negative;
    the formula is evaluated as written.
    """
    if not xi0 >= 1.0:
        raise DomainError(f"xi0 must be >= 1, got {xi0!r}")
    if not q >= 1:
        raise DomainError(f"q must be at least 1, got {q!r}")
    if not n > 0:
        raise DomainError(f"n must be positive, got {n!r}")
    chi2 = chi2_quantile(alpha, q, tail=tail)
    h = q / 2.0
    log_bracket = _log_positive(chi2 + q * math.log(n) + C, "chi2 + q*log(n) + C")
    log_bf = (_log_neg_alpha_log_alpha(alpha, xi0)
              + xi0 * math.lgamma(h)
              + xi0 * h * math.log(n)
              + (xi0 * h - (xi0 - 1.0)) * (math.log(2.0) - log_bracket))
    return math.exp(log_bf)


def bf_bic_unit(alpha, q, n, C=0.0, tail="upper"):
    """:func:`bf_bic` for a genuine p-value (``xi0 = 1``)."""
    return bf_bic(alpha, q, n, C, 1.0, tail)


def bf_pbic_linear(alpha, q, n, j, b, C=0.0, g="chi2"):
    """Calibrated Bayes factor for nested linear models::

        -alpha log(alpha) Gamma(q/2) b**((n-j)/(2(n-1)))
            [2 (n-1) / ((g + log b + C)(n - j))]**(q/2)

    Only genuine p-values enter here, so ``xi0`` is fixed at 1.
    """
    if not q >= 1:
        raise DomainError(f"q must be at least 1, got {q!r}")
    if not b > 0:
        raise DesignError(f"design ratio b must be positive, got {b!r}")
    if not (n > j and n > 1):
        raise DegreesOfFreedomError(f"need n > j and n > 1, got n={n!r}, j={j!r}")
    g_value = reference_quantile(alpha, q, n, j, g)
    return _linear_bf(alpha, g_value, q, b, C, (n - j) / (n - 1.0))


def _linear_bf(alpha, g_value, q, b, C, shrink):
    h = q / 2.0
    log_b = math.log(b)
    log_bracket = _log_positive(g_value + log_b + C, "g + log(b) + C")
    log_bf = (_log_neg_alpha_log_alpha(alpha)
              + math.lgamma(h)
              + 0.5 * shrink * log_b
              + h * (math.log(2.0) - math.log(shrink) - log_bracket))
    return math.exp(log_bf)


def bf_anova(k, r, alpha, C=0.0, g="chi2", mode="printed"):
    """Calibrated Bayes factor for balanced one-way ANOVA.

    ``q = k - 1``, ``b = r**(k-1)/k`` and exponent ratio
    ``(r - 1) / (r - 1/k)``; ``mode`` only changes the sample size handed
    to ``g`` (see :func:`pcalib.adaptive_alpha.anova_substitution`).
    """
    sub = anova_substitution(k, r, mode)
    g_value = reference_quantile(alpha, sub["q"], sub["n"], sub["j"], g)
    return _linear_bf(alpha, g_value, sub["q"], sub["b"], C, (r - 1.0) / (r - 1.0 / k))


def bf_anova_two_groups(r, alpha, C=0.0, g="chi2", mode="printed"):
    """Two-group ANOVA Bayes factor in closed form.

    Setting ``k = 2`` in the general ANOVA factor and absorbing
    ``Gamma(1/2) = sqrt(pi)``::

        -alpha log(alpha) (r/2)**((r-1)/(2r-1))
            [2 pi (r - 1/2) / ((g + log(r/2) + C)(r - 1))]**(1/2)
    """
    if not r >= 2:
        raise DegreesOfFreedomError(f"need r >= 2, got {r!r}")
    sub = anova_substitution(2, r, mode)
    g_value = reference_quantile(alpha, 1, sub["n"], sub["j"], g)
    bracket = g_value + math.log(r / 2.0) + C
    if not bracket > 0:
        raise DegenerateBracketError(f"g + log(r/2) + C = {bracket!r} must be positive")
    return (-alpha * math.log(alpha)
            * (r / 2.0) ** ((r - 1.0) / (2.0 * r - 1.0))
            * math.sqrt(2.0 * math.pi * (r - 0.5) / (bracket * (r - 1.0))))


def bf_ttest(t, n, tau0):
    """Bayes factor for a point-null two-sample t test.

    Normal prior ``N(0, sigma^2 / tau0)`` on the mean difference and
    ``1/sigma^2`` on the variance::

        ((n + tau0)/tau0)**(1/2)
            [(t^2 tau0/(n + tau0) + l) / (t^2 + l)]**((l + 1)/2),  l = n - 1
    """
    if not n >= 2:
        raise DegreesOfFreedomError(f"need n >= 2, got {n!r}")
    if not tau0 > 0:
        raise DomainError(f"tau0 must be positive, got {tau0!r}")
    t2 = float(t) ** 2
    dof = n - 1.0
    if math.isinf(t2):
        return 0.0
    log_bf = (0.5 * (math.log(n + tau0) - math.log(tau0))
              + 0.5 * (dof + 1.0) * (math.log(t2 * tau0 / (n + tau0) + dof) - math.log(t2 + dof)))
    return math.exp(log_bf)


def bf_fisher_exact(s, n1, n2, a, b, p0=None):
    """Beta-binomial Bayes factor for equality of two proportions.

    With a Beta(a, b) alternative centred on the null value,
    ``a / (a + b) = p0``::

        B(a, b) / B(s + a, n1 + n2 - s + b) * p0**s (1 - p0)**(n1 + n2 - s)

    Parameters
    ----------
    s : int
        Total successes ``s1 + s2``.
    n1, n2 : int
        Group sizes.
    a, b : float
        Beta prior parameters.
    p0 : float, optional
        Common null proportion; defaults to ``a / (a + b)`` and must match it
        to 1e-12 when given.
    """
    if not (a > 0 and b > 0):
        raise DomainError(f"beta prior parameters must be positive, got {a!r}, {b!r}")
    n = n1 + n2
    if not (n1 >= 1 and n2 >= 1 and 0 <= s <= n):
        raise DomainError(f"need 0 <= s <= n1 + n2 with positive group sizes, got s={s!r}")
    mean = a / (a + b)
    if p0 is None:
        p0 = mean
    elif abs(p0 - mean) > 1e-12:
        raise DomainError(f"prior mean a/(a+b) = {mean!r} does not match p0 = {p0!r}")
    if p0 <= 0.0 or p0 >= 1.0:
        if (p0 <= 0.0 and s > 0) or (p0 >= 1.0 and s < n):
            raise DegenerateLikelihoodError(f"p0 = {p0!r} gives zero likelihood for s = {s!r}")
    log_like = 0.0
    if s > 0:
        log_like += s * math.log(p0)
    if n - s > 0:
        log_like += (n - s) * math.log1p(-p0)
    return math.exp(log_beta(a, b) - log_beta(s + a, n - s + b) + log_like)
