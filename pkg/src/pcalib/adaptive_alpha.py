"""Significance levels that shrink with the amount of information.

Four forms are provided:

* ``adaptive_alpha_bic`` -- the BIC-based level with a caller supplied
  constant ``C_alpha``.
* ``adaptive_alpha_pbic_adjusted`` -- the same structure with ``C_alpha``
  replaced by the PBIC correction ``exp(-(chi2 + C)/2)``.
* ``adaptive_alpha_pbic_linear`` -- the nested linear-model version driven
  by the design determinant ratio ``b``.
* ``adaptive_alpha_anova`` -- balanced one-way ANOVA with ``k`` groups of
  ``r`` replicates.

The reference quantile ``g_{n,alpha}(q)`` of the linear-model forms is
pluggable; see :func:`reference_quantile`.
"""

import math

from .errors import (
    ConfigurationError,
    DegenerateBracketError,
    DegreesOfFreedomError,
    DesignError,
    DomainError,
)
from .numerics import chi2_quantile, f_isf

__all__ = [
    "G_OPTIONS",
    "reference_quantile",
    "adaptive_alpha_bic",
    "adaptive_alpha_pbic_adjusted",
    "adaptive_alpha_two_proportions",
    "adaptive_alpha_pbic_linear",
    "adaptive_alpha_anova",
    "anova_substitution",
]

G_OPTIONS = ("chi2", "f_deviance")


def _check_alpha(alpha):
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie strictly inside (0, 1), got {alpha!r}")


def _check_q(q):
    if not q >= 1:
        raise DomainError(f"q must be at least 1, got {q!r}")


def reference_quantile(alpha, q, n=None, j=None, g="chi2", tail="upper"):
    """Evaluate the reference statistic quantile ``g_{n,alpha}(q)``.

    Parameters
    ----------
    alpha : float
        Nominal level.
    q : int
        Number of parameters tested.
    n, j : float, optional
        Sample size and number of parameters of the larger model. Only
        needed by ``"f_deviance"``.
    g : {"chi2", "f_deviance"} or callable
        ``"chi2"`` is the upper chi-square critical value with ``q`` degrees
        of freedom. ``"f_deviance"`` maps the upper F(q, n - j) critical
        value to the deviance scale, ``(n - 1) * log(1 + q F / (n - j))``.
        A callable is invoked as ``g(alpha, q, n, j)``.
    tail : {"upper", "lower"}
        Passed to :func:`chi2_quantile` for the ``"chi2"`` option.
    """
    if callable(g):
        return float(g(alpha, q, n, j))
    if g == "chi2":
        return chi2_quantile(alpha, q, tail=tail)
    if g == "f_deviance":
        if n is None or j is None:
            raise ConfigurationError("g='f_deviance' needs both n and j")
        if not n > j:
            raise DegreesOfFreedomError(f"need n > j, got n={n!r}, j={j!r}")
        f_crit = f_isf(alpha, q, n - j)
        return (n - 1.0) * math.log1p(q * f_crit / (n - j))
    raise ConfigurationError(f"unknown g option {g!r}; expected one of {G_OPTIONS} or a callable")


def _log_bracket(value, what):
    if not value > 0:
        raise DegenerateBracketError(f"{what} = {value!r} must be positive")
    return math.log(value)


def adaptive_alpha_bic(alpha, q, n, c_alpha=None, tail="upper"):
    """BIC-based adaptive level::

        [chi2 + q log n]**(q/2 - 1) / (2**(q/2 - 1) n**(q/2) Gamma(q/2)) * C_alpha

    ``c_alpha`` has no default; use :func:`adaptive_alpha_pbic_adjusted` when
    the constant is not known.
    """
    if c_alpha is None:
        raise ConfigurationError(
            "c_alpha is required for the BIC form; "
            "adaptive_alpha_pbic_adjusted replaces it with the PBIC correction"
        )
    if not c_alpha > 0:
        raise DomainError(f"c_alpha must be positive, got {c_alpha!r}")
    _check_alpha(alpha)
    _check_q(q)
    if not n > 0:
        raise DomainError(f"n must be positive, got {n!r}")
    chi2 = chi2_quantile(alpha, q, tail=tail)
    h = q / 2.0
    log_val = ((h - 1.0) * _log_bracket(chi2 + q * math.log(n), "chi2 + q*log(n)")
               - (h - 1.0) * math.log(2.0) - h * math.log(n) - math.lgamma(h)
               + math.log(c_alpha))
    return math.exp(log_val)


def adaptive_alpha_pbic_adjusted(alpha, q, n, C=0.0, tail="upper"):
    """Adaptive level with the PBIC correction::

        [chi2 + q log n + C]**(q/2 - 1) / (n**(q/2) 2**(q/2 - 1) Gamma(q/2))
            * exp(-(chi2 + C) / 2)
    """
    _check_alpha(alpha)
    _check_q(q)
    if not n > 0:
        raise DomainError(f"n must be positive, got {n!r}")
    chi2 = chi2_quantile(alpha, q, tail=tail)
    h = q / 2.0
    log_val = ((h - 1.0) * _log_bracket(chi2 + q * math.log(n) + C, "chi2 + q*log(n) + C")
               - h * math.log(n) - (h - 1.0) * math.log(2.0) - math.lgamma(h)
               - 0.5 * (chi2 + C))
    return math.exp(log_val)


def adaptive_alpha_two_proportions(alpha, n, C, tail="upper"):
    """Two-proportion adaptive level, written in its single-df closed form::

        sqrt(2 / (n pi (chi2_1 + log n + C))) * exp(-(chi2_1 + C) / 2)

    ``n = n1 + n2`` and ``C`` comes from
    :func:`pcalib.adapters.tess_two_proportions`.
    """
    _check_alpha(alpha)
    if not n > 0:
        raise DomainError(f"n must be positive, got {n!r}")
    chi2 = chi2_quantile(alpha, 1, tail=tail)
    bracket = chi2 + math.log(n) + C
    if not bracket > 0:
        raise DegenerateBracketError(f"chi2 + log(n) + C = {bracket!r} must be positive")
    return math.sqrt(2.0 / (n * math.pi * bracket)) * math.exp(-0.5 * (chi2 + C))


def _linear_core(g_value, q, b, C, shrink):
    # shrink = (n - j) / (n - 1); every n, j dependence except g goes through it
    h = q / 2.0
    log_val = ((h - 1.0) * _log_bracket(g_value + math.log(b) + C, "g + log(b) + C")
               - 0.5 * shrink * math.log(b)
               - (h - 1.0) * math.log(2.0 / shrink)
               - math.lgamma(h)
               - 0.5 * shrink * (g_value + C))
    return math.exp(log_val)


def _check_design(b, n, j):
    if not b > 0:
        raise DesignError(f"design ratio b must be positive, got {b!r}")
    if not n > j:
        raise DegreesOfFreedomError(f"need n > j, got n={n!r}, j={j!r}")
    if not n > 1:
        raise DegreesOfFreedomError(f"need n > 1, got {n!r}")


def adaptive_alpha_pbic_linear(alpha, q, n, j, b, C=0.0, g="chi2"):
    """Adaptive level for nested linear models.

    Parameters
    ----------
    alpha : float
        Nominal level.
    q : int
        Number of parameters tested.
    n : float
        Sample size.
    j : float
        Number of parameters of the larger model, ``j >= q``.
    b : float
        Ratio of Gram determinants ``|X_j' X_j| / |X_i' X_i|``.
    C : float
        PBIC correction constant.
    g : str or callable
        Reference quantile option, see :func:`reference_quantile`.
    """
    _check_alpha(alpha)
    _check_q(q)
    _check_design(b, n, j)
    if not j >= q:
        raise DomainError(f"need j >= q, got j={j!r}, q={q!r}")
    g_value = reference_quantile(alpha, q, n, j, g)
    return _linear_core(g_value, q, b, C, (n - j) / (n - 1.0))


def anova_substitution(k, r, mode="printed"):
    """Map a balanced one-way layout onto the linear-model arguments.

    Returns a dict with ``q = k - 1``, ``b = r**(k-1) / k`` and sizes ``n``,
    ``j`` such that ``(n - j) / (n - 1)`` reproduces the ANOVA exponent
    ratio ``(r - 1) / (r - 1/k)``.

    ``mode="printed"`` keeps the replicate count as the effective sample
    size, ``n = r``, which forces the non-integer
    ``j = r - (r - 1)**2 / (r - 1/k)``. ``mode="nested"`` uses the full
    layout, ``n = k r`` observations and ``j = k`` cell means; the ratio is
    the same, so the two modes differ only in what ``g`` receives.
    """
    if not (k >= 2 and r >= 2):
        raise DegreesOfFreedomError(f"need k >= 2 and r >= 2, got k={k!r}, r={r!r}")
    sub = {"q": k - 1, "b": r ** (k - 1) / k}
    if mode == "printed":
        sub["n"] = r
        sub["j"] = r - (r - 1.0) ** 2 / (r - 1.0 / k)
    elif mode == "nested":
        sub["n"] = k * r
        sub["j"] = k
    else:
        raise ConfigurationError(f"mode must be 'printed' or 'nested', got {mode!r}")
    return sub


def adaptive_alpha_anova(k, r, alpha, C=0.0, g="chi2", mode="printed"):
    """Adaptive level for balanced one-way ANOVA with ``k`` groups of ``r``.

    Evaluated directly from the ANOVA display: bracket
    ``g - log k + (k-1) log r + C``, exponent ``(r - 1) / (2 (r - 1/k))``.
    See :func:`anova_substitution` for ``mode``.
    """
    _check_alpha(alpha)
    sub = anova_substitution(k, r, mode)
    q = k - 1
    g_value = reference_quantile(alpha, q, sub["n"], sub["j"], g)
    log_b = (k - 1) * math.log(r) - math.log(k)
    shrink = (r - 1.0) / (r - 1.0 / k)
    h = q / 2.0
    log_val = ((h - 1.0) * _log_bracket(g_value + log_b + C, "g - log(k) + (k-1) log(r) + C")
               - 0.5 * shrink * log_b
               - (h - 1.0) * math.log(2.0 * (r - 1.0 / k) / (r - 1.0))
               - math.lgamma(h)
               - 0.5 * shrink * (g_value + C))
    return math.exp(log_val)
