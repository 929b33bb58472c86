"""Special functions and a scalar root solver.

The regularized incomplete gamma function is evaluated with the usual
series / continued-fraction split so that chi-square quantiles can be
obtained by bracketing inversion rather than by closed approximations.
"""

import math

from scipy import special

from .errors import BracketError, DomainError

__all__ = [
    "log_gamma",
    "gamma_p",
    "gamma_q",
    "chi2_cdf",
    "chi2_sf",
    "chi2_quantile",
    "log_beta",
    "beta_function",
    "f_sf",
    "f_isf",
    "solve_monotone",
]

_EPS = 2.220446049250313e-16
_TINY = 1e-300
_MAX_TERMS = 10_000


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for ``x > 0``."""
    if not x > 0 or math.isinf(x):
        raise DomainError(f"log_gamma requires a finite x > 0, got {x!r}")
    return math.lgamma(x)


def _gamma_prefactor(a: float, x: float) -> float:
    # x**a * exp(-x) / Gamma(a), evaluated in log space
    return math.exp(a * math.log(x) - x - math.lgamma(a))


def _gamma_series(a: float, x: float) -> float:
    term = 1.0 / a
    total = term
    ap = a
    for _ in range(_MAX_TERMS):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * _gamma_prefactor(a, x)


def _gamma_continued_fraction(a: float, x: float) -> float:
    # modified Lentz evaluation of the continued fraction for Q(a, x)
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_TERMS):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return h * _gamma_prefactor(a, x)


def _check_gamma_args(a, x):
    if not a > 0:
        raise DomainError(f"shape must be positive, got {a!r}")
    if x < 0 or math.isnan(x):
        raise DomainError(f"x must be non-negative, got {x!r}")


def gamma_p(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x)."""
    _check_gamma_args(a, x)
    if x == 0:
        return 0.0
    if math.isinf(x):
        return 1.0
    if x < a + 1.0:
        return _gamma_series(a, x)
    return 1.0 - _gamma_continued_fraction(a, x)


def gamma_q(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x)."""
    _check_gamma_args(a, x)
    if x == 0:
        return 1.0
    if math.isinf(x):
        return 0.0
    if x < a + 1.0:
        return 1.0 - _gamma_series(a, x)
    return _gamma_continued_fraction(a, x)


def chi2_cdf(x: float, dof: float) -> float:
    """P(X <= x) for X ~ chi-square with ``dof`` degrees of freedom."""
    if not dof > 0:
        raise DomainError(f"dof must be positive, got {dof!r}")
    if x <= 0:
        return 0.0
    return gamma_p(dof / 2.0, x / 2.0)


def chi2_sf(x: float, dof: float) -> float:
    """P(X > x) for X ~ chi-square with ``dof`` degrees of freedom."""
    if not dof > 0:
        raise DomainError(f"dof must be positive, got {dof!r}")
    if x <= 0:
        return 1.0
    return gamma_q(dof / 2.0, x / 2.0)


def chi2_quantile(alpha: float, q: float, tail: str = "upper") -> float:
    """Chi-square critical value.

    Parameters
    ----------
    alpha : float
        Probability in (0, 1).
    q : float
        Degrees of freedom.
    tail : {"upper", "lower"}
        ``"upper"`` returns x with P(X > x) = alpha, the rejection-region
        reading. ``"lower"`` returns the literal alpha-quantile,
        P(X <= x) = alpha.

    Returns
    -------
    float
        The critical value, with residual at most 1e-10 in probability.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie strictly inside (0, 1), got {alpha!r}")
    if not q > 0:
        raise DomainError(f"dof must be positive, got {q!r}")
    if tail == "upper":
        func, target = (lambda x: chi2_sf(x, q)), alpha
    elif tail == "lower":
        func, target = (lambda x: chi2_cdf(x, q)), alpha
    else:
        raise DomainError(f"tail must be 'upper' or 'lower', got {tail!r}")

    hi = max(1.0, 2.0 * q)
    while (func(hi) - target) * (func(0.0) - target) > 0:
        hi *= 2.0
        if hi > 1e12:
            raise BracketError("could not bracket the chi-square quantile")
    return solve_monotone(func, 0.0, hi, target, tol=0.0)


def log_beta(a: float, b: float) -> float:
    """log B(a, b)."""
    if not (a > 0 and b > 0):
        raise DomainError(f"beta function arguments must be positive, got {a!r}, {b!r}")
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def beta_function(a: float, b: float) -> float:
    """B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)."""
    # sum the two single-argument terms in a fixed order so B(a,b) == B(b,a)
    lo, hi = sorted((a, b))
    return math.exp(log_beta(lo, hi))


def f_sf(x: float, dfn: float, dfd: float) -> float:
    """Upper tail P(F > x) of the F distribution."""
    if not (dfn > 0 and dfd > 0):
        raise DomainError("F degrees of freedom must be positive")
    if x <= 0:
        return 1.0
    return float(special.fdtrc(dfn, dfd, x))


def f_isf(alpha: float, dfn: float, dfd: float) -> float:
    """Upper critical value x with P(F > x) = alpha."""
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie strictly inside (0, 1), got {alpha!r}")
    if not (dfn > 0 and dfd > 0):
        raise DomainError("F degrees of freedom must be positive")
    return float(special.fdtri(dfn, dfd, 1.0 - alpha))


def solve_monotone(f, lo: float, hi: float, target: float, tol: float = 1e-12,
                   max_iter: int = 2000) -> float:
    """Find x in [lo, hi] with ``|f(x) - target| <= tol`` for monotone ``f``.

    Bisection on a sign-changing bracket. With ``tol=0`` the search runs
    until the bracket collapses to adjacent floats, then returns the
    endpoint with the smaller residual.
    """
    f_lo = f(lo) - target
    f_hi = f(hi) - target
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if f_lo * f_hi > 0:
        raise BracketError(
            f"target {target!r} is not bracketed by f({lo!r})={f_lo + target!r} "
            f"and f({hi!r})={f_hi + target!r}"
        )
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid) - target
        if abs(f_mid) <= tol:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return lo if abs(f_lo) <= abs(f_hi) else hi
