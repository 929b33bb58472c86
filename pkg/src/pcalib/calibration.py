"""Minimum Bayes factors from p-values and pseudo p-values.

The robust lower bound ``-e * p * log(p)`` and its generalization for a
pseudo p-value distributed Beta(xi0, 1) under the null::

    B_L(p, xi0) = -e * xi0 * p**xi0 * log(p)    for p < 1/e
                = 1                             otherwise

``xi0 = 1`` recovers the ordinary calibration. Posterior probabilities of
the null follow from ``[1 + (pi1/pi0) / B]**-1``.
"""

import math
import warnings

import numpy as np

from .errors import DegenerateInputWarning, DomainError
from .numerics import solve_monotone

__all__ = [
    "INV_E",
    "rlb",
    "rlb_xi",
    "rlb_complement",
    "invert_rlb",
    "posterior_from_bf",
]

INV_E = math.exp(-1.0)


def _check_probability(p, name="p"):
    arr = np.asarray(p, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr < 0) or np.any(arr > 1):
        raise DomainError(f"{name} must lie in [0, 1]")
    return arr


def rlb_xi(p, xi0=1.0):
    """Minimum Bayes factor for a (pseudo) p-value with null shape ``xi0``.

    Parameters
    ----------
    p : float or array_like
        Observed p-values in [0, 1].
    xi0 : float
        Shape of the Beta(xi0, 1) null distribution, ``xi0 >= 1``.

    Returns
    -------
    float or ndarray
        Values in [0, 1]. ``p = 0`` returns the limit 0 and issues a
        :class:`DegenerateInputWarning`.
    """
    if not xi0 >= 1.0:
        raise DomainError(f"xi0 must be >= 1 for a null Beta(xi0, 1) model, got {xi0!r}")
    arr = _check_probability(p)
    if np.any(arr == 0):
        warnings.warn("p = 0 is degenerate; returning the limit 0", DegenerateInputWarning,
                      stacklevel=2)
    out = np.ones_like(arr)
    inside = (arr > 0) & (arr < INV_E)
    pi = arr[inside]
    out[inside] = -math.e * xi0 * pi**xi0 * np.log(pi)
    out[arr == 0] = 0.0
    if out.ndim == 0:
        return float(out)
    return out


def rlb(p):
    """The ``-e p log p`` bound; ``rlb_xi`` at ``xi0 = 1``."""
    return rlb_xi(p, 1.0)


def rlb_complement(p):
    """``-e q log q`` calibration applied to ``q = 1 - p``.

    ``p = 1`` gives q = 0 and is flagged as degenerate.
    """
    arr = _check_probability(p)
    if np.any(arr == 1):
        warnings.warn("p = 1 is degenerate for the complement calibration",
                      DegenerateInputWarning, stacklevel=2)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateInputWarning)
        return rlb_xi(1.0 - arr, 1.0)


def _rlb_curve(rho, xi):
    return -math.e * xi * rho**xi * math.log(rho)


def invert_rlb(alpha: float, xi: float = 1.0) -> float:
    """Solve ``-e xi rho**xi log(rho) = alpha`` on the increasing branch.

    For ``xi >= 1`` the curve increases on (0, 1/e) up to
    ``xi * exp(1 - xi)``; above that level the bound jumps to 1, so every
    ``p < 1/e`` satisfies ``B_L(p, xi) <= alpha`` and 1/e is returned. With
    this convention ``rho**xi`` is exactly ``P(B_L(p, xi) <= alpha)`` when
    ``p ~ Beta(xi, 1)``.

    For ``0 < xi < 1`` the increasing branch is (0, exp(-1/xi)], where the
    curve reaches 1.
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")
    if not xi > 0:
        raise DomainError(f"xi must be positive, got {xi!r}")
    top = INV_E if xi >= 1.0 else math.exp(-1.0 / xi)
    peak = _rlb_curve(top, xi)
    if alpha >= peak:
        return top
    # search in log(rho) so tiny roots keep full relative precision
    def curve(log_rho):
        return -math.e * xi * math.exp(xi * log_rho) * log_rho

    lo = math.log(top)
    while curve(lo) > alpha:
        lo *= 2.0
    log_rho = solve_monotone(curve, lo, math.log(top), alpha, tol=0.0)
    return math.exp(log_rho)


def posterior_from_bf(bf, pi0: float = 0.5):
    """Posterior probability of the null given a Bayes factor B01.

    ``[1 + (pi1 / pi0) / bf]**-1``; with ``pi0 = 0.5`` this is the equal-odds
    lower bound when ``bf`` is a minimum Bayes factor.
    """
    if not 0.0 < pi0 < 1.0:
        raise DomainError(f"pi0 must lie strictly inside (0, 1), got {pi0!r}")
    arr = np.asarray(bf, dtype=float)
    if np.any(~(arr >= 0)):
        raise DomainError("Bayes factors must be non-negative")
    odds = (1.0 - pi0) / pi0
    with np.errstate(divide="ignore"):
        out = arr / (arr + odds)
    if out.ndim == 0:
        return float(out)
    return out
