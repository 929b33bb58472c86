"""Seeded Monte Carlo and exact-enumeration checks.

Random draws come from ``numpy.random.Generator`` streams keyed by
``(seed, stream)`` through :class:`numpy.random.SeedSequence`, so a batch
always sees the same numbers regardless of how many batches run or in
which order. Batch results are merged with sums and maxima only.
"""

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .adapters import findley_quantities, fisher_pseudo_p
from .adaptive_alpha import reference_quantile
from .bayes_factors import _linear_bf, bf_bic
from .calibration import invert_rlb, posterior_from_bf, rlb_xi
from .errors import DomainError

__all__ = [
    "EXACT_FISHER_LIMIT",
    "SimulationPlan",
    "ValidationResult",
    "XiEstimate",
    "stream_rng",
    "verify_rlb_validity",
    "verify_fisher_validity",
    "estimate_xi0",
    "findley_curves",
]

EXACT_FISHER_LIMIT = 14


def stream_rng(seed, stream=0):
    """Independent generator for ``(seed, stream)``."""
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(stream),)))


@dataclass(frozen=True)
class SimulationPlan:
    seed: int
    samples: int
    xi: float
    alpha_grid: tuple
    batches: int = 4
    scenario: str = "rlb"

    def __post_init__(self):
        if self.samples < 1:
            raise DomainError("samples must be at least 1")
        if self.batches < 1:
            raise DomainError("batches must be at least 1")
        grid = tuple(float(a) for a in self.alpha_grid)
        if not grid or any(not 0.0 < a < 1.0 for a in grid) or \
                any(b <= a for a, b in zip(grid, grid[1:])):
            raise DomainError("alpha_grid must be strictly increasing inside (0, 1)")
        object.__setattr__(self, "alpha_grid", grid)

    def batch_sizes(self):
        base, extra = divmod(self.samples, self.batches)
        return [base + (1 if i < extra else 0) for i in range(self.batches)]


@dataclass
class ValidationResult:
    """Outcome of a validity check.

    ``empirical[i]`` estimates ``P(statistic <= alphas[i])``. ``exact`` holds
    the closed-form probability when one is known. ``bound_ok`` is the
    validity inequality and ``match_ok`` the agreement with ``exact``; both
    use a ``3 * SE`` band for Monte Carlo runs and zero tolerance for
    enumeration.
    """

    suite: str
    alphas: list
    empirical: list
    standard_errors: list
    bound_ok: list
    exact: list | None = None
    match_ok: list | None = None
    worst_margin: float | None = None
    verdict: bool = False
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        flags = list(self.bound_ok) + list(self.match_ok or [])
        self.verdict = bool(all(flags))

    def to_dict(self):
        return asdict(self)


def _rlb_counts(xi, alphas, n, rng):
    u = rng.random(n)
    p = u ** (1.0 / xi)
    b = np.sort(rlb_xi(p, xi))
    return np.searchsorted(b, alphas, side="right")


def verify_rlb_validity(plan: SimulationPlan, workers=None) -> ValidationResult:
    """Check ``P(B_L(p, xi) <= alpha) <= alpha`` for ``p ~ Beta(xi, 1)``.

    Draws ``p = u**(1/xi)``, counts how often the bound falls at or below
    each grid level and compares with the exact probability ``rho**xi``
    where ``rho`` solves ``B_L(rho, xi) = alpha``.
    """
    if not plan.xi >= 1.0:
        raise DomainError(f"validity holds for xi >= 1, got {plan.xi!r}")
    alphas = np.array(plan.alpha_grid)
    sizes = plan.batch_sizes()

    def run(i):
        return _rlb_counts(plan.xi, alphas, sizes[i], stream_rng(plan.seed, i))

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, range(plan.batches)))
    else:
        parts = [run(i) for i in range(plan.batches)]
    counts = np.sum(parts, axis=0)

    n = plan.samples
    empirical = counts / n
    exact = np.array([invert_rlb(a, plan.xi) ** plan.xi for a in alphas])
    se = np.sqrt(exact * (1.0 - exact) / n)
    bound_ok = empirical <= alphas + 3.0 * se
    match_ok = np.abs(empirical - exact) <= 3.0 * se
    return ValidationResult(
        suite="rlb",
        alphas=alphas.tolist(),
        empirical=empirical.tolist(),
        standard_errors=se.tolist(),
        bound_ok=bound_ok.tolist(),
        exact=exact.tolist(),
        match_ok=match_ok.tolist(),
        worst_margin=float(np.min(alphas - empirical)),
        details={"xi": plan.xi, "samples": n, "seed": plan.seed, "batches": plan.batches,
                 "exact_below_alpha": bool(np.all(exact <= alphas))},
    )


def _as_fraction(p):
    if isinstance(p, Fraction):
        return p
    return Fraction(str(p))


def _fisher_table(n1, n2):
    # pseudo p-value and binomial coefficient weight for every outcome
    outcomes = []
    for s1 in range(n1 + 1):
        for s2 in range(n2 + 1):
            weight = math.comb(n1, s1) * math.comb(n2, s2)
            outcomes.append((fisher_pseudo_p(s1, s2, n1, n2, exact=True), s1 + s2, weight))
    return outcomes


def _fisher_exact_check(n1, n2, p_grid):
    n = n1 + n2
    table = _fisher_table(n1, n2)
    levels = sorted({pv for pv, _, _ in table})
    alphas, probs, bound_ok = [], [], []
    worst = None
    for p in p_grid:
        pf = _as_fraction(p)
        if not 0 < pf < 1:
            raise DomainError(f"p must lie strictly inside (0, 1), got {p!r}")
        powers = [pf**s * (1 - pf) ** (n - s) for s in range(n + 1)]
        mass = {}
        for pv, s, weight in table:
            mass[pv] = mass.get(pv, 0) + weight * powers[s]
        cum = Fraction(0)
        for level in levels:
            cum += mass[level]
            margin = level - cum
            alphas.append(level)
            probs.append(cum)
            bound_ok.append(margin >= 0)
            if worst is None or margin < worst:
                worst = margin
    return alphas, probs, bound_ok, worst


def verify_fisher_validity(n1, n2, p_grid, samples=100_000, seed=0) -> ValidationResult:
    """Validity of Fisher's conditional pseudo p-value under ``p1 = p2 = p``.

    Up to :data:`EXACT_FISHER_LIMIT` per group every outcome is enumerated
    with rational arithmetic, and ``P(pseudo_p <= alpha) <= alpha`` is
    checked at every achievable ``alpha`` with zero tolerance. Larger groups
    fall back to Monte Carlo with a ``3 * SE`` band and a warning.
    """
    if not (n1 >= 1 and n2 >= 1):
        raise DomainError("group sizes must be positive")
    p_grid = list(p_grid)
    if n1 <= EXACT_FISHER_LIMIT and n2 <= EXACT_FISHER_LIMIT:
        alphas, probs, bound_ok, worst = _fisher_exact_check(n1, n2, p_grid)
        return ValidationResult(
            suite="fisher",
            alphas=[float(a) for a in alphas],
            empirical=[float(pr) for pr in probs],
            standard_errors=[0.0] * len(alphas),
            bound_ok=bound_ok,
            worst_margin=float(worst),
            details={"n1": n1, "n2": n2, "p_grid": [float(p) for p in p_grid],
                     "method": "enumeration", "worst_margin_exact": str(worst)},
        )

    warnings.warn(f"n1={n1}, n2={n2} exceed the enumeration bound {EXACT_FISHER_LIMIT}; "
                  "using Monte Carlo", RuntimeWarning, stacklevel=2)
    alphas, empirical, ses, bound_ok = [], [], [], []
    cache = {}
    for idx, p in enumerate(p_grid):
        rng = stream_rng(seed, idx)
        s1 = rng.binomial(n1, float(p), samples)
        s2 = rng.binomial(n2, float(p), samples)
        pv = np.empty(samples)
        for i, (a, b) in enumerate(zip(s1.tolist(), s2.tolist())):
            key = (a, b)
            if key not in cache:
                cache[key] = fisher_pseudo_p(a, b, n1, n2)
            pv[i] = cache[key]
        pv.sort()
        for level in np.unique(pv):
            emp = np.searchsorted(pv, level, side="right") / samples
            se = math.sqrt(max(emp * (1.0 - emp), 1e-300) / samples)
            alphas.append(float(level))
            empirical.append(float(emp))
            ses.append(se)
            bound_ok.append(bool(emp <= level + 3.0 * se))
    margins = [a - e for a, e in zip(alphas, empirical)]
    return ValidationResult(
        suite="fisher", alphas=alphas, empirical=empirical, standard_errors=ses,
        bound_ok=bound_ok, worst_margin=min(margins),
        details={"n1": n1, "n2": n2, "p_grid": [float(p) for p in p_grid],
                 "method": "monte_carlo", "samples": samples, "seed": seed},
    )


class XiEstimate(NamedTuple):
    xi: float
    se: float
    m: int


def estimate_xi0(pseudo_p_samples) -> XiEstimate:
    """Maximum likelihood shape of a Beta(xi, 1) fit, ``-m / sum(log p)``.

    The standard error is the large-sample ``xi_hat / sqrt(m)``.
    """
    x = np.asarray(pseudo_p_samples, dtype=float).ravel()
    if x.size < 2:
        raise DomainError("need at least 2 samples")
    if np.any(~((x > 0) & (x < 1))):
        raise DomainError("samples must lie strictly inside (0, 1)")
    m = x.size
    xi = -m / math.fsum(np.log(x))
    return XiEstimate(xi=xi, se=xi / math.sqrt(m), m=m)


def _findley_theta_hat(n, seed):
    # least squares slope for y_i = theta / sqrt(i) + e_i simulated at theta = 0
    x = 1.0 / np.sqrt(np.arange(1, n + 1))
    y = stream_rng(seed, n).standard_normal(n)
    return float(x @ y / (x @ x))


def findley_curves(n_grid, alpha_values, mode="fixed_theta_hat", theta_hat=0.0, seed=0,
                   pi0=0.5, bic_n="raw", g="chi2"):
    """Posterior probabilities of ``theta = 0`` along growing ``n``.

    For each ``n`` and ``alpha`` the PBIC quantities of the Findley design
    feed the BIC-structured factor (``q = 1``) and the linear-model factor
    with design ratio ``H_n``; both are turned into posteriors with prior
    mass ``pi0``.

    Parameters
    ----------
    n_grid : sequence of int
        Strictly increasing sample sizes.
    alpha_values : sequence of float
        Significance levels at which the factors are evaluated.
    mode : {"fixed_theta_hat", "simulate"}
        Use ``theta_hat`` as given, or draw data under ``theta = 0`` (one
        stream per ``n``) and use the least-squares estimate.
    bic_n : {"raw", "tess"}
        Sample size entering the BIC-structured factor: ``n`` or ``H_n``.
    g : str or callable
        Reference quantile for the linear-model factor.

    Returns
    -------
    list of dict
        One row per ``(alpha, n)``.
    """
    n_grid = [int(n) for n in n_grid]
    if not n_grid or any(b <= a for a, b in zip(n_grid, n_grid[1:])) or n_grid[0] < 1:
        raise DomainError("n_grid must be strictly increasing positive integers")
    if mode not in ("fixed_theta_hat", "simulate"):
        raise DomainError(f"mode must be 'fixed_theta_hat' or 'simulate', got {mode!r}")
    if bic_n not in ("raw", "tess"):
        raise DomainError(f"bic_n must be 'raw' or 'tess', got {bic_n!r}")
    rows = []
    for alpha in alpha_values:
        for n in n_grid:
            th = _findley_theta_hat(n, seed) if mode == "simulate" else float(theta_hat)
            tq = findley_quantities(n, th)
            n_bic = n if bic_n == "raw" else tq.n_e
            bf7 = bf_bic(alpha, 1, n_bic, tq.C)
            # one regressor against the empty model: (n - j)/(n - 1) = 1
            g_value = reference_quantile(alpha, 1, n, 1, g) if (callable(g) or g != "chi2") \
                else reference_quantile(alpha, 1, g="chi2")
            bf8 = _linear_bf(alpha, g_value, 1, tq.b, tq.C, 1.0)
            rows.append({
                "alpha": float(alpha), "n": n, "H_n": tq.n_e, "theta_hat": th,
                "d": tq.d, "n_e": tq.n_e, "v": tq.v, "C": tq.C, "b": tq.b,
                "bf_PG": bf7, "bf_PL": bf8,
                "P_PG": posterior_from_bf(bf7, pi0), "P_PL": posterior_from_bf(bf8, pi0),
            })
    return rows
