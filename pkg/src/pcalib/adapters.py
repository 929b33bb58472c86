"""Scenario-specific inputs for the calibrated Bayes factors.

Each worked design supplies the PBIC ingredients: the variance scale ``d``,
the effective sample size ``n_e`` (TESS), the standardized effect
``v = theta_hat^2 / (d (1 + n_e))``, the correction ``C`` and, for linear
models, the determinant ratio ``b``.
"""

import csv
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (
    CollinearityError,
    DataError,
    DesignError,
    DomainError,
)
from .numerics import f_sf

__all__ = [
    "TessQuantities",
    "TwoProportionData",
    "TwoMeansData",
    "RegressionQuantities",
    "pbic_log_term",
    "pbic_correction",
    "tess_two_proportions",
    "tess_two_means",
    "two_means_design_ratio",
    "anova_design_matrices",
    "gram_determinant_ratio",
    "anova_design_ratio",
    "fisher_pseudo_p",
    "regression_nested_quantities",
    "read_numeric_csv",
    "harmonic_number",
    "findley_quantities",
]

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class TessQuantities:
    """PBIC ingredients for one tested parameter.

    ``b`` is only set by scenarios that feed the linear-model factor.
    ``flags`` collects non-fatal notes (limits taken, conflicting forms).
    """

    d: float
    n_e: float
    v: float
    C: float
    b: float | None = None
    flags: tuple = ()


def pbic_log_term(v):
    """``log((1 - exp(-v)) / (sqrt(2) v))`` with its ``v -> 0`` limit ``-log(2)/2``."""
    if v < 0 or math.isnan(v):
        raise DomainError(f"v must be non-negative, got {v!r}")
    if v == 0:
        return -0.5 * _LN2
    # -expm1(-v) keeps 1 - exp(-v) accurate for small v
    return math.log(-math.expm1(-v) / v) - 0.5 * _LN2


def pbic_correction(v):
    """Single-parameter correction ``C = -2 log((1 - exp(-v)) / (sqrt(2) v))``.

    Tends to ``log 2`` as ``v -> 0``.
    """
    return -2.0 * pbic_log_term(v)


def _tess(d, n_e, effect, extra_flags=()):
    v = effect**2 / (d * (1.0 + n_e))
    flags = list(extra_flags)
    if v == 0:
        flags.append("v=0: C taken at its limit log(2)")
    return TessQuantities(d=d, n_e=n_e, v=v, C=pbic_correction(v), flags=tuple(flags))


def _max_form_ne(n1, n2, s1_sq, s2_sq, d):
    return max(n1**2 / s1_sq, n2**2 / s2_sq) * d


@dataclass(frozen=True)
class TwoProportionData:
    """Two independent binomial samples.

    Either give the success counts ``s1``, ``s2`` or the summary values
    directly. Missing variances default to ``p_i (1 - p_i)``, floored at
    ``1 / (4 n_i)`` when a sample proportion is 0 or 1. ``p_hat_diff``
    defaults to ``s1/n1 - s2/n2``.
    """

    n1: int
    n2: int
    s1: int | None = None
    s2: int | None = None
    sigma1_sq: float | None = None
    sigma2_sq: float | None = None
    p_hat_diff: float | None = None

    def __post_init__(self):
        if not (self.n1 >= 1 and self.n2 >= 1):
            raise DomainError("group sizes must be positive")
        for s, n in ((self.s1, self.n1), (self.s2, self.n2)):
            if s is not None and not 0 <= s <= n:
                raise DomainError(f"successes {s!r} outside [0, {n}]")

    def _variance(self, given, s, n):
        if given is not None:
            if not given > 0:
                raise DomainError(f"variances must be positive, got {given!r}")
            return float(given)
        if s is None:
            raise DomainError("need a variance or a success count for each group")
        p = s / n
        if p in (0.0, 1.0):
            return 1.0 / (4.0 * n)
        return p * (1.0 - p)

    @property
    def variances(self):
        return (self._variance(self.sigma1_sq, self.s1, self.n1),
                self._variance(self.sigma2_sq, self.s2, self.n2))

    @property
    def difference(self):
        if self.p_hat_diff is not None:
            return float(self.p_hat_diff)
        if self.s1 is None or self.s2 is None:
            raise DomainError("need p_hat_diff or both success counts")
        return self.s1 / self.n1 - self.s2 / self.n2


def tess_two_proportions(data: TwoProportionData) -> TessQuantities:
    """PBIC quantities for testing ``p1 = p2``.

    ``d = s1^2/n1 + s2^2/n2``, ``n_e = max(n1^2/s1^2, n2^2/s2^2) d``,
    ``v = p_hat^2 / (d (1 + n_e))`` with ``s_i^2`` the group variances.
    """
    s1_sq, s2_sq = data.variances
    d = s1_sq / data.n1 + s2_sq / data.n2
    n_e = _max_form_ne(data.n1, data.n2, s1_sq, s2_sq, d)
    return _tess(d, n_e, data.difference)


@dataclass(frozen=True)
class TwoMeansData:
    """Two normal samples with known variances.

    ``beta_hat`` estimates half the mean difference, ``(mu1 - mu2) / 2``.
    """

    n1: int
    n2: int
    sigma1_sq: float = 1.0
    sigma2_sq: float = 1.0
    beta_hat: float = 0.0
    t_stat: float | None = None
    equal_variance: bool = False

    def __post_init__(self):
        if not (self.n1 >= 1 and self.n2 >= 1):
            raise DomainError("group sizes must be positive")
        if not (self.sigma1_sq > 0 and self.sigma2_sq > 0):
            raise DomainError("variances must be positive")


def tess_two_means(data: TwoMeansData, ne_form="max") -> TessQuantities:
    """PBIC quantities for testing ``mu1 = mu2``.

    ``ne_form="max"`` (default) uses ``max(n1^2/s1^2, n2^2/s2^2) d``.
    ``ne_form="min"`` uses the equal-variance expression
    ``min(n1 (1 + n1/n2), n2 (1 + n2/n1))`` and is only accepted when
    ``data.equal_variance`` is set. The two forms disagree for unequal
    group sizes; when both apply the alternative value is recorded in
    ``flags``.
    """
    n1, n2 = data.n1, data.n2
    d = data.sigma1_sq / n1 + data.sigma2_sq / n2
    ne_max = _max_form_ne(n1, n2, data.sigma1_sq, data.sigma2_sq, d)
    flags = []
    if data.equal_variance:
        ne_min = min(n1 * (1.0 + n1 / n2), n2 * (1.0 + n2 / n1))
        if not math.isclose(ne_max, ne_min, rel_tol=1e-12):
            flags.append(f"n_e conflict: max-form {ne_max:.9g}, min-form {ne_min:.9g}")
    if ne_form == "max":
        n_e = ne_max
    elif ne_form == "min":
        if not data.equal_variance:
            raise DomainError("the min-form n_e is only defined for equal variances")
        n_e = ne_min
    else:
        raise DomainError(f"ne_form must be 'max' or 'min', got {ne_form!r}")
    return _tess(d, n_e, data.beta_hat, flags)


def two_means_design_ratio(n1, n2):
    """``|B'B| / |1'1|`` for the (mean, half-difference) design, ``4 n1 n2 / n``."""
    return 4.0 * n1 * n2 / (n1 + n2)


def anova_design_matrices(k, r):
    """Design matrices of the common-mean and cell-means models."""
    x_null = np.ones((k * r, 1))
    x_alt = np.kron(np.eye(k), np.ones((r, 1)))
    return x_null, x_alt


def gram_determinant_ratio(x_alt, x_null):
    """``|X_alt' X_alt| / |X_null' X_null|`` via log-determinants."""
    sign_a, logdet_a = np.linalg.slogdet(x_alt.T @ x_alt)
    sign_n, logdet_n = np.linalg.slogdet(x_null.T @ x_null)
    if sign_a <= 0 or sign_n <= 0:
        raise DesignError("design matrices must have full column rank")
    return float(math.exp(logdet_a - logdet_n))


def anova_design_ratio(k, r, verify=False):
    """Determinant ratio ``b = r**(k-1) / k`` for a balanced one-way layout.

    With ``verify=True`` the closed form is checked against the explicit
    Gram determinants and a :class:`DesignError` is raised on mismatch.
    """
    if not (k >= 1 and r >= 1):
        raise DomainError(f"need k >= 1 and r >= 1, got k={k!r}, r={r!r}")
    b = r ** (k - 1) / k
    if verify:
        explicit = gram_determinant_ratio(*reversed(anova_design_matrices(k, r)))
        if not math.isclose(explicit, b, rel_tol=1e-9):
            raise DesignError(f"closed form {b!r} disagrees with determinants {explicit!r}")
    return b


def _log_comb(n, k):
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def fisher_pseudo_p(s1, s2, n1, n2, exact=False):
    """Conditional pseudo p-value of Fisher's exact test.

    Upper hypergeometric tail ``sum_{j >= s1} f(j | s)`` given the total
    ``s = s1 + s2``.

    Parameters
    ----------
    s1, s2 : int
        Successes in each group.
    n1, n2 : int
        Group sizes.
    exact : bool
        Return a :class:`fractions.Fraction` computed with integer
        binomial coefficients instead of a log-space float sum.
    """
    if not (0 <= s1 <= n1 and 0 <= s2 <= n2):
        raise DomainError(f"counts out of range: s1={s1!r}, s2={s2!r}, n1={n1!r}, n2={n2!r}")
    s = s1 + s2
    upper = min(n1, s)
    if exact:
        num = sum(math.comb(n1, j) * math.comb(n2, s - j) for j in range(s1, upper + 1))
        return Fraction(num, math.comb(n1 + n2, s))
    log_total = _log_comb(n1 + n2, s)
    logs = np.array([_log_comb(n1, j) + _log_comb(n2, s - j) - log_total
                     for j in range(s1, upper + 1)])
    top = logs.max()
    return float(min(1.0, math.exp(top) * np.exp(logs - top).sum()))


@dataclass(frozen=True)
class RegressionQuantities:
    """Nested regression comparison ``y ~ 1 + x2`` against ``y ~ 1 + x2 + x3``."""

    n: int
    b: float
    s3_sq: float
    rho23: float
    sigma_sq: float
    beta2: float
    beta3: float
    d2: float
    d3: float
    n_e2: float
    n_e3: float
    v2: float
    v3: float
    C: float
    f_stat: float
    f_pvalue: float
    x_tilde: np.ndarray = field(repr=False)
    flags: tuple = ()

    def tess(self) -> TessQuantities:
        """View as the generic quantities for the added regressor."""
        return TessQuantities(d=self.d3, n_e=self.n_e3, v=self.v3, C=self.C, b=self.b,
                              flags=self.flags)


def _ols(x, y):
    coef, *_ = np.linalg.lstsq(x, y, rcond=None)
    resid = y - x @ coef
    return coef, float(resid @ resid)


def regression_nested_quantities(y, x2, x3, sigma_sq=None, x2_scale="sum_of_squares"):
    """PBIC quantities and classical F test for adding ``x3`` to ``y ~ 1 + x2``.

    Parameters
    ----------
    y, x2, x3 : array_like
        Response and the two predictors, all of length ``n``.
    sigma_sq : float, optional
        Error variance. Defaults to the residual mean square of the larger
        model.
    x2_scale : {"sum_of_squares", "variance"}
        Reading of ``s^2_{x2}`` in ``d2 = sigma^2 / s^2_{x2}`` and
        ``n_e2 = s^2_{x2} / max_i (x_i2 - mean)^2``. The default, the
        centred sum of squares, matches the ``x_tilde' x_tilde`` scale used
        for the added regressor.

    Returns
    -------
    RegressionQuantities
    """
    y = np.asarray(y, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    x3 = np.asarray(x3, dtype=float)
    n = y.shape[0]
    if y.ndim != 1 or x2.shape != (n,) or x3.shape != (n,):
        raise DesignError("response and predictors must be 1-d arrays of equal length")
    if n <= 3:
        raise DesignError(f"need more than 3 observations, got {n}")

    s2_sq = float(np.var(x2, ddof=1))
    s3_sq = float(np.var(x3, ddof=1))
    if s2_sq == 0 or s3_sq == 0:
        raise CollinearityError("a predictor is constant")
    rho23 = float(np.corrcoef(x2, x3)[0, 1])
    if abs(rho23) >= 1.0 - 1e-12:
        raise CollinearityError(f"|rho23| = {abs(rho23)!r}; the added predictor is collinear")
    b = (n - 1) * s3_sq * (1.0 - rho23**2)

    ones = np.ones(n)
    x_star = np.column_stack([ones, x2])
    x_full = np.column_stack([ones, x2, x3])
    coef_null, rss_null = _ols(x_star, y)
    coef_full, rss_full = _ols(x_full, y)
    j = 3
    if sigma_sq is None:
        sigma_sq = rss_full / (n - j)
    if not sigma_sq > 0:
        raise DomainError(f"sigma_sq must be positive, got {sigma_sq!r}")

    # residual of x3 after projecting on span(1, x2)
    proj_coef, *_ = np.linalg.lstsq(x_star, x3, rcond=None)
    x_tilde = x3 - x_star @ proj_coef
    xtx = float(x_tilde @ x_tilde)

    centred2 = x2 - x2.mean()
    ss2 = float(centred2 @ centred2)
    if x2_scale == "sum_of_squares":
        scale2 = ss2
    elif x2_scale == "variance":
        scale2 = s2_sq
    else:
        raise DomainError(f"x2_scale must be 'sum_of_squares' or 'variance', got {x2_scale!r}")

    beta2 = float(coef_null[1])
    beta3 = float(coef_full[2])
    d2 = sigma_sq / scale2
    n_e2 = scale2 / float(np.max(centred2**2))
    d3 = sigma_sq / xtx
    n_e3 = xtx / float(np.max(x_tilde**2))
    v2 = beta2**2 / (d2 * (1.0 + n_e2))
    v3 = beta3**2 / (d3 * (1.0 + n_e3))
    C = 2.0 * pbic_log_term(v2) - 2.0 * pbic_log_term(v3)

    f_stat = (rss_null - rss_full) / (rss_full / (n - j))
    return RegressionQuantities(
        n=n, b=b, s3_sq=s3_sq, rho23=rho23, sigma_sq=float(sigma_sq),
        beta2=beta2, beta3=beta3, d2=d2, d3=d3, n_e2=n_e2, n_e3=n_e3, v2=v2, v3=v3, C=C,
        f_stat=float(f_stat), f_pvalue=f_sf(f_stat, 1, n - j), x_tilde=x_tilde,
    )


def read_numeric_csv(path):
    """Read a comma separated file with a header row into float columns.

    Returns a dict mapping column name to a 1-d array. Rows with missing
    or non-numeric fields raise :class:`DataError` naming the file row
    (the header is row 1).
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise DataError(f"{path}: empty file") from None
        if not header or any(h == "" for h in header):
            raise DataError(f"{path}: row 1: empty column name in header")
        if len(set(header)) != len(header):
            raise DataError(f"{path}: row 1: duplicate column names")
        columns = [[] for _ in header]
        for rownum, row in enumerate(reader, start=2):
            if not row or all(cell.strip() == "" for cell in row):
                continue
            if len(row) != len(header):
                raise DataError(
                    f"{path}: row {rownum}: expected {len(header)} fields, got {len(row)}")
            for col, cell, name in zip(columns, row, header):
                cell = cell.strip()
                if cell == "":
                    raise DataError(f"{path}: row {rownum}: missing value for {name!r}")
                try:
                    col.append(float(cell))
                except ValueError:
                    raise DataError(
                        f"{path}: row {rownum}: non-numeric value {cell!r} for {name!r}"
                    ) from None
    return {name: np.array(col) for name, col in zip(header, columns)}


def harmonic_number(n):
    """``H_n = sum_{i=1}^n 1/i`` by direct summation."""
    if not n >= 1:
        raise DomainError(f"need n >= 1, got {n!r}")
    return math.fsum(1.0 / i for i in range(1, int(n) + 1))


def findley_quantities(n, theta_hat=0.0) -> TessQuantities:
    """PBIC quantities for ``y_i = theta / sqrt(i) + e_i``.

    The regressor ``1/sqrt(i)`` has information ``H_n``, so ``d = 1/H_n``,
    ``n_e = H_n`` and the design ratio against the empty null model is
    ``b = H_n``.
    """
    h_n = harmonic_number(n)
    tq = _tess(1.0 / h_n, h_n, theta_hat)
    return TessQuantities(d=tq.d, n_e=tq.n_e, v=tq.v, C=tq.C, b=h_n, flags=tq.flags)
