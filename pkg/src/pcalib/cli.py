"""Command-line interface.

Exit status: 0 on success, 1 for domain or data errors (and failed
validations), 2 for usage errors.
"""

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import special

from . import __version__
from .adapters import (
    TwoMeansData,
    TwoProportionData,
    fisher_pseudo_p,
    read_numeric_csv,
    regression_nested_quantities,
    tess_two_means,
    tess_two_proportions,
    two_means_design_ratio,
)
from .adaptive_alpha import (
    adaptive_alpha_anova,
    adaptive_alpha_bic,
    adaptive_alpha_pbic_adjusted,
    adaptive_alpha_pbic_linear,
    adaptive_alpha_two_proportions,
    anova_substitution,
)
from .bayes_factors import (
    bf_anova,
    bf_bic,
    bf_fisher_exact,
    bf_pbic_linear,
    bf_ttest,
)
from .calibration import INV_E, posterior_from_bf, rlb_complement, rlb_xi
from .errors import DataError, DegenerateInputWarning, DomainError, PcalibError
from .harness import (
    SimulationPlan,
    estimate_xi0,
    findley_curves,
    stream_rng,
    verify_fisher_validity,
    verify_rlb_validity,
)

SIG_DIGITS = 9
REGRESSION_TARGETS = {"f_pvalue": 0.0325, "P_PL": 0.9253192, "P_PG1": 0.7209449}
DEFAULT_ALPHA_GRID = tuple(round(0.01 * i, 2) for i in range(1, 31))


@dataclass
class EvidenceReport:
    formula: str
    inputs: dict
    bf: float
    pi0: float = 0.5
    posterior: float = field(init=False)
    warnings: list = field(default_factory=list)

    def __post_init__(self):
        self.posterior = posterior_from_bf(self.bf, self.pi0)

    def to_dict(self):
        d = asdict(self)
        return {key: d[key] for key in ("formula", "inputs", "bf", "pi0", "posterior", "warnings")}


def round_sig(obj, digits=SIG_DIGITS):
    """Round every float in a nested structure to ``digits`` significant digits."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return None
        return float(f"{x:.{digits}g}")
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, dict):
        return {str(k): round_sig(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [round_sig(v, digits) for v in obj]
    return str(obj)


def dumps_json(obj):
    return json.dumps(round_sig(obj), indent=2)


def _format_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.{SIG_DIGITS}g}"
    return str(value)


def rows_to_csv(rows):
    """Serialize a list of flat dicts, floats with 9 significant digits."""
    buf = io.StringIO()
    if not rows:
        return ""
    header = list(rows[0].keys())
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format_cell(row.get(key)) for key in header])
    return buf.getvalue()


def csv_to_rows(text):
    """Inverse of :func:`rows_to_csv` for numeric cells; blanks become None."""
    reader = csv.DictReader(io.StringIO(text))
    rows = []
    for raw in reader:
        row = {}
        for key, cell in raw.items():
            if cell == "":
                row[key] = None
                continue
            try:
                row[key] = int(cell) if cell.lstrip("-").isdigit() else float(cell)
            except ValueError:
                row[key] = cell
        rows.append(row)
    return rows


def _float_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _default_seed():
    value = os.environ.get("PCALIB_SEED")
    if value is None:
        return 0
    try:
        return int(value)
    except ValueError:
        raise SystemExit(f"pcalib: PCALIB_SEED must be an integer, got {value!r}")


def _emit(payload, args, rows_key=None):
    # warnings raised while computing are surfaced in the report
    captured = [str(w.message) for w in getattr(args, "caught", None) or ()
                if issubclass(w.category, (DegenerateInputWarning, RuntimeWarning))]
    if captured and isinstance(payload.get("warnings"), list):
        payload["warnings"].extend(captured)
    if getattr(args, "format", "json") == "csv" and rows_key is not None:
        sys.stdout.write(rows_to_csv(payload[rows_key]))
    else:
        sys.stdout.write(dumps_json(payload) + "\n")


# --- calibrate ---------------------------------------------------------------

def cmd_calibrate(args):
    if not 0.0 < args.p <= 1.0:
        raise DomainError(f"p must lie in (0, 1], got {args.p!r}")
    if args.complement:
        bf = rlb_complement(args.p)
        formula = "rlb"
    else:
        bf = rlb_xi(args.p, args.xi0)
        formula = "rlb" if args.xi0 == 1 else "rlb_xi"
    report = EvidenceReport(formula, {"p": args.p, "xi0": args.xi0,
                                      "complement": args.complement}, bf, args.pi0)
    _emit(report.to_dict(), args)


# --- adaptive-alpha ----------------------------------------------------------

def cmd_adaptive_alpha(args):
    inputs = {"alpha": args.alpha}
    tess = None
    if args.kind == "two-prop":
        data = TwoProportionData(args.n1, args.n2, args.s1, args.s2, args.sigma1_sq,
                                 args.sigma2_sq, args.p_hat)
        tq = tess_two_proportions(data)
        n = args.n1 + args.n2
        value = adaptive_alpha_two_proportions(args.alpha, n, tq.C)
        formula = "two_proportions"
        inputs.update(n1=args.n1, n2=args.n2, n=n)
        tess = asdict(tq)
    elif args.kind == "anova":
        value = adaptive_alpha_anova(args.k, args.r, args.alpha, args.C, args.g, args.mode)
        formula = "anova"
        inputs.update(k=args.k, r=args.r, C=args.C, g=args.g, mode=args.mode,
                      **{key: v for key, v in anova_substitution(args.k, args.r, args.mode).items()
                         if key in ("q", "b")})
    elif args.kind == "linear":
        value = adaptive_alpha_pbic_linear(args.alpha, args.q, args.n, args.j, args.b, args.C,
                                           args.g)
        formula = "pbic_linear"
        inputs.update(q=args.q, n=args.n, j=args.j, b=args.b, C=args.C, g=args.g)
    else:
        inputs.update(q=args.q, n=args.n)
        if args.c_alpha is not None:
            value = adaptive_alpha_bic(args.alpha, args.q, args.n, args.c_alpha)
            formula = "bic"
            inputs["c_alpha"] = args.c_alpha
        else:
            value = adaptive_alpha_pbic_adjusted(args.alpha, args.q, args.n, args.C)
            formula = "pbic_adjusted"
            inputs["C"] = args.C
    payload = {"formula": formula, "inputs": inputs, "adaptive_alpha": value}
    if tess is not None:
        payload["tess"] = tess
    payload["warnings"] = list(tess["flags"]) if tess else []
    _emit(payload, args)


# --- bf ----------------------------------------------------------------------

def cmd_bf(args):
    if args.kind == "bic":
        bf = bf_bic(args.alpha, args.q, args.n, args.C, args.xi0)
        formula = "eq7" if args.xi0 == 1 else "eq6"
        inputs = {"alpha": args.alpha, "q": args.q, "n": args.n, "C": args.C, "xi0": args.xi0}
    elif args.kind == "pbic":
        bf = bf_pbic_linear(args.alpha, args.q, args.n, args.j, args.b, args.C, args.g)
        formula = "eq8"
        inputs = {"alpha": args.alpha, "q": args.q, "n": args.n, "j": args.j, "b": args.b,
                  "C": args.C, "g": args.g}
    elif args.kind == "anova":
        bf = bf_anova(args.k, args.r, args.alpha, args.C, args.g, args.mode)
        formula = "anova"
        inputs = {"alpha": args.alpha, "k": args.k, "r": args.r, "C": args.C, "g": args.g,
                  "mode": args.mode}
    elif args.kind == "ttest":
        bf = bf_ttest(args.t, args.n, args.tau0)
        formula = "ttest"
        inputs = {"t": args.t, "n": args.n, "tau0": args.tau0}
    else:
        bf = bf_fisher_exact(args.s, args.n1, args.n2, args.a, args.b, args.p0)
        formula = "fisher_bf"
        inputs = {"s": args.s, "n1": args.n1, "n2": args.n2, "a": args.a, "b": args.b,
                  "p0": args.a / (args.a + args.b) if args.p0 is None else args.p0}
    _emit(EvidenceReport(formula, inputs, bf, args.pi0).to_dict(), args)


# --- fisher-p ----------------------------------------------------------------

def cmd_fisher_p(args):
    exact = fisher_pseudo_p(args.s1, args.s2, args.n1, args.n2, exact=True)
    payload = {"inputs": {"s1": args.s1, "s2": args.s2, "n1": args.n1, "n2": args.n2},
               "pseudo_p": fisher_pseudo_p(args.s1, args.s2, args.n1, args.n2),
               "exact": f"{exact.numerator}/{exact.denominator}"}
    _emit(payload, args)


# --- scenario ----------------------------------------------------------------

def _fig3_rows(xi_values, points):
    p = INV_E * np.arange(1, points + 1) / (points + 1)
    rows = []
    curves = {xi: posterior_from_bf(rlb_xi(p, xi)) for xi in xi_values}
    for i, pi in enumerate(p):
        row = {"p": float(pi)}
        for xi in xi_values:
            row[f"P_RLB_xi{xi:g}"] = float(curves[xi][i])
        rows.append(row)
    return rows


def _alpha_grid(args):
    if args.alphas:
        return args.alphas
    return [float(a) for a in np.round(np.linspace(0.001, 0.3, 100), 6)]


def scenario_fig3(args):
    xi_values = args.xi0 or [1.0, 1.1, 1.2, 1.3]
    if any(xi < 1 for xi in xi_values):
        raise DomainError("xi0 values must be >= 1")
    rows = _fig3_rows(xi_values, args.points)
    return {"inputs": {"xi0": xi_values, "points": args.points}, "rows": rows, "warnings": []}


def scenario_two_means(args):
    n1, n2 = args.n1, args.n2
    n = n1 + n2
    data = TwoMeansData(n1, n2, args.sigma1_sq, args.sigma2_sq, args.beta_hat,
                        equal_variance=args.equal_variance)
    tq = tess_two_means(data, args.ne_form)
    b = two_means_design_ratio(n1, n2)
    rows = []
    for alpha in _alpha_grid(args):
        t = float(special.stdtrit(n - 1, 1.0 - alpha / 2.0))
        rows.append({
            "alpha": alpha,
            "P_RLB": posterior_from_bf(rlb_xi(alpha), args.pi0),
            "P_PG": posterior_from_bf(bf_bic(alpha, 1, n, tq.C), args.pi0),
            "P_PL": posterior_from_bf(bf_pbic_linear(alpha, 1, n, 2, b, tq.C, args.g), args.pi0),
            "t": t,
            "P_BF": posterior_from_bf(bf_ttest(t, n, args.tau0), args.pi0),
        })
    return {"inputs": {"n1": n1, "n2": n2, "n": n, "tau0": args.tau0, "b": b,
                       "tess": asdict(tq), "g": args.g, "pi0": args.pi0},
            "rows": rows, "warnings": list(tq.flags)}


def scenario_fisher(args):
    n1, n2 = args.n1, args.n2
    n = n1 + n2
    xi_values = args.xi0 or [1.0, 1.1, 1.2, 1.3]
    warn = []
    rows = []
    skipped = 0
    for s1 in range(n1 + 1):
        for s2 in range(n2 + 1):
            pv = fisher_pseudo_p(s1, s2, n1, n2)
            if pv >= 1.0:
                skipped += 1
                continue
            s = s1 + s2
            tq = tess_two_proportions(TwoProportionData(n1, n2, s1, s2))
            row = {"s1": s1, "s2": s2, "s": s, "pseudo_p": pv,
                   "P_RLB": posterior_from_bf(rlb_xi(pv), args.pi0)}
            for xi in xi_values:
                row[f"P_PG_xi{xi:g}"] = posterior_from_bf(bf_bic(pv, 1, n, tq.C, xi), args.pi0)
            if 0 < s < n:
                p0 = s / n
                bf = bf_fisher_exact(s, n1, n2, p0 * args.prior_strength,
                                     (1 - p0) * args.prior_strength)
                row["P_BF_Test"] = posterior_from_bf(bf, args.pi0)
            else:
                row["P_BF_Test"] = None
            rows.append(row)
    if skipped:
        warn.append(f"{skipped} outcomes with pseudo p-value 1 omitted")
    warn.append("P_BF_Test uses p0 = s/n and a Beta(p0 m, (1-p0) m) prior; "
                "undefined when s is 0 or n")
    rows.sort(key=lambda r: (r["pseudo_p"], r["s1"], r["s2"]))
    return {"inputs": {"n1": n1, "n2": n2, "xi0": xi_values,
                       "prior_strength": args.prior_strength, "pi0": args.pi0},
            "rows": rows, "warnings": warn}


def scenario_regression(args):
    if not args.csv:
        raise DataError("the regression scenario needs --csv PATH")
    if not os.path.exists(args.csv):
        raise DataError(f"dataset not found: {args.csv}")
    table = read_numeric_csv(args.csv)
    alt = [c for c in args.alt.split(",") if c]
    null = [c for c in args.null.split(",") if c]
    if len(null) != 1 or len(alt) != 2 or null[0] not in alt:
        raise DomainError("expected one null predictor and an alternative adding one predictor")
    added = [c for c in alt if c != null[0]][0]
    by_lower = {name.lower(): name for name in table}
    columns = []
    for name in [args.response, null[0], added]:
        key = name if name in table else by_lower.get(name.lower())
        if key is None:
            raise DataError(f"column {name!r} not in {sorted(table)}")
        columns.append(table[key])
    rq = regression_nested_quantities(*columns, args.sigma_sq, args.x2_scale)
    n, q, j = rq.n, 1, 3
    options = ["chi2", "f_deviance"] if args.g == "all" else [args.g]
    bf7 = bf_bic(args.alpha, q, n, rq.C)
    rows = []
    for g in options:
        bf8 = bf_pbic_linear(args.alpha, q, n, j, rq.b, rq.C, g)
        rows.append({"g": g, "alpha": args.alpha, "bf_PG": bf7,
                     "P_PG1": posterior_from_bf(bf7, args.pi0), "bf_PL": bf8,
                     "P_PL": posterior_from_bf(bf8, args.pi0)})
    quantities = {k: v for k, v in asdict(rq).items() if k != "x_tilde"}
    discrepancy = {"f_pvalue": {"target": REGRESSION_TARGETS["f_pvalue"],
                                "observed": rq.f_pvalue,
                                "abs_diff": abs(rq.f_pvalue - REGRESSION_TARGETS["f_pvalue"])}}
    for row in rows:
        for key in ("P_PL", "P_PG1"):
            discrepancy[f"{key}[{row['g']}]"] = {
                "target": REGRESSION_TARGETS[key], "observed": row[key],
                "abs_diff": abs(row[key] - REGRESSION_TARGETS[key])}
    return {"inputs": {"csv": args.csv, "response": args.response, "null": null, "alt": alt,
                       "alpha": args.alpha, "q": q, "j": j, "pi0": args.pi0,
                       "x2_scale": args.x2_scale},
            "quantities": quantities, "rows": rows, "discrepancy": discrepancy,
            "warnings": list(rq.flags)}


def scenario_findley(args):
    rows = findley_curves(args.n, args.alpha, args.mode, args.theta_hat, args.seed, args.pi0,
                          args.bic_n, args.g)
    return {"inputs": {"n": args.n, "alpha": args.alpha, "mode": args.mode,
                       "theta_hat": args.theta_hat, "seed": args.seed, "bic_n": args.bic_n,
                       "g": args.g, "pi0": args.pi0},
            "rows": rows, "warnings": []}


SCENARIOS = {
    "fig3": scenario_fig3,
    "two-means": scenario_two_means,
    "fisher": scenario_fisher,
    "regression": scenario_regression,
    "findley": scenario_findley,
}


def cmd_scenario(args):
    payload = {"scenario": args.name}
    payload.update(SCENARIOS[args.name](args))
    _emit(payload, args, rows_key="rows")


# --- validate ----------------------------------------------------------------

def cmd_validate(args):
    if args.suite == "rlb":
        plan = SimulationPlan(seed=args.seed, samples=args.samples, xi=args.xi,
                              alpha_grid=tuple(args.alphas or DEFAULT_ALPHA_GRID),
                              batches=args.batches)
        result = verify_rlb_validity(plan, workers=args.workers)
        payload = result.to_dict()
    elif args.suite == "fisher":
        p_grid = args.p_grid or [round(0.1 * i, 1) for i in range(1, 10)]
        result = verify_fisher_validity(args.n1, args.n2, p_grid, args.samples, args.seed)
        payload = result.to_dict()
    else:
        if args.samples_file:
            with open(args.samples_file) as fh:
                values = [float(line) for line in fh if line.strip()]
            est = estimate_xi0(values)
            payload = {"suite": "xi0", "xi_hat": est.xi, "se": est.se, "m": est.m,
                       "verdict": True}
        else:
            if not args.xi > 0:
                raise DomainError(f"xi must be positive, got {args.xi!r}")
            u = stream_rng(args.seed, 0).random(args.samples)
            est = estimate_xi0(u ** (1.0 / args.xi))
            verdict = abs(est.xi - args.xi) <= 4.0 * est.se
            payload = {"suite": "xi0", "xi_true": args.xi, "xi_hat": est.xi, "se": est.se,
                       "m": est.m, "seed": args.seed, "verdict": bool(verdict)}
    _emit(payload, args)
    return 0 if payload["verdict"] else 1


# --- parser ------------------------------------------------------------------

def _add_common(p, fmt=False):
    p.add_argument("--pi0", type=float, default=0.5, help="prior probability of the null")
    if fmt:
        p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pcalib",
        description="Minimum Bayes factors and posterior probabilities from p-values.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("calibrate", help="minimum Bayes factor and posterior lower bound")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--xi0", type=float, default=1.0)
    p.add_argument("--complement", action="store_true", help="calibrate q = 1 - p instead")
    _add_common(p)
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("adaptive-alpha", help="sample-size adaptive significance levels")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("two-prop")
    k.add_argument("--n1", type=int, required=True)
    k.add_argument("--n2", type=int, required=True)
    k.add_argument("--s1", type=int)
    k.add_argument("--s2", type=int)
    k.add_argument("--sigma1-sq", type=float)
    k.add_argument("--sigma2-sq", type=float)
    k.add_argument("--p-hat", type=float, help="estimate of p1 - p2")
    k.add_argument("--alpha", type=float, default=0.05)
    k = kinds.add_parser("anova")
    k.add_argument("--k", type=int, required=True)
    k.add_argument("--r", type=int, required=True)
    k.add_argument("--alpha", type=float, default=0.05)
    k.add_argument("--C", type=float, default=0.0)
    k.add_argument("--g", choices=("chi2", "f_deviance"), default="chi2")
    k.add_argument("--mode", choices=("printed", "nested"), default="printed")
    k = kinds.add_parser("linear")
    k.add_argument("--alpha", type=float, default=0.05)
    k.add_argument("--q", type=int, required=True)
    k.add_argument("--n", type=float, required=True)
    k.add_argument("--j", type=float, required=True)
    k.add_argument("--b", type=float, required=True)
    k.add_argument("--C", type=float, default=0.0)
    k.add_argument("--g", choices=("chi2", "f_deviance"), default="chi2")
    k = kinds.add_parser("generic")
    k.add_argument("--alpha", type=float, default=0.05)
    k.add_argument("--q", type=int, required=True)
    k.add_argument("--n", type=float, required=True)
    k.add_argument("--C", type=float, default=0.0, help="PBIC correction (PBIC-adjusted form)")
    k.add_argument("--c-alpha", type=float, help="use the BIC form with this constant")
    p.set_defaults(func=cmd_adaptive_alpha)

    p = sub.add_parser("bf", help="calibrated and exact Bayes factors")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("bic")
    k.add_argument("--alpha", type=float, required=True)
    k.add_argument("--q", type=int, default=1)
    k.add_argument("--n", type=float, required=True)
    k.add_argument("--C", type=float, default=0.0)
    k.add_argument("--xi0", type=float, default=1.0)
    _add_common(k)
    k = kinds.add_parser("pbic")
    k.add_argument("--alpha", type=float, required=True)
    k.add_argument("--q", type=int, default=1)
    k.add_argument("--n", type=float, required=True)
    k.add_argument("--j", type=float, required=True)
    k.add_argument("--b", type=float, required=True)
    k.add_argument("--C", type=float, default=0.0)
    k.add_argument("--g", choices=("chi2", "f_deviance"), default="chi2")
    _add_common(k)
    k = kinds.add_parser("anova")
    k.add_argument("--k", type=int, required=True)
    k.add_argument("--r", type=int, required=True)
    k.add_argument("--alpha", type=float, required=True)
    k.add_argument("--C", type=float, default=0.0)
    k.add_argument("--g", choices=("chi2", "f_deviance"), default="chi2")
    k.add_argument("--mode", choices=("printed", "nested"), default="printed")
    _add_common(k)
    k = kinds.add_parser("ttest")
    k.add_argument("--t", type=float, required=True)
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--tau0", type=float, default=6.0)
    _add_common(k)
    k = kinds.add_parser("fisher")
    k.add_argument("--s", type=int, required=True)
    k.add_argument("--n1", type=int, required=True)
    k.add_argument("--n2", type=int, required=True)
    k.add_argument("--a", type=float, required=True)
    k.add_argument("--b", type=float, required=True)
    k.add_argument("--p0", type=float)
    _add_common(k)
    p.set_defaults(func=cmd_bf)

    p = sub.add_parser("fisher-p", help="Fisher exact test conditional pseudo p-value")
    p.add_argument("--s1", type=int, required=True)
    p.add_argument("--s2", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.set_defaults(func=cmd_fisher_p)

    p = sub.add_parser("scenario", help="tables for the worked designs")
    names = p.add_subparsers(dest="name", required=True)
    s = names.add_parser("fig3")
    s.add_argument("--xi0", type=_float_list)
    s.add_argument("--points", type=int, default=1000)
    _add_common(s, fmt=True)
    s = names.add_parser("two-means")
    s.add_argument("--n1", type=int, default=25)
    s.add_argument("--n2", type=int, default=25)
    s.add_argument("--sigma1-sq", type=float, default=1.0)
    s.add_argument("--sigma2-sq", type=float, default=1.0)
    s.add_argument("--beta-hat", type=float, default=0.0)
    s.add_argument("--equal-variance", action="store_true")
    s.add_argument("--ne-form", choices=("max", "min"), default="max")
    s.add_argument("--tau0", type=float, default=6.0)
    s.add_argument("--g", choices=("chi2", "f_deviance"), default="chi2")
    s.add_argument("--alphas", type=_float_list)
    _add_common(s, fmt=True)
    s = names.add_parser("fisher")
    s.add_argument("--n1", type=int, default=25)
    s.add_argument("--n2", type=int, default=25)
    s.add_argument("--xi0", type=_float_list)
    s.add_argument("--prior-strength", type=float, default=2.0,
                   help="a + b of the beta prior under the alternative")
    _add_common(s, fmt=True)
    s = names.add_parser("regression")
    s.add_argument("--csv")
    s.add_argument("--response", default="mpg")
    s.add_argument("--null", default="wt")
    s.add_argument("--alt", default="wt,sp")
    s.add_argument("--alpha", type=float, default=0.05)
    s.add_argument("--g", choices=("chi2", "f_deviance", "all"), default="all")
    s.add_argument("--sigma-sq", type=float)
    s.add_argument("--x2-scale", choices=("sum_of_squares", "variance"),
                   default="sum_of_squares")
    _add_common(s, fmt=True)
    s = names.add_parser("findley")
    s.add_argument("--n", type=_int_list, default=[100, 1000, 10000])
    s.add_argument("--alpha", type=_float_list, default=[0.05, 0.01])
    s.add_argument("--mode", choices=("fixed_theta_hat", "simulate"), default="fixed_theta_hat")
    s.add_argument("--theta-hat", type=float, default=0.0)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--bic-n", choices=("raw", "tess"), default="raw")
    s.add_argument("--g", choices=("chi2", "f_deviance"), default="chi2")
    _add_common(s, fmt=True)
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("validate", help="Monte Carlo and enumeration checks")
    suites = p.add_subparsers(dest="suite", required=True)
    v = suites.add_parser("rlb")
    v.add_argument("--xi", type=float, default=1.0)
    v.add_argument("--samples", type=int, default=100_000)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--alphas", type=_float_list)
    v.add_argument("--batches", type=int, default=4)
    v.add_argument("--workers", type=int, default=1)
    v = suites.add_parser("fisher")
    v.add_argument("--n1", type=int, required=True)
    v.add_argument("--n2", type=int, required=True)
    v.add_argument("--p-grid", type=_float_list)
    v.add_argument("--samples", type=int, default=100_000)
    v.add_argument("--seed", type=int, default=None)
    v = suites.add_parser("xi0")
    v.add_argument("--xi", type=float, default=2.0)
    v.add_argument("--samples", type=int, default=100_000)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--samples-file", help="one pseudo p-value per line")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", 0) is None:
        args.seed = _default_seed()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        args.caught = caught
        try:
            status = args.func(args)
        except (PcalibError, OSError) as exc:
            print(f"pcalib: error: {exc}", file=sys.stderr)
            return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
