import json
import os
from pathlib import Path

import pytest

from pcalib.cli import EvidenceReport, csv_to_rows, main, rows_to_csv

GOLDEN = Path(__file__).parent / "golden"
REPORT_FIELDS = ["formula", "inputs", "bf", "pi0", "posterior", "warnings"]

CASES = {
    "calibrate_p05": ["calibrate", "--p", "0.05", "--xi0", "1"],
    "calibrate_p5": ["calibrate", "--p", "0.5", "--xi0", "1"],
    "calibrate_xi2": ["calibrate", "--p", "0.05", "--xi0", "2"],
    "alpha_two_prop": ["adaptive-alpha", "two-prop", "--n1", "10", "--n2", "10",
                       "--sigma1-sq", "0.25", "--sigma2-sq", "0.25", "--p-hat", "0.2"],
    "alpha_anova": ["adaptive-alpha", "anova", "--k", "3", "--r", "10"],
    "alpha_linear": ["adaptive-alpha", "linear", "--q", "1", "--n", "82", "--j", "3",
                     "--b", "100"],
    "alpha_generic": ["adaptive-alpha", "generic", "--q", "1", "--n", "100"],
    "bf_bic": ["bf", "bic", "--alpha", "0.05", "--n", "100"],
    "bf_bic_xi": ["bf", "bic", "--alpha", "0.05", "--n", "100", "--xi0", "1.3"],
    "bf_pbic": ["bf", "pbic", "--alpha", "0.05", "--n", "82", "--j", "3", "--b", "100"],
    "bf_anova": ["bf", "anova", "--k", "3", "--r", "10", "--alpha", "0.05"],
    "bf_ttest": ["bf", "ttest", "--t", "2", "--n", "50", "--tau0", "6"],
    "bf_fisher": ["bf", "fisher", "--s", "1", "--n1", "1", "--n2", "1", "--a", "1", "--b", "1"],
    "fisher_p": ["fisher-p", "--s1", "2", "--s2", "0", "--n1", "2", "--n2", "2"],
    "scenario_fig3": ["scenario", "fig3", "--xi0", "1,1.1,1.2,1.3", "--points", "20"],
    "scenario_two_means": ["scenario", "two-means", "--alphas", "0.01,0.05,0.1"],
    "scenario_fisher": ["scenario", "fisher", "--n1", "4", "--n2", "4"],
    "scenario_findley": ["scenario", "findley", "--n", "100,1000,10000",
                         "--alpha", "0.05,0.01"],
    "scenario_findley_sim": ["scenario", "findley", "--n", "10,100", "--mode", "simulate",
                             "--seed", "7"],
    "validate_rlb": ["validate", "rlb", "--xi", "1", "--samples", "100000", "--seed", "7"],
    "validate_fisher": ["validate", "fisher", "--n1", "5", "--n2", "5"],
    "validate_xi0": ["validate", "xi0", "--xi", "2", "--seed", "3"],
}


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_output(name, capsys):
    code, first, _ = run(CASES[name], capsys)
    assert code == 0
    _, second, _ = run(CASES[name], capsys)
    assert first == second
    golden = GOLDEN / f"{name}.json"
    if os.environ.get("PCALIB_REGEN_GOLDEN"):
        golden.write_text(first)
    assert json.loads(first) == json.loads(golden.read_text())


@pytest.mark.parametrize("name", [n for n in CASES if n.startswith(("calibrate", "bf_"))])
def test_report_schema(name, capsys):
    _, out, _ = run(CASES[name], capsys)
    report = json.loads(out)
    assert list(report) == REPORT_FIELDS
    assert report["posterior"] == pytest.approx(report["bf"] / (report["bf"] + 1.0), rel=1e-8)


def test_calibrate_examples(capsys):
    report = json.loads(run(CASES["calibrate_p05"], capsys)[1])
    assert report["bf"] == pytest.approx(0.407162, abs=1e-6)
    assert report["posterior"] == pytest.approx(0.28934988546, rel=1e-8)
    report = json.loads(run(CASES["calibrate_p5"], capsys)[1])
    assert (report["bf"], report["posterior"]) == (1.0, 0.5)
    report = json.loads(run(CASES["calibrate_xi2"], capsys)[1])
    assert report["formula"] == "rlb_xi"
    assert report["bf"] == pytest.approx(0.0407162, abs=1e-7)
    assert report["posterior"] == pytest.approx(0.0391233, abs=1e-7)


def test_pi0_override(capsys):
    report = json.loads(run(["calibrate", "--p", "0.05", "--pi0", "0.2"], capsys)[1])
    assert report["pi0"] == 0.2
    assert report["posterior"] == pytest.approx(report["bf"] / (report["bf"] + 4.0), rel=1e-8)


def test_evidence_report_invariant():
    rep = EvidenceReport("eq7", {}, 1.5, 0.3)
    assert rep.posterior == 1.5 / (1.5 + 0.7 / 0.3)


def test_warnings_surface_in_report(capsys):
    code, out, _ = run(["calibrate", "--p", "1", "--complement"], capsys)
    assert code == 0
    assert json.loads(out)["warnings"]


def test_scenario_csv_round_trip(capsys, tmp_path):
    code, text, _ = run(["scenario", "fig3", "--points", "50", "--format", "csv"], capsys)
    assert code == 0
    rows = csv_to_rows(text)
    assert len(rows) == 50
    assert rows_to_csv(rows) == text
    path = tmp_path / "curve.csv"
    path.write_text(text)
    assert csv_to_rows(path.read_text()) == rows


def test_fig3_ordering(capsys):
    rows = json.loads(run(["scenario", "fig3", "--points", "1000"], capsys)[1])["rows"]
    cols = ["P_RLB_xi1", "P_RLB_xi1.1", "P_RLB_xi1.2", "P_RLB_xi1.3"]
    for row in rows:
        vals = [row[c] for c in cols]
        assert vals == sorted(vals, reverse=True)


def test_findley_scenario_values(capsys):
    rows = json.loads(run(CASES["scenario_findley"], capsys)[1])["rows"]
    assert len(rows) == 6
    assert rows[0]["P_PL"] == pytest.approx(0.25593259266722, rel=1e-8)


def test_seed_from_environment(capsys, monkeypatch):
    argv = ["validate", "xi0", "--xi", "1.5", "--samples", "2000"]
    monkeypatch.setenv("PCALIB_SEED", "123")
    a = json.loads(run(argv, capsys)[1])
    b = json.loads(run(argv + ["--seed", "123"], capsys)[1])
    c = json.loads(run(argv + ["--seed", "124"], capsys)[1])
    assert a == b
    assert a["seed"] == 123 and a != c


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["validate", "nosuch"],
    ["calibrate"],
    ["calibrate", "--p", "abc"],
    ["bf", "bic", "--alpha", "0.05"],
    ["scenario", "fig3", "--format", "xml"],
    ["adaptive-alpha", "anova", "--k", "3", "--r", "4", "--mode", "other"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["validate", "rlb", "--xi", "0.5"],
    ["calibrate", "--p", "1.5"],
    ["calibrate", "--p", "0.05", "--xi0", "0.5"],
    ["bf", "bic", "--alpha", "1.2", "--n", "10"],
    ["bf", "fisher", "--s", "3", "--n1", "2", "--n2", "2", "--a", "1", "--b", "1",
     "--p0", "0.3"],
    ["adaptive-alpha", "linear", "--q", "1", "--n", "3", "--j", "3", "--b", "2"],
    ["scenario", "regression"],
    ["scenario", "regression", "--csv", "/nonexistent/mpg.csv"],
])
def test_domain_errors_exit_1(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 1
    assert out == ""
    assert "error" in err


def test_regression_scenario_collinear_exit_1(tmp_path, capsys):
    path = tmp_path / "d.csv"
    path.write_text("mpg,wt,sp\n" + "".join(f"{i*i},{i},{2*i+1}\n" for i in range(8)))
    code, _, err = run(["scenario", "regression", "--csv", str(path)], capsys)
    assert code == 1
    assert "collinear" in err


def test_regression_scenario_on_synthetic_csv(tmp_path, capsys):
    path = tmp_path / "d.csv"
    rows = [(1.0, 0.0, 1.0), (2.5, 1.0, -1.0), (2.0, 2.0, 2.0), (4.5, 3.0, 0.5),
            (3.8, 4.0, 3.0), (6.1, 5.0, 1.5)]
    path.write_text("mpg,wt,sp\n" + "".join(f"{a},{b},{c}\n" for a, b, c in rows))
    code, out, _ = run(["scenario", "regression", "--csv", str(path)], capsys)
    assert code == 0
    payload = json.loads(out)
    assert [r["g"] for r in payload["rows"]] == ["chi2", "f_deviance"]
    assert set(payload["discrepancy"]) == {"f_pvalue", "P_PL[chi2]", "P_PG1[chi2]",
                                           "P_PL[f_deviance]", "P_PG1[f_deviance]"}


def test_validate_xi0_from_file(capsys, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("0.5\n0.25\n")
    code, out, _ = run(["validate", "xi0", "--samples-file", str(path)], capsys)
    assert code == 0
    assert json.loads(out)["m"] == 2
