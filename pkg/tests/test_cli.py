import csv
import io
import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from colourhopf import cli
from colourhopf.errors import ConfigError, EmptyReport
from colourhopf.report import CheckReport
from colourhopf.suites import SuiteConfig, run_suites

SMALL = ["--q", "0.5", "--n-max", "1", "--no-timing", "--quiet"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("kwargs", [
    {"q_values": ()}, {"q_values": (1.5,)}, {"q_values": (0.0,)}, {"n_max": -1}, {"tol": 0.0},
    {"suites": ("nope",)}, {"suites": ()}, {"format": "xml"}, {"colour_filter": ("+x",)},
    {"colour_filter": ("",)}, {"workers": 0},
])
def test_config_validation(kwargs):
    with pytest.raises(ConfigError):
        SuiteConfig(**kwargs)


def test_config_canonical_suite_order():
    assert SuiteConfig(suites=("cg", "algebra")).suites == ("algebra", "cg")


def test_colour_filter_globs():
    cfg = SuiteConfig(colour_filter=("+-*",))
    assert cfg.wants((1, -1, 1)) and cfg.wants((1, -1))
    assert not cfg.wants((-1, 1, 1))
    assert cfg.wants(())


def test_empty_report_rejected():
    with pytest.raises(EmptyReport):
        cli.emit_report([], SuiteConfig())
    with pytest.raises(EmptyReport):
        cli.build_document([], SuiteConfig())


@pytest.mark.parametrize("x, text", [(1.0, "1.0"), (0.1, "0.10000000000000001"), (math.inf, "Infinity"),
                                     (-math.inf, "-Infinity"), (math.nan, "NaN"), (-0.0, "-0.0")])
def test_float_text(x, text):
    assert cli._float_text(x) == text


def test_dumps_canonical_sorts_keys():
    text = cli.dumps_canonical({"b": [1, 2.5], "a": {"z": True, "y": None}})
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": {"y": None, "z": True}, "b": [1, 2.5]}
    with pytest.raises(TypeError):
        cli.dumps_canonical(object())


finite = st.floats(allow_nan=False, allow_infinity=True, width=64)


@settings(max_examples=50, deadline=None)
@given(res=st.lists(st.tuples(finite, st.floats(1e-15, 1.0)), min_size=1, max_size=5))
def test_json_round_trip(res):
    reports = [CheckReport(f"c{i}", r, t, {"q": 0.5, "N": [i]}, i, "algebra") for i, (r, t) in enumerate(res)]
    text = cli.emit_report(reports, SuiteConfig(), stream=io.StringIO())
    doc = cli.load_report(text)
    back = cli.reports_from_document(doc)
    assert [r.to_dict() for r in back] == [r.to_dict() for r in reports]
    assert cli.dumps_canonical(doc) + "\n" == text
    assert doc["summary"]["total"] == len(reports)
    assert doc["summary"]["passed"] == sum(r.passed for r in reports)
    assert doc["summary"]["maxResidual"] == max(r.residual for r in reports)


def test_main_json_output(capsys):
    code, out, err = run(capsys, *SMALL, "--suite", "algebra")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["version"] == "1"
    assert doc["summary"]["passed"] == doc["summary"]["total"] > 0
    assert all(c["elapsedMicros"] == 0 and c["suite"] == "algebra" for c in doc["checks"])
    assert doc["config"]["n_max"] == 1


def test_main_summary_on_stderr(capsys):
    code, _, err = run(capsys, "--q", "0.5", "--n-max", "1", "--suite", "scalar")
    assert code == 0 and "checks passed" in err


def test_main_csv_output(tmp_path, capsys):
    path = tmp_path / "out.csv"
    code, out, _ = run(capsys, *SMALL, "--suite", "cg", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    rows = list(csv.DictReader(path.open()))
    assert rows and set(rows[0]) == set(cli._CSV_COLUMNS)
    assert all(r["pass"] == "1" and r["suite"] == "cg" for r in rows)


def test_main_colour_filter(capsys):
    _, out, _ = run(capsys, *SMALL, "--suite", "hopf", "--colours", "++*")
    cols = [c["params"].get("colours") for c in json.loads(out)["checks"]]
    assert all(c is None or c[:2] == [1, 1] for c in cols)


def test_filter_removing_everything_is_config_error(capsys):
    code, _, err = run(capsys, *SMALL, "--suite", "cybe", "--colours", "+++++++")
    assert code == 2 and "error" in err


def test_bad_q_exit_code(capsys):
    code, _, err = run(capsys, "--q", "1.5")
    assert code == 2 and "error" in err


def test_unwritable_output_exit_code(tmp_path, capsys):
    code, _, _ = run(capsys, *SMALL, "--suite", "scalar", "--out", str(tmp_path / "missing" / "x.json"))
    assert code == 2


def test_perturbation_fails(capsys):
    code, out, _ = run(capsys, *SMALL, "--suite", "algebra", "--perturb", "1e-3")
    assert code == 1
    assert json.loads(out)["summary"]["passed"] < json.loads(out)["summary"]["total"]


def test_n_max_zero_is_exact():
    reports = run_suites(SuiteConfig(q_values=(0.5,), n_max=0, suites=("algebra", "rmatrix", "cg"), timing=False))
    assert reports and all(r.residual == 0.0 for r in reports)


def test_dump_matrices(capsys):
    _, out, _ = run(capsys, *SMALL, "--suite", "rmatrix", "--dump-matrices")
    mats = json.loads(out)["matrices"]
    assert mats and all(isinstance(m, dict) for m in mats)


def test_cg_table_csv(capsys):
    code, out, _ = run(capsys, "--q", "0.5", "--cg-table", "1", "1", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "N,n,n1,n2,coefficient" and len(lines) == 17


def test_cg_table_coloured_json(capsys):
    code, out, _ = run(capsys, "--q", "0.5", "--cg-table", "2", "1", "--cg-colours", "+-+")
    plain = json.loads(run(capsys, "--q", "0.5", "--cg-table", "2", "1")[1])
    assert code == 0 and json.loads(out) == plain


@pytest.mark.parametrize("argv", [["--cg-table", "1", "1", "--cg-colours", "+x+"],
                                  ["--cg-table", "-1", "1"]])
def test_cg_table_bad_input(capsys, argv):
    assert run(capsys, "--q", "0.5", *argv)[0] == 2


def test_deterministic_output(capsys):
    args = ["--q", "0.5", "--n-max", "2", "--no-timing", "--quiet", "--workers", "3"]
    a = run(capsys, *args)[1]
    b = run(capsys, *args, "--workers", "1")[1]
    assert a == b
    assert cli.stable_view(a) == cli.stable_view(b)
