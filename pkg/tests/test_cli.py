import json
from fractions import Fraction as F

import pytest

from awpoly.cli import parse_and_dispatch
from awpoly.families import AWParams, aw_monic
from awpoly.scalars import QContext

STD = ["--a", "1/2", "--b", "1/3", "--c", "1/5", "--d", "1/7", "--u", "1/2"]


def run(capsys, argv):
    code = parse_and_dispatch(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_json_matches_library(capsys):
    code, out, _ = run(capsys, ["eval", *STD, "--n", "2..3", "--x", "1/3",
                                "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "eval"
    assert payload["status"] == "ok"
    ctx = QContext(u=F(1, 2))
    params = AWParams(F(1, 2), F(1, 3), F(1, 5), F(1, 7), ctx)
    for row in payload["rows"]:
        n = int(row["n"])
        expected = float(aw_monic(params, n)(F(1, 3)))
        assert abs(float(row["P_n"]) - expected) < 1e-10


def test_csv_and_json_agree(capsys):
    code_c, out_c, _ = run(capsys, ["zeros", *STD, "--n", "4"])
    code_j, out_j, _ = run(capsys, ["zeros", *STD, "--n", "4",
                                    "--format", "json"])
    assert code_c == code_j == 0
    lines = out_c.strip().splitlines()
    assert lines[0] == "n,rank,zero"
    payload = json.loads(out_j)
    assert len(lines) - 1 == len(payload["rows"]) == 4
    for line, row in zip(lines[1:], payload["rows"]):
        assert line.split(",")[2] == row["zero"]


def test_zeros_sorted_and_inside_interval(capsys):
    code, out, _ = run(capsys, ["zeros", *STD, "--n", "5", "--format", "json"])
    assert code == 0
    vals = [float(r["zero"]) for r in json.loads(out)["rows"]]
    assert vals == sorted(vals)
    assert all(-1 < v < 1 for v in vals)


def test_bounds_command(capsys):
    code, out, _ = run(capsys, ["bounds", *STD, "--n", "4..5"])
    assert code == 0
    assert out.splitlines()[0] == "n,upper_on_smallest,lower_on_largest"


def test_table1_command(capsys):
    code, out, _ = run(capsys, ["table1", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    rows = {int(r["n"]): r for r in payload["rows"]}
    assert set(rows) == {7, 9, 12}
    assert abs(float(rows[7]["upper_bound"]) - 0.33690627) < 1e-7


def test_verify_pass_exact(capsys):
    code, out, _ = run(capsys, ["verify", "--check", "dde", *STD,
                                "--n", "0..3", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "pass"
    assert all(r["status"] == "PASS" for r in payload["rows"])


def test_verify_product_rules(capsys):
    code, out, _ = run(capsys, ["verify", "--check", "product-rules",
                                "--u", "1/2", "--seed", "3"])
    assert code == 0


def test_verify_fail_in_float_backend(capsys):
    # float residuals are tiny but nonzero, so the strict check FAILs
    code, out, _ = run(capsys, ["verify", "--check", "dde", "--q", "0.3",
                                "--a", "0.5", "--b", "0.4", "--c", "0.3",
                                "--d", "0.2", "--n", "2..3",
                                "--format", "json"])
    assert code == 1
    assert json.loads(out)["status"] == "fail"


def test_limits_command(capsys):
    code, out, _ = run(capsys, ["limits", "--case", "ii", "--a", "1/2",
                                "--b", "1/3", "--q", "0.25", "--n", "3",
                                "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    devs = [float(r["deviation"]) for r in payload["rows"]]
    assert devs == sorted(devs, reverse=True)


@pytest.mark.parametrize("argv", [
    ["eval", "--a", "1/2", "--b", "1/3", "--c", "1/5", "--d", "1/7",
     "--n", "2", "--x", "0"],                      # no --u/--q
    ["eval", *STD, "--n", "2"],                    # missing --x
    ["eval", *STD, "--n", "40", "--x", "0"],       # n out of range
    ["eval", *STD, "--n", "2", "--x", "bogus"],
    ["zeros", "--u", "1/2", "--n", "3"],           # missing parameters
    ["verify", "--check", "no-such", *STD],
    ["limits", "--case", "v", "--q", "0.25"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, argv)
    assert code == 2


def test_bad_precision_env(capsys, monkeypatch):
    monkeypatch.setenv("AW_PRECISION", "lots")
    code, _, err = run(capsys, ["zeros", *STD, "--n", "3"])
    assert code == 2
    assert "AW_PRECISION" in err


def test_precision_env_is_used(capsys, monkeypatch):
    monkeypatch.setenv("AW_PRECISION", "80")
    code, out, _ = run(capsys, ["zeros", *STD, "--n", "3", "--format", "json"])
    assert code == 0
    assert json.loads(out)["config"]["precision"] == 80
