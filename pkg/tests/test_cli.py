import json
import math

import pytest

from sincbounds import corpus
from sincbounds.cli import chain_table, main
from sincbounds.corpus import CheckResult
from sincbounds.means import MeanPoint, log_mean


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_constants_text(capsys):
    code, out, _ = run(capsys, "constants")
    assert code == 0
    assert "0.77086" in out
    assert "0.774596669" in out
    assert "0.82643" in out
    assert "sinc_lower_edge" in out


def test_constants_json_and_determinism(capsys):
    code, out1, _ = run(capsys, "constants", "--format", "json")
    assert code == 0
    rows = json.loads(out1)
    assert rows[0]["name"] == "sinc_lower_edge"
    assert round(rows[0]["value"], 5) == 0.77086
    _, out2, _ = run(capsys, "constants", "--format", "json")
    assert out1 == out2


def test_verify_suites_exit_zero(capsys):
    for suite in ("theorem1", "chains"):
        code, out, _ = run(capsys, "verify", "--suite", suite, "--points", "512")
        assert code == 0, out
        assert "checks ok" in out


def test_verify_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "remarks", "--points", "256",
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert all(r["ok"] for r in rows)
    assert json.loads(json.dumps(rows)) == rows
    # byte-identical reruns
    _, out2, _ = run(capsys, "verify", "--suite", "remarks", "--points", "256",
                     "--format", "json")
    assert out == out2


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "chains", "--points", "256",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "suite,id,kind,ok,expected,observed,detail"
    assert len(lines) == 1 + 15


def test_verify_exit_one_on_failure(capsys, monkeypatch):
    fake = [CheckResult(suite="x", id="broken", kind="value", ok=False,
                        expected="0", observed="1")]
    monkeypatch.setattr(corpus, "run_suite", lambda *a, **k: fake)
    code, out, _ = run(capsys, "verify", "--suite", "all")
    assert code == 1
    assert "FAIL" in out


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--points", "10")[0] == 2
    assert run(capsys, "verify", "--tol", "1.0")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "eval", "--fn", "cos-bound", "--x", "1.0")[0] == 2  # missing --p
    assert run(capsys, "special", "--name", "sb", "--a", "1.0")[0] == 2   # missing --b


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--fn", "sinc", "--x", "0")
    assert code == 0 and out.strip().endswith("= 1")
    code, out, _ = run(capsys, "eval", "--fn", "sinc-gap", "--p", "0.7", "--x", "0.3")
    assert code == 0 and "series" in out
    code, out, _ = run(capsys, "eval", "--fn", "cos-power", "--p", "1.0", "--x", "2.0")
    assert code == 2  # domain error surfaces as usage-style failure


def test_table_m1c(capsys):
    code, out, _ = run(capsys, "table", "--chain", "m1c", "--points", "64")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 65
    header = lines[0].split(",")
    assert header[0] == "x" and header[5] == "sinc"
    first = [float(v) for v in lines[1].split(",")]
    assert first[0] == 0.0
    assert all(v == 1.0 for v in first[1:10])      # every member is 1 at x = 0
    mid = [float(v) for v in lines[40].split(",")]
    assert all(b > a for a, b in zip(mid[1:10], mid[2:10]))  # strict chain order
    assert all(m > 0.0 for m in mid[10:])


def test_table_m2c_limit_row(capsys):
    code, out, _ = run(capsys, "table", "--chain", "m2c", "--points", "64")
    assert code == 0
    first = [float(v) for v in out.strip().splitlines()[1].split(",")]
    assert first[0] == 0.0 and all(v == 1.0 for v in first[1:9])


def test_chain_table_at_explicit_point():
    header, rows = chain_table("m1c", [1.0])
    vals = rows[0][1:10]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    with pytest.raises(ValueError):
        chain_table("nope", [1.0])


def test_table_meanchain_pair(capsys):
    code, out, _ = run(capsys, "table", "--chain", "meanchain", "--pair", "1", "4")
    assert code == 0
    lines = out.strip().splitlines()
    row = [float(v) for v in lines[1].split(",")]
    vals = row[2:10]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    L = log_mean(MeanPoint(1.0, 4.0))
    assert L == pytest.approx(3.0 / math.log(4.0), rel=1e-14)
    assert vals[4] < L < vals[6]  # family members bracket the log mean


def test_special_commands(capsys):
    code, out, _ = run(capsys, "special", "--name", "si")
    assert code == 0 and "contained" in out
    code, out, _ = run(capsys, "special", "--name", "catalan", "--terms", "5000")
    assert code == 0 and "contained" in out
    code, out, _ = run(capsys, "special", "--name", "trigamma-half")
    assert code == 0
    code, out, _ = run(capsys, "special", "--name", "sh", "--t", "2.5")
    assert code == 0
    code, out, _ = run(capsys, "special", "--name", "sb", "--a", "1", "--b", "4")
    assert code == 0 and "ok" in out
    code, out, _ = run(capsys, "special", "--name", "log-mean", "--a", "1", "--b", "4")
    assert code == 0 and "contained" in out


def test_special_json(capsys):
    code, out, _ = run(capsys, "special", "--name", "si", "--format", "json")
    assert code == 0
    row = json.loads(out)[0]
    assert row["contained"] is True
    assert row["lo"] <= row["oracle"] <= row["hi"]
