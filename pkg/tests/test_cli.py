import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from derivgamma import EULER_GAMMA
from derivgamma.cli import main, parse_complex, parse_schedule
from mp_oracle import mp_digamma


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.mark.parametrize(
    "text, value",
    [("1", 1), ("-0.5", -0.5), ("2+1i", 2 + 1j), ("2-1i", 2 - 1j), ("1e-3+2.5e1i", 0.001 + 25j),
     ("3i", 3j), ("-i", -1j), ("2+i", 2 + 1j), ("0.5j", 0.5j), (".5", 0.5)],
)
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1+", "1,5", "2+1k", "1 2"])
def test_parse_complex_rejects(text):
    import argparse

    with pytest.raises(argparse.ArgumentTypeError):
        parse_complex(text)


def test_parse_schedule():
    assert parse_schedule("1..5") == [1, 2, 3, 4, 5]
    assert parse_schedule("1..10:3") == [1, 4, 7, 10]
    assert parse_schedule("10,100,1000") == [10, 100, 1000]
    assert parse_schedule("log:10:1e4:4") == [10, 100, 1000, 10000]
    assert parse_schedule("1..3,3,7") == [1, 2, 3, 7]


def test_eval_series_plain():
    code, out = run("eval", "--z", "1", "--method", "series")
    assert code == 0
    assert "value=(-0.5772156649" in out


def test_eval_f32_compare_json():
    code, out = run("eval", "--z", "0.5", "--method", "f32", "--tol", "1e-6", "--compare", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["value"]["re"] == pytest.approx(-1.9635100, abs=1e-7)
    assert rec["abs_err_vs_oracle"] <= 1e-5


def test_eval_json_record_fields():
    code, out = run("eval", "--z", "2+1i", "--method", "series", "--format", "json")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    rec = json.loads(lines[0])
    assert set(rec) == {"method", "z", "order", "value", "terms_used", "tail_estimate"}
    assert rec["z"] == {"re": 2.0, "im": 1.0}
    assert set(rec["value"]) == {"re", "im"}
    assert complex(rec["value"]["re"], rec["value"]["im"]) == pytest.approx(mp_digamma(2 + 1j), abs=1e-10)
    _, out = run("eval", "--z", "2+1i", "--format", "json", "--compare")
    assert set(json.loads(out)) == {"method", "z", "order", "value", "terms_used", "tail_estimate", "abs_err_vs_oracle"}


@pytest.mark.parametrize("method", ["series", "eq11", "f32", "limit", "oracle"])
def test_every_method_csv(method):
    code, out = run("eval", "--z", "1.5", "--z", "3.25-0.5i", "--method", method, "--format", "csv", "--compare")
    assert code == 0
    recs = rows(out)
    assert [r["method"] for r in recs] == [method, method]
    for r in recs:
        err = float(r["abs_err_vs_oracle"])
        if method == "eq11":
            # fixed 150-term truncation: error sits at the size of the tail estimate
            assert err <= 1.5 * float(r["tail_estimate"])
        else:
            assert err <= (1e-5 if method == "limit" else 1e-9)


def test_poly_command():
    code, out = run("poly", "--z", "1", "--order", "2", "--compare", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["order"] == 2 and rec["abs_err_vs_oracle"] <= 1e-4
    assert run("eval", "--z", "1", "--order", "1", "--format", "json")[0] == 0


def test_table_hump_at_ten():
    code, out = run("table", "--z", "10", "--m", "1..20")
    assert code == 0
    mags = [float(r["term_mag"]) for r in rows(out)]
    peak = int(np.argmax(mags)) + 1
    assert peak < 10
    assert all(b <= a for a, b in zip(mags[9:], mags[10:]))


def test_table_terminating_series_exact():
    code, out = run("table", "--z", "2", "--m", "1..5")
    assert code == 0
    assert all(float(r["abs_err_vs_oracle"]) <= 1e-13 for r in rows(out))


def test_table_half_slope():
    code, out = run("table", "--z", "0.5", "--m", "10,100,1000")
    assert code == 0
    recs = rows(out)
    m = np.array([float(r["m"]) for r in recs])
    err = np.array([float(r["abs_err_vs_oracle"]) for r in recs])
    slope = np.polyfit(np.log(m), np.log(err), 1)[0]
    assert abs(slope + 0.5) <= 0.15


def test_table_columns_and_blank_tail_before_guard():
    _, out = run("table", "--z", "3.5", "--m", "1..8")
    recs = rows(out)
    assert list(recs[0]) == ["m", "partial_sum_re", "partial_sum_im", "term_mag", "tail_estimate", "abs_err_vs_oracle"]
    assert [r["tail_estimate"] == "" for r in recs] == [True] * 5 + [False] * 3


def test_limit_demo_first_order():
    code, out = run("limit-demo", "--z", "1", "--h0", "0.01", "--steps", "6")
    assert code == 0
    errs = [float(r["abs_err_vs_oracle"]) for r in rows(out)]
    assert len(errs) == 6
    for a, b in zip(errs, errs[1:]):
        assert 0.4 <= b / a <= 0.6


def test_limit_demo_z2_final_error():
    # quotient error is h (psi'(2) + psi(2)^2)/2 ~ 0.412 h; the last row has h = 0.01/32
    _, out = run("limit-demo", "--z", "2", "--h0", "0.01", "--steps", "6")
    last = rows(out)[-1]
    h = float(last["h"])
    assert h == 0.01 / 32
    predicted = h * ((math.pi**2 / 6 - 1) + (1 - EULER_GAMMA) ** 2) / 2
    assert float(last["abs_err_vs_oracle"]) == pytest.approx(predicted, rel=2e-3)


def test_limit_demo_pole_exit_3():
    assert run("limit-demo", "--z", "0", "--steps", "3")[0] == 3
    assert run("limit-demo", "--z=-2", "--steps", "3")[0] == 3


def test_verify_only_and_json():
    code, out = run("verify", "--only", "beta", "--format", "json")
    assert code == 0
    checks = [json.loads(line) for line in out.strip().splitlines()]
    assert checks and all(c["name"].startswith("beta.") for c in checks)
    assert all(set(c) == {"name", "residual", "tolerance", "passed"} for c in checks)


def test_verify_failure_exit_1(monkeypatch):
    from derivgamma import verification

    monkeypatch.setitem(verification.GROUPS, "beta", lambda: iter([("forced", 1.0, 0.5)]))
    code, out = run("verify", "--only", "beta")
    assert code == 1
    assert "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["eval"],
        ["eval", "--z", "abc"],
        ["eval", "--z", "1", "--method", "nope"],
        ["eval", "--z", "1", "--max-terms", "0"],
        ["eval", "--z", "1", "--order", "9"],
        ["eval", "--z", "1", "--order", "1", "--method", "f32"],
        ["poly", "--z", "1", "--order", "0"],
        ["table", "--z", "1", "--m", "5..1"],
        ["verify", "--only", "nothing"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "--z", "0"],
        ["eval", "--z=-1.5+2i", "--method", "f32"],
        ["eval", "--z", "1", "--method", "limit", "--h0", "0.5"],
        ["eval", "--z", "2000.5", "--no-reduction"],
        ["poly", "--z=-3", "--order", "2"],
    ],
)
def test_domain_errors_exit_3(argv, capsys):
    assert run(*argv)[0] == 3
    assert "domain error" in capsys.readouterr().err


def test_env_max_terms(monkeypatch):
    monkeypatch.setenv("DERIVGAMMA_MAX_TERMS", "50")
    _, out = run("eval", "--z", "0.5", "--format", "json")
    assert json.loads(out)["terms_used"] == 50
    _, out = run("eval", "--z", "0.5", "--format", "json", "--max-terms", "70")
    assert json.loads(out)["terms_used"] == 70
    monkeypatch.setenv("DERIVGAMMA_MAX_TERMS", "lots")
    assert run("eval", "--z", "0.5")[0] == 2


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "derivgamma", *argv], capture_output=True)


@pytest.mark.parametrize(
    "argv",
    [
        ("table", "--z", "0.5", "--m", "log:1:1e5:11"),
        ("eval", "--z", "0.5", "--z", "2+1i", "--method", "f32", "--format", "csv", "--compare"),
        ("eval", "--z", "3.3-1i", "--format", "json", "--compare"),
        ("limit-demo", "--z", "3.3", "--steps", "5", "--format", "json"),
    ],
)
def test_outputs_byte_deterministic(argv):
    a, b = _cli(*argv), _cli(*argv)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout


def test_csv_is_rfc4180_style():
    out = _cli("table", "--z", "1.5", "--m", "1..3").stdout
    assert out.count(b"\r\n") == 4  # header plus three rows
    assert b";" not in out
    text = out.decode()
    assert all("," in line for line in text.splitlines())
