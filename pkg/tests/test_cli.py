import json
import subprocess
import sys

import pytest

from micz_verify.cli import SUITES, SuiteConfig, main, run_suite
from micz_verify.micz import ConfigError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_json_schema(capsys):
    code, out, _ = run(capsys, "--n", "2", "--mu", "0", "--suites", "reps", "--imax", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"config", "items", "summary"}
    assert data["config"]["suites"] == ["reps"] and data["config"]["mu"] == "0"
    for it in data["items"]:
        assert set(it) == {"suite", "id", "anchor", "strategy", "status", "witness", "residual", "millis"}
        assert it["strategy"] in ("exact-normal-form", "exact-pointwise", "float")
    dim = [it for it in data["items"] if it["id"] == "(a) dim level I=2"][0]
    assert dim["witness"]["dim"] == 14 and dim["status"] == "pass"


def test_falsifier_exit_zero(capsys):
    code, out, _ = run(capsys, "--n", "2", "--mu", "1", "--suites", "gauge", "--points", "3", "--format", "json")
    assert code == 0
    items = json.loads(out)["items"]
    assert {it["status"] for it in items if it["id"].startswith("lemma-g")} == {"expected-fail"}
    assert {it["status"] for it in items if not it["id"].startswith("lemma-g")} == {"pass"}


@pytest.mark.parametrize("argv", [
    ["--mu", "1", "--suites", "radial"],
    ["--mu", "1"],
    ["--n", "3", "--mu", "1", "--suites", "gauge"],
    ["--mu", "2/3"],
    ["--suites", "nonsense"],
    ["--mu", "1/2", "--suites", "full-scalar"],
    ["--n", "4", "--suites", "gauge"],
    ["--points", "0", "--suites", "reps"],
])
def test_config_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and "config error" in err and out == ""


def test_failure_exit_one(capsys, monkeypatch):
    from micz_verify import cli
    from micz_verify.report import NORMAL_FORM, VerificationReport

    def broken(n, seed=0):
        rep = VerificationReport()
        rep.add("abstract", "forced", "anchor", NORMAL_FORM, False, residual="boom")
        return rep

    monkeypatch.setattr(cli.reps, "abstract_algebra_checks", broken)
    code, _, err = run(capsys, "--suites", "abstract")
    assert code == 1 and "FAILED abstract/forced" in err


def test_text_and_json_list_the_same_items(capsys):
    argv = ["--n", "2", "--mu", "1/2", "--suites", "radial,reps", "--kmax", "2", "--lmax", "1", "--imax", "2"]
    code, text, _ = run(capsys, *argv)
    assert code == 0
    code, js, _ = run(capsys, *argv, "--format", "json")
    items = json.loads(js)["items"]
    lines = text.splitlines()
    assert len(lines) == len(items) + 1
    for line, it in zip(lines, items):
        assert it["id"] in line and it["suite"] in line and it["status"] in line


def test_json_is_deterministic(capsys):
    argv = ["--n", "2", "--mu", "1/2", "--suites", "gauge", "commutation", "--points", "2", "--format", "json"]
    _, a, _ = run(capsys, *argv, "--seed", "5")
    _, b, _ = run(capsys, *argv, "--seed", "5")
    assert a == b
    _, c, _ = run(capsys, *argv, "--seed", "6")
    assert c != a


def test_timings_flag(capsys):
    _, out, _ = run(capsys, "--suites", "abstract", "--format", "json", "--timings")
    assert any(it["millis"] is not None for it in json.loads(out)["items"])


def test_suite_resolution():
    assert SuiteConfig(mu="0").resolved_suites() == list(SUITES)
    assert "full-scalar" not in SuiteConfig(mu="1/2").resolved_suites()
    assert SuiteConfig(suites=("reps", "gauge")).resolved_suites() == ["gauge", "reps"]
    with pytest.raises(ConfigError):
        run_suite(SuiteConfig(mu="1", suites=("all",)))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "micz_verify", "--suites", "abstract"], capture_output=True,
                          text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip().splitlines()[-1].startswith("summary: pass=")
