import json

import pytest

from fockcalc.cli import main
from fockcalc.suites import (
    SUITES,
    CaseResult,
    default_workers,
    report_to_json,
    run_suite,
)


def test_every_named_suite_passes_at_defaults():
    for name in SUITES:
        rep = run_suite(name)
        assert rep.passed, [c for c in rep.cases if not c.passed]
        assert rep.suite == name
        assert all(c.residual >= 0.0 for c in rep.cases)


def test_all_concatenates_with_prefixes():
    rep = run_suite("all")
    assert rep.passed
    names = [c.name for c in rep.cases]
    assert any(n.startswith("brown-halmos/") for n in names)
    assert any(n.startswith("lemma-l1/") for n in names)
    total = sum(len(run_suite(s).cases) for s in SUITES)
    assert len(rep.cases) == total


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_resource_guards():
    with pytest.raises(ValueError):
        run_suite("prop-l3", n=4)
    with pytest.raises(ValueError):
        run_suite("prop-l3", degree=11)
    with pytest.raises(ValueError):
        run_suite("prop-l3", tol=-1.0)


def test_cor_c4_keeps_failing_case_as_pass():
    rep = run_suite("cor-c4", n=1)
    assert rep.passed
    case = next(c for c in rep.cases if c.name.startswith("one-dim-fixed-point-fails"))
    assert case.residual >= 0.1
    assert case.passed


def test_reports_are_deterministic():
    a = run_suite("all", n=2, degree=5, seed=123, tol=1e-9)
    b = run_suite("all", n=2, degree=5, seed=123, tol=1e-9)
    ja = json.loads(report_to_json(a))
    jb = json.loads(report_to_json(b))
    ja["duration_ms"] = jb["duration_ms"] = 0
    assert json.dumps(ja, sort_keys=True) == json.dumps(jb, sort_keys=True)


def test_seed_changes_cases():
    a = run_suite("zero-product", seed=1)
    b = run_suite("zero-product", seed=2)
    assert [c.residual for c in a.cases] != [c.residual for c in b.cases]


def test_workers_do_not_change_report():
    a = run_suite("all", workers=1)
    b = run_suite("all", workers=4)
    assert [(c.name, c.residual) for c in a.cases] == [
        (c.name, c.residual) for c in b.cases
    ]


def test_report_json_shape():
    rep = run_suite("lemma-l1")
    data = json.loads(report_to_json(rep))
    assert set(data) == {"suite", "n", "degree", "seed", "tol", "cases", "pass", "duration_ms"}
    assert data["pass"] is True
    for case in data["cases"]:
        assert set(case) == {"name", "residual", "tol", "pass"}
    # numbers survive the round trip losslessly at 17 significant digits
    assert data["cases"][0]["residual"] == rep.cases[0].residual


# -- command line ----------------------------------------------------------------


def test_cli_parse_and_compute(capsys):
    assert main(["parse", "-s", "z1 + z1", "--n", "1"]) == 0
    assert capsys.readouterr().out.strip() == "2*z1"

    assert main(["sharp", "-s", "z1", "-s", "z1", "--n", "1"]) == 0
    assert capsys.readouterr().out.strip() == "-1 + z1*conj(z1)"

    assert main(["berezin", "-s", "z1*conj(z1)", "--n", "1", "--at", "0.5+0.5i"]) == 0
    out = capsys.readouterr().out
    assert "1 + z1*conj(z1)" in out and "1.5" in out

    assert main(["moment", "-s", "z1^2*conj(z1)^2", "--n", "1"]) == 0
    assert capsys.readouterr().out.strip() == "2"

    assert main(["toeplitz-apply", "-s", "conj(z1)", "-s", "z1^3", "--n", "1"]) == 0
    assert capsys.readouterr().out.strip() == "3*z1^2"


def test_cli_json_payloads(capsys):
    assert main(["berezin", "-s", "z1*conj(z1)", "--n", "1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["symbol"] == "1 + z1*conj(z1)"

    assert main(["oracle", "-s", "z1*conj(z1)", "--n", "1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert float(data["abs_difference"]) < 1e-6


def test_cli_exit_codes(capsys):
    assert main(["parse", "-s", "exp(z1^2)", "--n", "1"]) == 2
    err = capsys.readouterr().err
    assert "position" in err

    assert main(["verify", "--suite", "lemma-l1"]) == 0
    capsys.readouterr()

    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_cli_verify_exit_one_on_case_failure(capsys, monkeypatch):
    monkeypatch.setitem(
        SUITES, "lemma-l1", lambda cfg: [CaseResult("stub-failure", 1.0, 0.5, False)]
    )
    assert main(["verify", "--suite", "lemma-l1"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_threads_env_caps_workers(monkeypatch):
    monkeypatch.setenv("FOCKCALC_THREADS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("FOCKCALC_THREADS", "not-a-number")
    assert default_workers() >= 1
    monkeypatch.delenv("FOCKCALC_THREADS")
    assert default_workers() >= 1


def test_cli_verify_json_deterministic(capsys, tmp_path):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert main(["verify", "--suite", "moments-oracle", "--json", "--out", str(out1)]) == 0
    capsys.readouterr()
    assert main(["verify", "--suite", "moments-oracle", "--json", "--out", str(out2)]) == 0
    capsys.readouterr()
    a = json.loads(out1.read_text())
    b = json.loads(out2.read_text())
    a["duration_ms"] = b["duration_ms"] = 0
    assert json.dumps(a) == json.dumps(b)
