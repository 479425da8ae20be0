import json

import pytest

from quadlat.cli import main
from quadlat.suites import SuiteConfig, run_suite, suite_names


def test_suite_registry():
    names = suite_names()
    assert len(names) == 12
    assert "slice-counts" in names and "infra" in names
    with pytest.raises(KeyError):
        run_suite("unknown-suite")


def test_reports_are_deterministic():
    a = run_suite("slice-counts").to_json()
    b = run_suite("slice-counts").to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    cfg = SuiteConfig.make(primes=(2,), infra_triples=50, infra_roundtrip=50,
                           infra_sum_pairs=20)
    a = run_suite("infra", cfg).to_json()
    b = run_suite("infra", cfg).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["schema"] == "1"
    assert "wall_time" not in json.dumps(a)


def run_cli(*argv):
    return main(list(argv))


def test_cli_normalize(capsys):
    assert run_cli("normalize", "1321") == 0
    out = capsys.readouterr().out
    assert out.strip() == "H11 r=1 s=0 t=1 (class size 6)"
    assert run_cli("normalize", "11") == 2
    assert "error:" in capsys.readouterr().err


def test_cli_closure(capsys):
    assert run_cli("closure", "1321") == 0
    lines = capsys.readouterr().out.split()
    assert sorted(lines) == ["1231", "1241", "1321", "1341", "1421", "1431"]


def test_cli_slice(capsys):
    assert run_cli("slice", "4") == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("10 classes")


def test_cli_build(capsys):
    assert run_cli("build", "e", "--type", "F21", "--t", "1") == 0
    assert capsys.readouterr().out.strip() == "(* e2 (+ e3 e4))"
    assert run_cli("build", "e", "--seq", "121") == 0
    assert capsys.readouterr().out.strip() == "(* e1 (+ e3 (* e4 (+ e1 e2))))"
    assert run_cli("build", "gp-e", "--seq", "21") == 0
    assert capsys.readouterr().out.strip() == "(* e2 (+ e3 e4))"
    assert run_cli("build", "cumulative", "--z", "f0", "--n", "1") == 0
    assert capsys.readouterr().out.strip() == "I"
    assert run_cli("build", "unified", "--z", "e", "--end", "1", "--t", "1") == 0
    assert capsys.readouterr().out.strip() == "(* e1 (+ e3 e4))"
    assert run_cli("build", "f", "--seq", "21") == 0
    assert capsys.readouterr().out.strip() == (
        "(* e2 (+ e1 e4 (* e3 (+ e1 e2))) (+ e3 e4))"
    )
    assert run_cli("build", "f", "--type", "G11") == 0
    assert capsys.readouterr().out.strip() == "(* e1 (+ e2 e3 e4))"
    assert run_cli("build", "gp-f", "--seq", "21") == 0
    assert capsys.readouterr().out.strip().startswith("(* e2 (+")
    assert run_cli("build", "inv-cumulative", "--z", "f0", "--n", "2") == 0
    out = capsys.readouterr().out.strip()
    assert out.startswith("(+") and out.count("(*") >= 12
    assert run_cli("build", "cumulative", "--start", "2", "--n", "2") == 0
    assert capsys.readouterr().out.strip() == (
        "(+ (* e1 (+ e3 e4)) (* e3 (+ e1 e4)) (* e4 (+ e1 e3)))"
    )
    with pytest.raises(SystemExit):
        run_cli("build", "e", "--type", "F21")  # t = 0 is out of range
    with pytest.raises(SystemExit):
        run_cli("build", "e", "--type", "X99")
    with pytest.raises(SystemExit):
        run_cli("build", "e")  # neither --seq nor --type


def test_cli_gamma_and_eval(tmp_path, capsys):
    term = tmp_path / "term.sexp"
    term.write_text("(* e2 (+ e3 e4))")
    assert run_cli("gamma", "12", str(term)) == 0
    out = capsys.readouterr().out.strip()
    assert out.startswith("(*")
    rep = tmp_path / "rep.json"
    rep.write_text(json.dumps({
        "p": 3, "dim0": 2,
        "Y": [[[1, 0]], [[0, 1]], [[1, 1]], [[1, 2]]],
    }))
    assert run_cli("eval", str(term), str(rep)) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "dim 1 of 2 over GF(3)"
    assert out.splitlines()[1] == "0 1"


def test_cli_eval_parse_error(tmp_path, capsys):
    term = tmp_path / "bad.sexp"
    term.write_text("(+ e1")
    rep = tmp_path / "rep.json"
    rep.write_text(json.dumps({"p": 2, "dim0": 1, "Y": [[], [], [], []]}))
    assert run_cli("eval", str(term), str(rep)) == 2
    assert "position" in capsys.readouterr().err


def test_cli_cube_json(capsys):
    assert run_cli("cube", "1", "--format", "json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == "1" and payload["n"] == 1
    assert len(payload["rows"]) == 16
    assert payload["rows"][0]["label"] == "h1+h2+h3+h4"
    assert payload["rows"][15]["cumulative"].startswith("(+")


def test_cli_verify(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code = run_cli("verify", "slice-counts", "--primes", "2,3", "--json", str(out_path))
    assert code == 0
    text = capsys.readouterr().out
    assert "[PASS] slice-counts" in text
    payload = json.loads(out_path.read_text())
    assert payload["schema"] == "1"
    assert payload["suites"][0]["suite"] == "slice-counts"
    assert payload["suites"][0]["summary"]["failed"] == 0
    with pytest.raises(SystemExit):
        run_cli("verify", "no-such-suite")
