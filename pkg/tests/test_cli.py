import json
import subprocess
import sys

import jsonschema
import pytest

from sgbassian.cli import main, run
from sgbassian.report import Report, load_schema

SCHEMA = load_schema()

COMMANDS = [
    (["classify", "--property", "sgb", "Z(3^2)^w"], 0, "YES"),
    (["classify", "--property", "ess", "Z(2)+Z(2^3)"], 1, "NO"),
    (["classify", "--property", "sgb", "--mode", "strict", "Z(2^2)^w + Z(3^5)"], 3, "UNDECIDED"),
    (["classify", "--property", "sgb", "--mode", "extended", "Z(2^2)^w + Z(3^5)"], 0, "YES"),
    (["classify", "Z(6^2)"], 2, "error"),
    (["invariants", "Z(2)^w + Z(2^4) + Q"], 0, "ok"),
    (["verify", "thm6", "--p", "2", "--max-weight", "1"], 0, "pass"),
    (["verify", "claim", "--p", "2", "--max-weight", "10"], 0, "pass"),
    (["verify", "thm6", "--p", "6"], 2, "error"),
    (["verify", "claim", "--p", "2", "--max-weight", "0"], 2, "error"),
    (["verify", "example2", "--seed", "5", "--trials", "20"], 0, "pass"),
    (["oracle", "ess-summand", "--group", "2:[1,3]", "--gens", "(1,2)"], 1, "none"),
    (["oracle", "ess-summand", "--group", "2:[1,3]", "--gens", "(1,0)"], 0, "found"),
    (["oracle", "pure", "--group", "2:[2]", "--gens", "(2)"], 1, "NO"),
    (["oracle", "essential", "--group", "2:[2,3]", "--gens", "(2,0); (0,4)"], 0, "YES"),
    (["oracle", "complement", "--group", "2:[1,3]", "--gens", "(1,0)"], 0, "found"),
    (["oracle", "max-extension", "--group", "2:[1,3]", "--gens", "(1,2)"], 0, "found"),
    (["oracle", "pure", "--group", "2:[x]"], 2, "error"),
    (["witness", "two-gap", "--group", "2:[1,3]"], 0, "found"),
    (["witness", "two-gap", "--group", "2:[2,2]"], 1, "none"),
    (["demo", "simplify-a", "--p", "2", "--n", "1", "--m", "3", "--depth", "3"], 0, "pass"),
    (["demo", "simplify-a", "--p", "2", "--n", "1", "--m", "2"], 2, "error"),
    (["demo", "simplify-b", "--p", "2", "--n", "1", "--depth", "2"], 0, "pass"),
    (["demo", "homocyclic-hull", "--group", "2:[3,3,3]", "--gens", "(2,4,0)"], 0, "pass"),
    (["rules"], 0, "ok"),
]


@pytest.mark.parametrize("argv,code,result", COMMANDS, ids=[" ".join(c[0][:2]) for c in COMMANDS])
def test_exit_codes_and_schema(argv, code, result, capsys):
    assert main(argv + ["--format", "json"]) == code
    out = capsys.readouterr().out
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    assert data["result"] == result
    assert Report.from_json(out).to_dict() == data


@pytest.mark.parametrize("argv,code,result", COMMANDS[:8], ids=[" ".join(c[0][:2]) for c in COMMANDS[:8]])
def test_text_format(argv, code, result, capsys):
    assert main(argv) == code
    captured = capsys.readouterr()
    if result == "error":
        assert captured.err.startswith("error:")
    else:
        assert captured.out.splitlines()[0].endswith(result)


def test_classify_trail_in_json(capsys):
    main(["classify", "--property", "sgb", "--format", "json", "Z(2^2)^w + Z(3^5)"])
    data = json.loads(capsys.readouterr().out)
    assert [t["rule_id"] for t in data["trail"]] == ["SGB-P-HOMOCYCLIC", "SGB-P-FINRANK", "GAP-SGB-MULTIPRIME"]
    assert data["verdict"]["rule_id"] == "GAP-SGB-MULTIPRIME"


def test_witness_payload(capsys):
    main(["witness", "two-gap", "--group", "2:[1,3]", "--format", "json"])
    data = json.loads(capsys.readouterr().out)["data"]
    assert data["element"] == "(1,2)"
    assert data["height_sequence"] == "(0, 2, inf)"
    assert data["gaps"] == [0, 1]


def test_deterministic_modulo_timestamp():
    argv = ["verify", "summand-lemma", "--seed", "7", "--trials", "15"]
    a, _ = run(argv)
    b, _ = run(argv)
    assert a.to_json(deterministic=True) == b.to_json(deterministic=True)
    assert a.seed == 7


def test_report_rejects_inconsistent_counterexamples():
    with pytest.raises(ValueError):
        Report(command="x", inputs={}, result="pass", counterexamples=[{"a": 1}])
    with pytest.raises(ValueError):
        Report(command="x", inputs={}, result="fail")


def test_failing_report_validates():
    r = Report(command="verify x", inputs={}, result="fail", counterexamples=[{"group": "2:[1]"}])
    jsonschema.validate(json.loads(r.to_json()), SCHEMA)
    with pytest.raises(jsonschema.ValidationError):
        bad = json.loads(r.to_json())
        bad["counterexamples"] = []
        jsonschema.validate(bad, SCHEMA)


def test_env_guard_is_an_input_error(monkeypatch, capsys):
    monkeypatch.setenv("SGB_MAX_ORDER", "8")
    assert main(["oracle", "pure", "--group", "2:[1,3]"]) == 2
    assert "guard" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sgbassian", "classify", "Z(3^2)^w", "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"] == "YES"
