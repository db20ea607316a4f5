"""
Testes da CLI: saída JSON e códigos de saída
"""
import json
import math

import pytest

from cli import EXIT_INVALID, EXIT_NUMERICAL, EXIT_OK, main
from config.settings import settings
from utils.json_parser import load_document

GAUSS = '{"catalog": "2F1", "params": [1, 1, 2], "vars": [0.5]}'
BINOMIAL = '{"catalog": "1F0", "params": [2], "vars": [0.5]}'
H3 = '{"catalog": "H3", "params": [0.7, 0.9, 1.3], "vars": [0.08, 0.15]}'


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_eval_shorthand(capsys):
    code, out = _run(capsys, ["eval", GAUSS])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["value"] == pytest.approx(2 * math.log(2.0), abs=1e-11)
    assert payload["converged"] is True


def test_eval_from_file(tmp_path, capsys):
    path = tmp_path / "gauss.json"
    path.write_text(GAUSS, encoding="utf-8")
    code, out = _run(capsys, ["eval", str(path), "--pretty"])
    assert code == EXIT_OK
    assert out.startswith("{\n")


def test_diff_emit_series_round_trips(capsys):
    code, out = _run(capsys, ["diff", BINOMIAL, "--param", "a", "--emit-series"])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["result"]["value"] == pytest.approx(4 * math.log(2.0), abs=1e-10)
    assert payload["member_count"] == 1
    assert all(len(m["variables"]) == 2 for m in payload["expansion"]["terms"])

    expansion = load_document(json.dumps(payload["expansion"]))
    assert len(expansion.terms) == 1

    code, out = _run(capsys, ["eval", json.dumps(payload["expansion"])])
    assert code == EXIT_OK
    assert json.loads(out)["value"] == pytest.approx(payload["result"]["value"], rel=1e-15)


def test_diff_second_order(capsys):
    code, out = _run(capsys, ["diff", BINOMIAL, "--param", "a", "--order", "2"])
    assert code == EXIT_OK
    assert json.loads(out)["result"]["value"] == pytest.approx(1.92181206550, abs=1e-8)


def test_eps(capsys):
    spec = '{"catalog": "2F1", "params": [1, 1, 2], "vars": [0.3]}'
    code, out = _run(capsys, ["eps", spec, "--order", "1", "--slope", "c=-1"])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert [c["k"] for c in payload["coefficients"]] == [0, 1]
    assert payload["coefficients"][1]["result"]["value"] > 0


def test_eps_bad_slope(capsys):
    code, _ = _run(capsys, ["eps", GAUSS, "--order", "1", "--slope", "c"])
    assert code == EXIT_INVALID
    code, _ = _run(capsys, ["eps", GAUSS, "--order", "1", "--slope", "z=1"])
    assert code == EXIT_INVALID


def test_catalog_list_and_show(capsys):
    code, out = _run(capsys, ["catalog", "list"])
    assert code == EXIT_OK
    names = [f["name"] for f in json.loads(out)["functions"]]
    assert {"2F1", "F4", "H3", "G3", "KdF", "FD"} <= set(names)

    code, out = _run(capsys, ["catalog", "show", "H3"])
    assert code == EXIT_OK
    assert json.loads(out)["factors"][0]["coeffs"] == [2, 1]

    code, out = _run(capsys, ["catalog", "show", "F1", "--vars", "0.3,0.2"])
    assert code == EXIT_OK
    assert [v["value"] for v in json.loads(out)["example"]["variables"]] == ["0.3", "0.2"]

    code, _ = _run(capsys, ["catalog", "show", "F9"])
    assert code == EXIT_INVALID


def test_catalog_list_by_family(capsys):
    code, out = _run(capsys, ["catalog", "list", "--family", "appell"])
    assert code == EXIT_OK
    names = [f["name"] for f in json.loads(out)["functions"]]
    assert names == ["F1", "F2", "F3", "F4"]

    code, out = _run(capsys, ["catalog", "list", "--family", "inexistente"])
    assert code == EXIT_OK
    assert json.loads(out)["functions"] == []


def test_verify(capsys):
    code, out = _run(capsys, ["verify", H3, "--param", "b"])
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["status"] == "pass"


def test_verify_not_converged_strict(capsys):
    outside = '{"catalog": "2F1", "params": [0.5, 1.5, 2.5], "vars": [1.5]}'
    code, out = _run(capsys, ["verify", outside, "--param", "a", "--max-order", "20"])
    assert code == EXIT_OK
    assert json.loads(out)["status"] == "not_converged"
    code, _ = _run(capsys, ["verify", outside, "--param", "a", "--max-order", "20", "--strict"])
    assert code == EXIT_NUMERICAL


def test_malformed_json_exit_code(capsys):
    code, out = _run(capsys, ["eval", '{"catalog": "2F1",'])
    assert code == EXIT_INVALID
    assert out == ""


def test_validation_failure_exit_code(capsys):
    code, out = _run(capsys, ["eval", '{"catalog": "2F1", "params": [1, 1, 0], "vars": [0.5]}'])
    assert code == EXIT_INVALID
    assert out == ""


def test_series_with_pole_violation_exit_code(capsys):
    doc = {
        "variables": [{"value": 0.5}],
        "parameters": [{"name": "c", "value": 0}],
        "factors": [{"param": "c", "coeffs": [1], "placement": "denominator"}],
    }
    code, _ = _run(capsys, ["eval", json.dumps(doc)])
    assert code == EXIT_INVALID


def test_pole_exit_code(capsys):
    code, _ = _run(capsys, ["diff", '{"catalog": "1F0", "params": [0], "vars": [0.5]}', "--param", "a"])
    assert code == EXIT_NUMERICAL


def test_unknown_parameter_exit_code(capsys):
    code, _ = _run(capsys, ["diff", GAUSS, "--param", "z"])
    assert code == EXIT_INVALID


def test_strict_not_converged(capsys):
    outside = '{"catalog": "2F1", "params": [1, 1, 2], "vars": [1.5]}'
    code, out = _run(capsys, ["eval", outside, "--max-order", "20"])
    assert code == EXIT_OK
    assert json.loads(out)["converged"] is False
    code, _ = _run(capsys, ["eval", outside, "--max-order", "20", "--strict"])
    assert code == EXIT_NUMERICAL


def test_invalid_options(capsys):
    code, _ = _run(capsys, ["eval", GAUSS, "--max-order", "3", "--min-shells", "8"])
    assert code == EXIT_INVALID


def test_max_order_from_settings(capsys, monkeypatch):
    monkeypatch.setattr(settings, "HORN_EVAL_MAX_ORDER", 10)
    code, out = _run(capsys, ["eval", GAUSS])
    assert code == EXIT_OK
    assert json.loads(out)["shells_used"] <= 11


def test_inconsistent_configuration(capsys, monkeypatch):
    monkeypatch.setattr(settings, "HORN_EVAL_MIN_SHELLS", 100)
    code, out = _run(capsys, ["catalog", "list"])
    assert code == EXIT_INVALID
    assert out == ""


def test_output_is_deterministic(capsys):
    argv = ["diff", H3, "--param", "a", "--emit-series"]
    _, first = _run(capsys, argv)
    _, second = _run(capsys, argv)
    assert first == second
