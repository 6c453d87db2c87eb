"""Tests for the heron-pairs command line."""

import io
import json

import pytest

from heronpairs.cli import build_parser, parse_rational, run


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def _sides(cert):
    return {k: cert[k] for k in ("a", "b", "c")}


def test_parse_rational_reexported():
    assert str(parse_rational("-4/8")) == "-1/2"


def test_family_rr_json():
    code, text = _run("family", "rr", "--t1", "9/2", "--t2", "7/6")
    assert code == 0
    data = json.loads(text)
    assert data["kind"] == "common_rr"
    assert _sides(data["first"]) == {"a": "2055", "b": "1105", "c": "3002"}
    assert _sides(data["second"]) == {"a": "4795", "b": "4845", "c": "482"}
    assert data["shared_circumradius"] == "58225/24"


def test_family_output_is_stable():
    assert _run("family", "ra", "--t", "2") == _run("family", "ra", "--t", "2")


def test_family_right_flag():
    code, text = _run("family", "rr", "--right", "--t1", "4")
    assert code == 0
    assert _sides(json.loads(text)["second"]) == {"a": "85", "b": "77", "c": "36"}


def test_family_csv():
    code, text = _run("--format", "csv", "family", "rr", "--right", "--t1", "4")
    assert code == 0
    assert text.splitlines() == [
        "kind,a1,b1,c1,a2,b2,c2,circumradius,other",
        "common_rr,40,68,84,85,77,36,85/2,14",
    ]


def test_malformed_rational_is_usage_error(capsys):
    code, text = _run("family", "rr", "--t1", "2", "--t2", "...")
    assert code == 2
    assert text == ""
    assert "--t2" in capsys.readouterr().err


def test_missing_parameter_is_usage_error(capsys):
    code, _ = _run("family", "rr", "--t1", "2")
    assert code == 2
    assert "--t2" in capsys.readouterr().err


def test_unknown_kind_is_usage_error():
    assert _run("family", "rq", "--t1", "2")[0] == 2


def test_degenerate_parameter_exit_code(capsys):
    code, text = _run("family", "rr", "--right", "--t1", "2")
    assert code == 1
    assert text == ""
    assert "factor" in capsys.readouterr().err


def test_solve_commands():
    code, text = _run("solve", "rr", "--t1", "4", "--t2", "1", "--m", "1")
    assert code == 0
    assert _sides(json.loads(text)["first"]) == {"a": "40", "b": "68", "c": "84"}
    code, text = _run("solve", "ra", "--t", "2")
    assert code == 0
    assert json.loads(text)["shared_other"] == "12317028393582"


def test_descend_command():
    code, text = _run("descend", "rr", "--t1", "4", "--t2", "1", "--steps", "2")
    assert code == 0
    data = json.loads(text)
    assert [d["point"] for d in data] == [
        {"y1": "2", "y2": "11/7"},
        {"y1": "1737/1208", "y2": "10671/6191"},
    ]


def test_verify_family_output(tmp_path):
    path = tmp_path / "pair.json"
    code, text = _run("family", "rr", "--t1", "9/2", "--t2", "7/6")
    path.write_text(text)
    code, text = _run("verify", str(path))
    assert code == 0
    reports = json.loads(text)
    assert reports[0]["ok"] is True


def test_verify_tampered_pair(tmp_path):
    _, text = _run("family", "rr", "--right", "--t1", "4")
    data = json.loads(text)
    data["shared_other"] = "15"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, text = _run("verify", str(path))
    assert code == 1
    assert json.loads(text)[0]["ok"] is False


def test_verify_reports_sides_that_are_not_a_triangle(tmp_path):
    _, good = _run("family", "rr", "--right", "--t1", "4")
    bad = json.loads(good)
    bad["first"]["c"] = "200"
    path = tmp_path / "pairs.jsonl"
    path.write_text(good.replace("\n", "") + "\n" + json.dumps(bad) + "\n")
    code, text = _run("verify", str(path))
    assert code == 1
    reports = json.loads(text)
    assert [r["ok"] for r in reports] == [True, False]
    checks = {c["name"]: c["passed"] for c in reports[1]["checks"]}
    assert checks == {"first_triangle_valid": False, "second_triangle_valid": True}


def test_verify_missing_file(tmp_path):
    assert _run("verify", str(tmp_path / "missing.json"))[0] == 2


def test_search_jsonl_contains_published_pair():
    code, text = _run("search", "--max-side", "85", "--kind", "rr", "--format", "jsonl")
    assert code == 0
    keys = [json.loads(line)["key"] for line in text.splitlines()]
    assert ["85/2", "14"] in keys


def test_search_output_under_output_dir(monkeypatch, tmp_path):
    monkeypatch.setenv("HERONPAIRS_OUTPUT_DIR", str(tmp_path))
    code, text = _run("search", "--max-side", "20", "--output", "res/pairs.json")
    assert code == 0
    assert text == ""
    assert isinstance(json.loads((tmp_path / "res" / "pairs.json").read_text()), list)


def test_search_verify_round(tmp_path):
    out = tmp_path / "search.jsonl"
    code, _ = _run("search", "--max-side", "60", "--format", "jsonl", "--output", str(out))
    assert code == 0
    code, _ = _run("verify", str(out))
    assert code == 0


def test_help_exits_zero(capsys):
    assert _run("--help")[0] == 0
    assert "heron-pairs" in capsys.readouterr().out


def test_parser_global_options():
    args = build_parser().parse_args(["--log-level", "debug", "search", "--kind", "ra"])
    assert args.log_level == "DEBUG"
    assert args.kinds == ["ra"]


@pytest.mark.parametrize("argv", [["search", "--max-side", "2"], ["descend", "ra", "--t", "2", "--steps", "-1"]])
def test_invalid_values_are_usage_errors(argv):
    assert _run(*argv)[0] == 2
