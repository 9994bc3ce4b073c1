import io
import json
import subprocess
import sys

import jsonschema
import pytest

from gentle_derived.cli import flatten, run
from gentle_derived.dsl import EXAMPLE_GENTLE_TEXT
from gentle_derived.schemas import SCHEMAS


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--json")
    data = json.loads(text)
    jsonschema.validate(data, SCHEMAS[argv[0]])
    return code, data


@pytest.fixture
def example_file(tmp_path):
    p = tmp_path / "ex.gq"
    p.write_text(EXAMPLE_GENTLE_TEXT)
    return str(p)


# these print a short human-readable answer instead of the flattened record
TERSE_TEXT = {"normal-form", "equiv", "hom"}

JSON_CASES = [
    ("analyze", "--gamma", "1", "2", "3"),
    ("analyze", "--builtin", "Lambda(2,2,1,0)"),
    ("normal-form", "--lambda", "1", "2", "0", "1"),
    ("normal-form", "--gamma-prime", "3", "-1"),
    ("equiv", "Gamma(1,2,3)", "Gamma(2,1,-3)"),
    ("summary", "--gamma", "2", "1", "1"),
    ("summary", "--gamma-prime", "2", "-2"),
    ("hom", "--gamma", "2", "1", "2", "--x", "M(0;4,1)", "--y", "M(1;4,1)", "--shifts", "-2..2"),
    ("verify", "--gamma", "1", "2", "-1", "--samples", "5"),
    ("check-conjecture", "--lambda", "1", "3", "0", "1"),
]


@pytest.mark.parametrize("argv", JSON_CASES, ids=[" ".join(c[:2]) for c in JSON_CASES])
def test_json_output_matches_schema_and_text(argv):
    code, data = call_json(*argv)
    assert code == 0
    if argv[0] not in TERSE_TEXT:
        code_t, text = call(*argv)
        assert code_t == 0
        assert text.splitlines() == flatten(data)


def test_normal_form_text():
    assert call("normal-form", "--lambda", "1", "2", "0", "1") == (0, "Gamma(1,1,0)\n")
    assert call("normal-form", "--builtin", "Lambda(1,2,0,0)") == (0, "Gamma(1,1,1)\n")


def test_normal_form_unsupported(example_file):
    code, data = call_json("normal-form", example_file)
    assert code == 1
    assert data["supported"] is False and data["normal_form"] is None
    assert data["report"]["gentle"]["is_gentle"] is True


def test_analyze_file_and_stdin(example_file, monkeypatch):
    code, data = call_json("analyze", example_file)
    assert code == 0 and data["gentle"]["is_gentle"]
    monkeypatch.setattr(sys, "stdin", io.StringIO(EXAMPLE_GENTLE_TEXT))
    code, data2 = call_json("analyze", "-")
    assert data2 == data


def test_equiv():
    assert call("equiv", "Gamma(1,2,3)", "Gamma(2,1,-3)") == (0, "derived-equivalent: true\n")
    code, data = call_json("equiv", "Gamma(1,1,1)", "GammaPrime(2,1)")
    assert data["derived_equivalent"] is False


def test_hom_table():
    code, text = call("hom", "--gamma", "1", "1", "1", "--x", "M(0;1,0)", "--y", "M(0;1,0)", "--shifts", "0..1")
    lines = text.splitlines()
    assert code == 0 and lines[1] == "n\tdim"
    assert len(lines) == 4


def test_ar_window(tmp_path):
    dot = tmp_path / "w.dot"
    code, text = call("ar-window", "--gamma", "2", "1", "2", "--center", "M(0;4,1)", "--radius", "2", "--dot", str(dot))
    assert code == 0 and "family X1" in text
    assert dot.read_text().startswith("digraph")
    code, text = call("ar-window", "--gamma", "2", "1", "2", "--center", "M(0;4,1)", "--json", "-")
    data = json.loads(text)
    jsonschema.validate(data, SCHEMAS["ar-window"])


def test_verify_is_deterministic():
    a = call_json("verify", "--gamma", "2", "1", "1", "--samples", "6", "--seed", "3")
    b = call_json("verify", "--gamma", "2", "1", "1", "--samples", "6", "--seed", "3")
    assert a == b
    assert a[0] == 0 and a[1]["ok"]


@pytest.mark.parametrize(
    "argv,code",
    [
        (("analyze",), 2),
        (("analyze", "--gamma", "1", "1", "1", "--builtin", "Gamma(1,1,1)"), 2),
        (("analyze", "/nonexistent/file.gq"), 2),
        (("normal-form", "--gamma", "0", "1", "1"), 1),
        (("summary", "--gamma", "1", "1", "0"), 1),
        (("hom", "--gamma", "1", "1", "1", "--x", "bogus", "--y", "M(0;1,0)"), 2),
        (("hom", "--gamma", "1", "1", "1", "--x", "M(0;1,0)", "--y", "M(0;1,0)", "--shifts", "a..b"), 2),
        (("nonsense",), 2),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert call(*argv)[0] == code
    assert capsys.readouterr().err


def test_parse_errors_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.gq"
    p.write_text("vertices: 1\narrow a: 1 -> 2\n")
    assert call("analyze", str(p))[0] == 2
    assert "UnknownVertex" in capsys.readouterr().err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "gentle_derived", "normal-form", "--gamma", "2", "1", "-3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0
    assert res.stdout.strip() == "Gamma(1,2,3)"
