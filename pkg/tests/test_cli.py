import json
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from svquant.cli import main
from svquant.enveloping import UEAElement, normalize
from svquant.lie import grid_generators
from svquant.parsing import ParseError, parse_element, parse_generator

REPORT_SCHEMA = {
    "type": "object",
    "required": ["config", "checks", "summary", "runtime_seconds"],
    "properties": {
        "config": {"type": "object", "required": ["suites", "n0_values", "order", "index_range", "seed"]},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["suite", "name", "params", "status"],
                "properties": {"status": {"enum": ["pass", "fail"]}},
            },
        },
        "summary": {
            "type": "object",
            "required": ["passed", "failed"],
            "properties": {"passed": {"type": "integer"}, "failed": {"type": "integer"}},
        },
        "runtime_seconds": {"type": "number"},
    },
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_json(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "theorem1", "--n0", "1", "--order", "4",
                       "--format", "json", "--output", str(target))
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, REPORT_SCHEMA)
    assert data["summary"]["failed"] == 0 and data["summary"]["passed"] > 0
    assert json.loads(target.read_text()) == data
    # round trip: the serialized form parses back to the same structure
    assert json.loads(json.dumps(data)) == data


def test_verify_text_and_json_agree(capsys):
    args = ("verify", "--suite", "twist,bialgebra", "--n0", "1", "--order", "2", "--range", "1")
    _, text, _ = run(capsys, *args, "--format", "text")
    _, js, _ = run(capsys, *args, "--format", "json")
    data = json.loads(js)
    lines = text.strip().splitlines()
    assert len(lines) - 1 == len(data["checks"])
    assert [ln.split()[0].lower() for ln in lines[:-1]] == [c["status"] for c in data["checks"]]
    assert lines[-1].startswith(f"summary: passed={data['summary']['passed']} failed=0")


def test_verify_corrupted_hook_fails(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorem1", "--n0", "1", "--order", "2",
                       "--range", "1", "--format", "json", "--corrupt-brackets")
    assert code == 1
    data = json.loads(out)
    jsonschema.validate(data, REPORT_SCHEMA)
    bad = [c for c in data["checks"] if c["status"] == "fail"]
    assert bad and all("defect" in c for c in bad)


@pytest.mark.parametrize("argv", [
    ("verify", "--suite", "theorem2", "--n0", "2"),
    ("verify", "--suite", "theorem1", "--order", "1"),
    ("verify", "--suite", "nonsense"),
    ("verify", "--n0", "0"),
    ("verify", "--n0", "x"),
    ("expand", "--case", "3", "--op", "delta-closed", "--gen", "L(1)"),
    ("expand", "--case", "2", "--n0", "2", "--gen", "L(1)"),
    ("expand", "--case", "1", "--gen", "Y(1)"),
    ("normalize", "--expr", "Y(1)"),
    ("normalize", "--expr", "L(1) +"),
    ("bogus",),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err and not out


def test_parity_error_reports_position(capsys):
    code, _, err = run(capsys, "normalize", "--expr", "L(1) + Y(1)")
    assert code == 2
    assert "position 7" in err and "half-odd" in err


def test_expand_examples(capsys):
    code, out, _ = run(capsys, "expand", "--case", "1", "--n0", "1", "--order", "1",
                       "--op", "delta", "--gen", "M(1)")
    assert code == 0 and out.strip() == "1⊗M(1) + M(1)⊗1 + (-1)·M(1)⊗M(1)·t"
    code, out, _ = run(capsys, "expand", "--case", "2", "--n0", "1", "--order", "0",
                       "--op", "antipode", "--gen", "Y(1/2)")
    assert code == 0 and out.strip() == "(-1)·Y(1/2)"
    _, a, _ = run(capsys, "expand", "--case", "2", "--n0", "3", "--order", "3", "--gen", "L(-1)")
    _, b, _ = run(capsys, "expand", "--case", "2", "--n0", "3", "--order", "3", "--gen", "L(-1)",
                  "--op", "delta-closed")
    assert a == b


def test_normalize_examples(capsys):
    assert run(capsys, "normalize", "--expr", "L(1)*L(0)")[1].strip() == "L(0)*L(1) - L(1)"
    assert run(capsys, "normalize", "--expr", "Y(1/2)*Y(1/2)")[1].strip() == "Y(1/2)*Y(1/2)"
    assert run(capsys, "normalize", "--expr", "2 - 1/2*M(0)*L(1)")[1].strip() == "2 - 1/2*M(0)*L(1)"


def test_parser_details():
    assert parse_generator(" Y( -3/2 ) ").index == -1.5
    assert parse_element("0") == UEAElement()
    with pytest.raises(ParseError) as info:
        parse_element("L(1) * * L(2)")
    assert info.value.position == 7
    with pytest.raises(ParseError):
        parse_element("1/0")
    with pytest.raises(ParseError):
        parse_generator("M(1/2)")


GEN = grid_generators(2)


@st.composite
def elements(draw):
    terms = draw(st.lists(st.tuples(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                                    st.lists(st.sampled_from(GEN), max_size=3)), max_size=4))
    total = UEAElement()
    for c, word in terms:
        total = total + normalize(word).scale(c)
    return total


@settings(max_examples=100, deadline=None)
@given(elements())
def test_render_parse_round_trip(x):
    assert parse_element(str(x)) == x


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "svquant", "normalize", "--expr", "L(1)*L(0)"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "L(0)*L(1) - L(1)"
