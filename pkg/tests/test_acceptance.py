"""
Acceptance criteria, all exact (rational arithmetic, tolerance zero).

Each test prints one PASS/FAIL line; the lines are also repeated in the
terminal summary by conftest.py so they show up without ``-s``.
"""

import json

import jsonschema

from svquant.cli import main
from svquant.verification import SuiteConfig, run_suite

from test_cli import REPORT_SCHEMA

RESULTS = []


def record(number, title, ok, detail=""):
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    return ok


def _summary(report):
    bad = [c for c in report.checks if not c.passed]
    text = f"{report.passed} checks passed, {report.failed} failed, {report.runtime:.1f}s"
    if bad:
        text += f"; first failure: {bad[0].suite}/{bad[0].name} {bad[0].params}"
    return text


def _suite(number, title, **cfg):
    report = run_suite(SuiteConfig(**cfg))
    ok = report.ok and report.passed > 0
    assert record(number, title, ok, _summary(report)), _summary(report)
    return report


def test_criterion_1_bialgebra():
    _suite(1, "bialgebra: Jacobi, CYBE, cocycle", suites=("bialgebra",))


def test_criterion_2_pbw_hopf():
    _suite(2, "PBW straightening and primitive Hopf axioms", suites=("pbw-hopf",))


def test_criterion_3_lemmas():
    _suite(3, "factorial, commutation, transport and inverse-pair identities at N=4",
           suites=("lemmas",), order=4)


def test_criterion_4_twist_axioms():
    report = _suite(4, "twist axioms to t^4 for all three cases", suites=("twist",), order=4,
                    n0_values=(1, 2, 3))
    covered = {(c.params.get("case"), c.params.get("n0")) for c in report.checks}
    for need in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]:
        assert need in covered


def test_criterion_5_theorem_cross_check():
    report = _suite(5, "conjugated coproduct/antipode equal the closed forms on the grid at N=5",
                    suites=("theorem1", "theorem2"), order=5)
    names = {c.name for c in report.checks}
    assert {"delta=closed-form", "antipode=closed-form"} <= names


def test_criterion_6_twisted_hopf_axioms():
    report = run_suite(SuiteConfig(suites=("theorem1", "theorem2", "case3-hopf"), order=4))
    hopf = [c for c in report.checks if c.name == "hopf-axioms"]
    cases = {c.params["case"] for c in hopf}
    ok = report.ok and bool(hopf) and cases == {1, 2, 3}
    detail = f"{len(hopf)} generator/case points, {sum(not c.passed for c in hopf)} failed"
    assert record(6, "twisted coassociativity, counit and antipode to t^4, cases 1-3", ok, detail)


def test_criterion_7_cli(capsys):
    outcomes = {}
    outcomes["verify all exits 0"] = main(["verify", "--suite", "all"]) == 0
    capsys.readouterr()

    code = main(["verify", "--suite", "theorem1", "--n0", "1", "--order", "4", "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    jsonschema.validate(data, REPORT_SCHEMA)
    outcomes["json schema round trip"] = (code == 0 and data["summary"]["failed"] == 0
                                          and json.loads(json.dumps(data)) == data)

    code = main(["normalize", "--expr", "Y(1)"])
    err = capsys.readouterr().err
    outcomes["parity error"] = code == 2 and "position" in err

    code = main(["verify", "--suite", "theorem1", "--n0", "1", "--order", "2", "--corrupt-brackets"])
    capsys.readouterr()
    outcomes["corrupted brackets fail"] = code == 1

    code = main(["expand", "--case", "3", "--op", "delta-closed", "--gen", "L(1)"])
    capsys.readouterr()
    outcomes["case-3 closed form rejected"] = code == 2

    ok = all(outcomes.values())
    detail = ", ".join(f"{k}: {'ok' if v else 'BROKEN'}" for k, v in outcomes.items())
    with capsys.disabled():
        assert record(7, "command-line contract and negative controls", ok, detail), detail
