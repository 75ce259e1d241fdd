"""
Run identity suites over parameter grids and collect a structured report.

Every grid point is evaluated even after a failure so the report localizes
each broken identity; a failing record carries the first nonzero defect.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Iterable

from . import enveloping as env
from . import lie, twist
from .enveloping import UEAElement, gen
from .lie import Generator, TwistCase
from .series import Series, invert

SUITES = ("bialgebra", "pbw-hopf", "lemmas", "twist", "theorem1", "theorem2", "case3-hopf")
THEOREM_SUITES = ("theorem1", "theorem2")
DEFAULT_A = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(1, 3))
INVERSE_PAIRS = ((0, 0), (1, 0), (Fraction(1, 2), Fraction(1, 3)), (-1, Fraction(1, 2)), (Fraction(1, 3), -1))


@dataclass
class SuiteConfig:
    suites: tuple = SUITES
    n0_values: tuple = (1, 2, 3)
    order: int = 4
    index_range: int = 3
    a_samples: tuple = DEFAULT_A
    seed: int = 0
    # None: use the odd members of n0_values for case 2
    case2_n0_values: tuple | None = None
    corrupt_brackets: bool = False  # negative-control hook
    samples: int = 40  # random words drawn for the PBW suite

    def case2_n0(self) -> tuple:
        if self.case2_n0_values is not None:
            return tuple(self.case2_n0_values)
        return tuple(n for n in self.n0_values if n % 2)

    def problems(self) -> list[str]:
        out = []
        for s in self.suites:
            if s not in SUITES:
                out.append(f"unknown suite {s!r}")
        if any(n == 0 for n in self.n0_values) or any(n == 0 for n in self.case2_n0()):
            out.append("n0 must be nonzero")
        if self.order < 0:
            out.append("order must be nonnegative")
        if self.order < 2 and any(s in THEOREM_SUITES for s in self.suites):
            out.append("theorem suites need order >= 2")
        if self.index_range < 1:
            out.append("index range must be >= 1")
        even = [n for n in self.case2_n0() if n % 2 == 0]
        if even and ("theorem2" in self.suites or self.case2_n0_values is not None):
            out.append(f"case 2 needs odd n0, got {even}")
        if "theorem2" in self.suites and not self.case2_n0():
            out.append("theorem2 needs at least one odd n0")
        return out

    def to_json(self) -> dict:
        return {
            "suites": list(self.suites),
            "n0_values": list(self.n0_values),
            "case2_n0_values": list(self.case2_n0()),
            "order": self.order,
            "index_range": self.index_range,
            "a_samples": [str(a) for a in self.a_samples],
            "seed": self.seed,
            "corrupt_brackets": self.corrupt_brackets,
        }


@dataclass
class Check:
    suite: str
    name: str
    params: dict
    passed: bool
    defect: object = None  # rendered witness: str, or JSON-ready nested arrays

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def sort_key(self):
        return (self.suite, self.name, json.dumps(self.params, sort_keys=True))

    def to_json(self) -> dict:
        out = {"suite": self.suite, "name": self.name, "params": self.params, "status": self.status}
        if not self.passed:
            out["defect"] = self.defect
        return out

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        line = f"{self.status.upper():4} {self.suite:10} {self.name} {params}".rstrip()
        if not self.passed:
            line += f"\n     defect: {self.defect_text}"
        return line

    @property
    def defect_text(self) -> str:
        return self.defect if isinstance(self.defect, str) else json.dumps(self.defect, ensure_ascii=False)


@dataclass
class Report:
    config: SuiteConfig
    checks: list = field(default_factory=list)
    runtime: float = 0.0

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "checks": [c.to_json() for c in self.checks],
            "summary": {"passed": self.passed, "failed": self.failed},
            "runtime_seconds": round(self.runtime, 3),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [c.to_text() for c in self.checks]
        lines.append(f"summary: passed={self.passed} failed={self.failed} "
                     f"runtime={self.runtime:.2f}s")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# helpers

def _fmt(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, Generator):
        return str(x)
    return x


def _is_zero(d) -> bool:
    if isinstance(d, Series):
        return d.is_zero()
    return not d


def _witness(d):
    if isinstance(d, Series):
        return d.to_json()
    if isinstance(d, env.TensorUEAElement):
        return d.legs()
    return str(d)


class _Collector:
    def __init__(self):
        self.checks: list[Check] = []

    def add(self, suite: str, name: str, params: dict, defects: Iterable):
        """Record one check; ``defects`` yields (label, value) pairs that must vanish."""
        params = {k: _fmt(v) for k, v in params.items()}
        try:
            for label, d in defects:
                if not _is_zero(d):
                    witness = {"at": label, "value": _witness(d)} if label else _witness(d)
                    self.checks.append(Check(suite, name, params, False, witness))
                    return
        except Exception as exc:  # a crash at one grid point is a failed record
            self.checks.append(Check(suite, name, params, False, f"error: {exc}"))
            return
        self.checks.append(Check(suite, name, params, True))


def _grid(cfg: SuiteConfig):
    return lie.grid_generators(cfg.index_range)


def _half_odd(cfg: SuiteConfig) -> list[Fraction]:
    r = cfg.index_range
    return [Fraction(tp, 2) for tp in range(-2 * r + 1, 2 * r, 2)]


def _cases(cfg: SuiteConfig, ids=(1, 2, 3)) -> list[TwistCase]:
    out = []
    for cid in ids:
        n0s = cfg.case2_n0() if cid == 2 else cfg.n0_values
        out.extend(TwistCase(cid, n0) for n0 in n0s)
    return out


# ---------------------------------------------------------------------------
# suites

def _suite_bialgebra(cfg: SuiteConfig, col: _Collector):
    S = "bialgebra"
    gens = _grid(cfg)
    for x in gens:
        col.add(S, "antisymmetry", {"x": x},
                ((f"y={y}", lie.bracket(x, y) + lie.bracket(y, x)) for y in gens))
        col.add(S, "jacobi", {"x": x}, (
            (f"y={y},z={z}",
             lie.bracket(x, lie.bracket(y, z)) + lie.bracket(y, lie.bracket(z, x))
             + lie.bracket(z, lie.bracket(x, y)))
            for y in gens for z in gens))

        def grading(x=x):
            for y in gens:
                for g in lie.bracket(x, y).terms:
                    if g.twice != x.twice + y.twice:
                        yield f"y={y}", lie.LieElement.of(g)
        col.add(S, "grading", {"x": x}, grading())
    for case in _cases(cfg):
        p = {"case": case.case_id, "n0": case.n0}
        try:
            h, e = lie.case_generators(case)
        except Exception as exc:
            col.add(S, "case-generators", p, [("", f"error: {exc}")])
            continue
        col.add(S, "[h,e]=e", p, [("", lie.bracket(h, e) - e)])
        r = lie.r_matrix(h, e)
        col.add(S, "r-skew", p, [("", lie.swap(r) + r)])
        col.add(S, "cybe", p, [("", lie.cybe_defect(r))])
        col.add(S, "delta_r-skew", p,
                ((f"x={x}", lie.swap(lie.delta_r(x, h, e)) + lie.delta_r(x, h, e)) for x in gens))
        for x in gens:
            col.add(S, "cocycle", {**p, "x": x},
                    ((f"y={y}", lie.cocycle_defect(x, y, h, e)) for y in gens))


def _random_word(rng: random.Random, gens, length: int):
    return tuple(rng.choice(gens) for _ in range(length))


def _suite_pbw_hopf(cfg: SuiteConfig, col: _Collector):
    S = "pbw-hopf"
    gens = _grid(cfg)
    rng = random.Random(cfg.seed)
    monos = [()] + [(g,) for g in gens] + list(combinations_with_replacement(gens, 2))
    monos += sorted({tuple(sorted(_random_word(rng, gens, 3))) for _ in range(cfg.samples)})
    by_len: dict[int, list] = {}
    for m in monos:
        by_len.setdefault(len(m), []).append(m)

    for length, group in sorted(by_len.items()):
        p = {"length": length}
        col.add(S, "normalize-idempotent", p,
                ((env.render_monomial(m), env.normalize(m) - UEAElement({m: 1})) for m in group))

        def coassoc(group=group):
            for m in group:
                d = env.coproduct0(UEAElement({m: 1}))
                yield env.render_monomial(m), (env.apply_on_leg(d, 0, "coproduct")
                                               - env.apply_on_leg(d, 1, "coproduct"))

        def counit_law(group=group):
            for m in group:
                x = UEAElement({m: 1})
                d = env.coproduct0(x)
                yield env.render_monomial(m), env.apply_on_leg(d, 0, "counit") - x
                yield env.render_monomial(m), env.apply_on_leg(d, 1, "counit") - x

        def antipode_law(group=group):
            for m in group:
                x = UEAElement({m: 1})
                d = env.coproduct0(x)
                unit = UEAElement.scalar(env.counit(x))
                yield env.render_monomial(m), env.multiply_legs(env.apply_on_leg(d, 0, "antipode")) - unit
                yield env.render_monomial(m), env.multiply_legs(env.apply_on_leg(d, 1, "antipode")) - unit

        col.add(S, "coassociativity0", p, coassoc())
        col.add(S, "counit0", p, counit_law())
        col.add(S, "antipode0", p, antipode_law())
        col.add(S, "S0-involutive", p,
                ((env.render_monomial(m), env.antipode0(env.antipode0(UEAElement({m: 1})))
                  - UEAElement({m: 1})) for m in group))

    for x in gens:
        col.add(S, "bracket-compatibility", {"x": x}, (
            (f"y={y}", gen(x) * gen(y) - gen(y) * gen(x) - UEAElement.from_lie(lie.bracket(x, y)))
            for y in gens))

    for i in range(cfg.samples):
        words = [_random_word(rng, gens, rng.randint(0, 3)) for _ in range(3)]
        a, b, c = (env.normalize(w) for w in words)
        params = {"sample": i, "words": " | ".join(env.render_monomial(w) for w in words)}
        col.add(S, "associativity", params, [("", (a * b) * c - a * (b * c))])


def _suite_lemmas(cfg: SuiteConfig, col: _Collector):
    S = "lemmas"
    N = cfg.order
    small_a = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2))
    xs = {"L(0)": gen(lie.L(0)), "L(1)+1/2*M(-1)": gen(lie.L(1)) + gen(lie.M(-1)).scale(Fraction(1, 2))}
    for xname, x in xs.items():
        for r in range(5):
            def factorial_defects(x=x, r=r):
                for a in small_a:
                    for b in small_a:
                        fd = env.factorial_identity_defects(x, a, b, r)
                        tag = f"a={a},b={b}"
                        for s, pr in enumerate(fd.product):
                            for label, d in pr._asdict().items():
                                yield f"{tag},s={s},{label}", d
                        yield f"{tag},rising_sum", fd.rising_sum
                        yield f"{tag},falling_sum", fd.falling_sum
            col.add(S, "factorial-identities", {"x": xname, "r": r}, factorial_defects())

    # right-hand sides of the binomial sums agree for two different x
    x1, x2 = xs.values()

    def rhs_independent():
        for r in range(5):
            for a in small_a:
                for b in small_a:
                    f1 = env.factorial_identity_defects(x1, a, b, r)
                    f2 = env.factorial_identity_defects(x2, a, b, r)
                    yield f"r={r},a={a},b={b}", f1.rising_sum - f2.rising_sum
                    yield f"r={r},a={a},b={b}", f1.falling_sum - f2.falling_sum
    col.add(S, "binomial-rhs-independent-of-x", {}, rhs_independent())

    ad_pairs = [(lie.Y(Fraction(1, 2)), lie.Y(Fraction(3, 2))), (lie.L(1), lie.M(1)),
                (lie.L(1), lie.L(-1)), (lie.L(2), lie.Y(Fraction(1, 2))), (lie.M(2), lie.L(0)),
                (lie.Y(Fraction(-3, 2)), lie.L(1))]
    for x, y in ad_pairs:
        col.add(S, "ad-power-expansion", {"x": x, "y": y},
                ((f"m={m}", env.ad_power_expansion_defect(gen(x), gen(y), m)) for m in range(5)))

    gens = _grid(cfg)
    for case in _cases(cfg, (1, 2)):
        p = {"case": case.case_id, "n0": case.n0}
        for g in gens:
            col.add(S, "h-commutation", {**p, "x": g}, (
                (f"i={i},a={a},{k}", d)
                for i in range(5) for a in cfg.a_samples
                for k, d in twist.commutation_defects(case, g, i, a).items()))
        col.add(S, "e-power-commutation", p, (
            (f"n={n},i={i},a={a},{k}", d)
            for n in range(4) for i in range(5) for a in cfg.a_samples
            for k, d in twist.e_power_commutation_defects(case, n, i, a).items()))
        col.add(S, "coproduct-falling", p, (
            (f"r={r},a={a}", twist.coproduct_falling_defect(case, r, a))
            for r in range(5) for a in cfg.a_samples))
        for a, b in INVERSE_PAIRS:
            d1, d2 = twist.inverse_pair_defects(a, b, case, N)
            col.add(S, "scriptF_a F_b", {**p, "a": Fraction(a), "b": Fraction(b)}, [("", d1)])
            col.add(S, "v_a u_b", {**p, "a": Fraction(a), "b": Fraction(b)}, [("", d2)])
        for a in cfg.a_samples:
            F, sF = twist.build_F(a, case, N), twist.build_scriptF(a, case, N)
            u, v = twist.build_u(a, case, N), twist.build_v(-a, case, N)
            col.add(S, "inverses", {**p, "a": a}, [
                ("F^-1=scriptF", invert(F) - sF),
                ("u^-1=v_-a", invert(u) - v),
            ])
        for a in cfg.a_samples:
            for g in gens:
                col.add(S, "transport", {**p, "a": a, "x": g},
                        twist.transport_identity_defects(case, a, g, N).items())

    halves = _half_odd(cfg)
    for p_ in halves:
        col.add(S, "Y_p Y_q^s", {"p": p_}, (
            (f"q={q},s={s}", twist.y_power_defect(p_, q, s)) for q in halves for s in range(5)))


def _suite_twist(cfg: SuiteConfig, col: _Collector):
    S = "twist"
    N = cfg.order
    for case in _cases(cfg):
        p = {"case": case.case_id, "n0": case.n0}
        d = twist.build_twist(case, N)
        cocycle, left, right = twist.twist_defects(d)
        col.add(S, "cocycle", p, [("", cocycle)])
        col.add(S, "counit-left", p, [("", left)])
        col.add(S, "counit-right", p, [("", right)])
        one2, one1 = Series.one(N, 2), Series.one(N)
        col.add(S, "scriptF·F=1", p, [("scriptF F", d.scriptF * d.F - one2),
                                      ("F scriptF", d.F * d.scriptF - one2)])
        col.add(S, "v·u=1", p, [("v u", d.v * d.u - one1), ("u v", d.u * d.v - one1)])
        du, dv = twist.multiplicative_u_v_defects(0, case, N)
        col.add(S, "u=m(S0⊗id)F, v=m(id⊗S0)scriptF", p, [("u", du), ("v", dv)])


def _hopf_block(S: str, case: TwistCase, cfg: SuiteConfig, col: _Collector, closed_forms: bool):
    N = cfg.order
    p = {"case": case.case_id, "n0": case.n0}
    d = twist.build_twist(case, N)
    for g in _grid(cfg):
        q = {**p, "x": g}
        if closed_forms:
            col.add(S, "delta=closed-form", q,
                    [("", twist.delta_twisted(g, d) - twist.closed_form_delta(g, d))])
            col.add(S, "antipode=closed-form", q,
                    [("", twist.antipode_twisted(g, d) - twist.closed_form_antipode(g, d))])
        col.add(S, "undeformed-limit", q, [
            ("delta", twist.delta_twisted(g, d)[0] - env.coproduct0(gen(g))),
            ("antipode", twist.antipode_twisted(g, d)[0] - env.antipode0(gen(g))),
        ])
        col.add(S, "hopf-axioms", q, twist.hopf_defects(g, d).items())


def _suite_theorem(case_id: int):
    def run(cfg: SuiteConfig, col: _Collector):
        S = f"theorem{case_id}"
        n0s = cfg.case2_n0() if case_id == 2 else cfg.n0_values
        for n0 in n0s:
            try:
                case = TwistCase(case_id, n0)
            except ValueError as exc:
                col.add(S, "config", {"n0": n0}, [("", f"error: {exc}")])
                continue
            _hopf_block(S, case, cfg, col, closed_forms=True)
    return run


def _suite_case3(cfg: SuiteConfig, col: _Collector):
    S = "case3-hopf"
    for case in _cases(cfg, (3,)):
        d = twist.build_twist(case, cfg.order)
        col.add(S, "scriptF·F=1", {"case": 3, "n0": case.n0},
                [("", d.scriptF * d.F - Series.one(cfg.order, 2))])
        _hopf_block(S, case, cfg, col, closed_forms=False)


_RUNNERS: dict[str, Callable] = {
    "bialgebra": _suite_bialgebra,
    "pbw-hopf": _suite_pbw_hopf,
    "lemmas": _suite_lemmas,
    "twist": _suite_twist,
    "theorem1": _suite_theorem(1),
    "theorem2": _suite_theorem(2),
    "case3-hopf": _suite_case3,
}


def run_suite(cfg: SuiteConfig) -> Report:
    """Evaluate every enabled suite; config problems become failing records."""
    start = time.perf_counter()
    col = _Collector()
    problems = cfg.problems()
    for msg in problems:
        col.checks.append(Check("config", "validation", {}, False, msg))
    if not problems:
        if cfg.corrupt_brackets:
            with lie.corrupted_brackets():
                _run_all(cfg, col)
        else:
            _run_all(cfg, col)
    checks = sorted(col.checks, key=Check.sort_key)
    return Report(cfg, checks, time.perf_counter() - start)


def _run_all(cfg: SuiteConfig, col: _Collector):
    for name in SUITES:
        if name in cfg.suites:
            _RUNNERS[name](cfg, col)
