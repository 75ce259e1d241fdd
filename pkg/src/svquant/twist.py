"""
Drinfel'd twists for the three (h, e) pairs and the Hopf structures they induce.

With [h, e] = e the twist and its companions are::

    scriptF_a = sum_r (-1)^r/r! h^[r]_a (x) e^r t^r
    F_a       = sum_r   1/r!   h^(r)_a (x) e^r t^r
    u_a       = sum_r (-1)^r/r! h^[r]_{-a} e^r t^r    (= m(S0 (x) id)(F_a))
    v_a       = sum_r   1/r!   h^[r]_a e^r t^r        (= m(id (x) S0)(scriptF_a))

The deformed coproduct is Δ(x) = scriptF Δ0(x) F and the antipode is
S(x) = v S0(x) u.  Closed forms are available for cases 1 and 2 only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .enveloping import (ONE, TensorUEAElement, UEAElement, antipode0,
                         binomial, coproduct0, counit, falling_factorial, gen,
                         lift, rising_factorial, tensor)
from .lie import Generator, M, TwistCase, Y, case_generators
from .series import (DEFAULT_ORDER, Series, binomial_series, embed,
                     insert_unit_leg, multiply_legs, series_tensor,
                     tensor_apply)


def _he(case: TwistCase) -> tuple[UEAElement, UEAElement]:
    h, e = case_generators(case)
    return gen(h), gen(e)


def _powers(e: UEAElement, n: int) -> list[UEAElement]:
    out = [ONE]
    for _ in range(n):
        out.append(out[-1] * e)
    return out


def _tensor2(a: UEAElement, b: UEAElement) -> TensorUEAElement:
    return TensorUEAElement({(ma, mb): ca * cb for ma, ca in a.terms.items()
                             for mb, cb in b.terms.items()}, 2)


def build_F(a, case: TwistCase, order: int = DEFAULT_ORDER) -> Series:
    h, e = _he(case)
    a = Fraction(a)
    ep = _powers(e, order)
    return Series([_tensor2(rising_factorial(h, r, a).scale(Fraction(1, factorial(r))), ep[r])
                   for r in range(order + 1)], order, 2)


def build_scriptF(a, case: TwistCase, order: int = DEFAULT_ORDER) -> Series:
    h, e = _he(case)
    a = Fraction(a)
    ep = _powers(e, order)
    return Series([_tensor2(falling_factorial(h, r, a).scale(Fraction((-1) ** r, factorial(r))), ep[r])
                   for r in range(order + 1)], order, 2)


def build_u(a, case: TwistCase, order: int = DEFAULT_ORDER) -> Series:
    h, e = _he(case)
    a = Fraction(a)
    ep = _powers(e, order)
    return Series([(falling_factorial(h, r, -a) * ep[r]).scale(Fraction((-1) ** r, factorial(r)))
                   for r in range(order + 1)], order, 1)


def build_v(a, case: TwistCase, order: int = DEFAULT_ORDER) -> Series:
    h, e = _he(case)
    a = Fraction(a)
    ep = _powers(e, order)
    return Series([(falling_factorial(h, r, a) * ep[r]).scale(Fraction(1, factorial(r)))
                   for r in range(order + 1)], order, 1)


@dataclass(frozen=True)
class TwistData:
    case: TwistCase
    order: int
    h: UEAElement
    e: UEAElement
    F: Series
    scriptF: Series
    u: Series
    v: Series


def build_twist(case: TwistCase, order: int = DEFAULT_ORDER) -> TwistData:
    h, e = _he(case)
    return TwistData(case, order, h, e,
                     build_F(0, case, order), build_scriptF(0, case, order),
                     build_u(0, case, order), build_v(0, case, order))


# ---------------------------------------------------------------------------
# twist axioms

def twist_defects(d: TwistData) -> tuple[Series, Series, Series]:
    """(cocycle defect in degree 3, (ε⊗id)scriptF - 1, (id⊗ε)scriptF - 1)."""
    f = d.scriptF
    lhs = insert_unit_leg(f, 2) * tensor_apply("coproduct", f, 0)
    rhs = insert_unit_leg(f, 0) * tensor_apply("coproduct", f, 1)
    one = Series.one(d.order)
    return (lhs - rhs,
            tensor_apply("counit", f, 0) - one,
            tensor_apply("counit", f, 1) - one)


# ---------------------------------------------------------------------------
# twisted Hopf structure

def delta_twisted(x, d: TwistData) -> Series:
    """scriptF · Δ0(x) · F."""
    return d.scriptF * embed(coproduct0(lift(x)), d.order) * d.F


def antipode_twisted(x, d: TwistData) -> Series:
    """v · S0(x) · u."""
    return d.v * embed(antipode0(lift(x)), d.order) * d.u


def delta_on_leg(s: Series, leg: int, d: TwistData) -> Series:
    """Apply the twisted coproduct to one leg of a degree-2 series.

    (Δ⊗id)X = (scriptF⊗1)(Δ0⊗id)(X)(F⊗1), and symmetrically on the right leg.
    """
    if s.degree != 2 or leg not in (0, 1):
        raise ValueError("delta_on_leg works on degree-2 series, leg 0 or 1")
    pos = 2 if leg == 0 else 0
    return (insert_unit_leg(d.scriptF, pos) * tensor_apply("coproduct", s, leg)
            * insert_unit_leg(d.F, pos))


def antipode_on_leg_and_multiply(s: Series, leg: int, d: TwistData) -> Series:
    """m(S⊗id)(X) for leg 0, m(id⊗S)(X) for leg 1."""
    mapped = tensor_apply("antipode", s, leg)
    if leg == 0:
        # sum v S0(a) u b
        return d.v * multiply_legs(mapped, d.u)
    return _left_right(mapped, d)


def _left_right(mapped: Series, d: TwistData) -> Series:
    # sum a v S0(b) u, with S0 already applied to the right leg
    order = min(mapped.order, d.order)
    out = [UEAElement() for _ in range(order + 1)]
    for k in range(order + 1):
        for (a, b), c in mapped.coeffs[k].terms.items():
            ea, eb = UEAElement({a: c}), UEAElement({b: 1})
            for i in range(order + 1 - k):
                vi = d.v.coeffs[i]
                if not vi:
                    continue
                left = ea * vi * eb
                for j in range(order + 1 - k - i):
                    uj = d.u.coeffs[j]
                    if uj:
                        out[k + i + j] = out[k + i + j] + left * uj
    return Series(out, order, 1)


@dataclass(frozen=True)
class HopfDefects:
    coassociativity: Series
    counit_left: Series
    counit_right: Series
    antipode_left: Series
    antipode_right: Series

    def items(self):
        return list(self.__dict__.items())


def hopf_defects(x, d: TwistData) -> HopfDefects:
    """Twisted Hopf axioms evaluated on x, all defects should vanish up to t^N."""
    x = lift(x)
    D = delta_twisted(x, d)
    X = embed(x, d.order)
    unit = Series.one(d.order).scale(counit(x))
    return HopfDefects(
        delta_on_leg(D, 0, d) - delta_on_leg(D, 1, d),
        tensor_apply("counit", D, 0) - X,
        tensor_apply("counit", D, 1) - X,
        antipode_on_leg_and_multiply(D, 0, d) - unit,
        antipode_on_leg_and_multiply(D, 1, d) - unit,
    )


# ---------------------------------------------------------------------------
# closed forms

def _closed_form_guard(d: TwistData):
    if d.case.case_id == 3:
        raise ValueError("no closed-form coproduct/antipode exists for case 3")


def _e(g: Generator | UEAElement, order: int) -> Series:
    return embed(lift(g), order)


def closed_form_delta(g: Generator, d: TwistData) -> Series:
    _closed_form_guard(d)
    N, n0, h, e = d.order, d.case.n0, d.h, d.e
    one = Series.one(N)
    B = lambda alpha: binomial_series(e, alpha, N)  # noqa: E731
    idx = g.index
    fam = g.family
    if d.case.case_id == 1:
        base = series_tensor(one, _e(g, N)) + series_tensor(_e(g, N), B(idx / n0))
        if fam == "L":
            base = base + series_tensor(_e(h, N), B(-1) * _e(M(idx + n0), N)).scale(n0).shift(1)
        return base
    # case 2
    base = series_tensor(one, _e(g, N)) + series_tensor(_e(g, N), B(2 * idx / n0))
    if fam == "L":
        n = idx
        c1 = Fraction(n0 - n, 2)
        c2 = Fraction(n * (n - n0), 4)
        base = base + series_tensor(_e(h, N), B(-1) * _e(Y(n + Fraction(n0, 2)), N)).scale(c1).shift(1)
        base = base + series_tensor(_e(rising_factorial(h, 2), N),
                                    B(-2) * _e(M(n + n0), N)).scale(c2).shift(2)
    elif fam == "Y":
        c = idx - Fraction(n0, 2)
        base = base - series_tensor(_e(h, N), B(-1) * _e(M(idx + Fraction(n0, 2)), N)).scale(c).shift(1)
    return base


def closed_form_antipode(g: Generator, d: TwistData) -> Series:
    _closed_form_guard(d)
    N, n0, h, e = d.order, d.case.n0, d.h, d.e
    idx, fam = g.index, g.family
    x = gen(g)
    if d.case.case_id == 1:
        inner = _e(x, N)
        if fam == "L":
            inner = inner - _e(gen(M(idx + n0)) * falling_factorial(h, 1, 1), N).scale(n0).shift(1)
        return -(binomial_series(e, -idx / n0, N) * inner)
    inner = _e(x, N)
    if fam == "L":
        n = idx
        inner = inner + _e(gen(Y(n + Fraction(n0, 2))) * falling_factorial(h, 1, 1), N) \
            .scale(Fraction(n - n0, 2)).shift(1)
        inner = inner + _e(gen(M(n + n0)) * falling_factorial(h, 2, 2), N) \
            .scale(Fraction(n * (n - n0), 4)).shift(2)
    elif fam == "Y":
        inner = inner + _e(gen(M(idx + Fraction(n0, 2))) * falling_factorial(h, 1, 1), N) \
            .scale(idx - Fraction(n0, 2)).shift(1)
    return -(binomial_series(e, -2 * idx / n0, N) * inner)


# ---------------------------------------------------------------------------
# supporting identities: products of F, scriptF, u, v and transport rules

def inverse_pair_defects(a, b, case: TwistCase, order: int = DEFAULT_ORDER) -> tuple[Series, Series]:
    """scriptF_a F_b - 1(x)(1-et)^(a-b) and v_a u_b - (1-et)^-(a+b)."""
    a, b = Fraction(a), Fraction(b)
    h, e = _he(case)
    one = Series.one(order)
    d1 = build_scriptF(a, case, order) * build_F(b, case, order) \
        - series_tensor(one, binomial_series(e, a - b, order))
    d2 = build_v(a, case, order) * build_u(b, case, order) - binomial_series(e, -(a + b), order)
    return d1, d2


def multiplicative_u_v_defects(a, case: TwistCase, order: int = DEFAULT_ORDER) -> tuple[Series, Series]:
    """u_a - m(S0⊗id)(F_a) and v_a - m(id⊗S0)(scriptF_a)."""
    u = multiply_legs(tensor_apply("antipode", build_F(a, case, order), 0))
    v = multiply_legs(tensor_apply("antipode", build_scriptF(a, case, order), 1))
    return build_u(a, case, order) - u, build_v(a, case, order) - v


def transport_identity_defects(case: TwistCase, a, g: Generator, order: int = DEFAULT_ORDER) -> dict:
    """LHS - RHS of the rules moving g through F_a (either leg) and through u_a.

    Keys name the identity; values are Series that must vanish.  Case 3 has
    no such rules and yields an empty dict.
    """
    if case.case_id == 3:
        return {}
    N, n0 = order, case.n0
    a = Fraction(a)
    h, _ = _he(case)
    fam, idx = g.family, g.index
    X = _e(gen(g), N)
    Fa = build_F(a, case, N)
    ua = build_u(a, case, N)
    moved = Fraction(1 if case.case_id == 1 else 2) * idx / n0
    left, right = series_tensor(X, Series.one(N)), series_tensor(Series.one(N), X)

    def F_times(b, first, second):
        return build_F(b, case, N) * series_tensor(_e(first, N), _e(second, N))

    def after_u(*corrections):
        total = X
        for k, coeff, element in corrections:
            if coeff:
                total = total + _e(element, N).scale(coeff).shift(k)
        return build_u(a + moved, case, N) * total

    out = {f"({fam}⊗1)F_a": left * Fa - build_F(a - moved, case, N) * left}
    fixed = right * Fa - Fa * right
    h1a, h2a = rising_factorial(h, 1, a), rising_factorial(h, 2, a)
    fall1, fall2 = falling_factorial(h, 1, 1 - a), falling_factorial(h, 2, 2 - a)
    if case.case_id == 1:
        if fam == "L":
            out["(1⊗L)F_a"] = fixed - F_times(a + 1, h1a, gen(M(idx + n0))).scale(n0).shift(1)
            out["L u_a"] = X * ua - after_u((1, -n0, gen(M(idx + n0)) * fall1))
        else:
            out[f"(1⊗{fam})F_a"] = fixed
            out[f"{fam} u_a"] = X * ua - after_u()
        return out
    half = Fraction(n0, 2)
    if fam == "L":
        c1, c2 = Fraction(idx - n0, 2), Fraction(idx * (idx - n0), 4)
        out["(1⊗L)F_a"] = (fixed + F_times(a + 1, h1a, gen(Y(idx + half))).scale(c1).shift(1)
                           - F_times(a + 2, h2a, gen(M(idx + n0))).scale(c2).shift(2))
        out["L u_a"] = X * ua - after_u((1, c1, gen(Y(idx + half)) * fall1),
                                        (2, c2, gen(M(idx + n0)) * fall2))
    elif fam == "Y":
        c = idx - half
        out["(1⊗Y)F_a"] = fixed + F_times(a + 1, h1a, gen(M(idx + half))).scale(c).shift(1)
        out["Y u_a"] = X * ua - after_u((1, c, gen(M(idx + half)) * fall1))
    else:
        out["(1⊗M)F_a"] = fixed
        out["M u_a"] = X * ua - after_u()
    return out


def commutation_defects(case: TwistCase, x: Generator, i: int, a) -> dict:
    """x h^(i)_a - h^(i)_{a-c} x and the falling analogue, c = [h-eigenvalue of x]."""
    h, _ = _he(case)
    a = Fraction(a)
    s = 1 if case.case_id != 2 else 2
    c = Fraction(s) * x.index / case.n0
    X = gen(x)
    return {
        "rising": X * rising_factorial(h, i, a) - rising_factorial(h, i, a - c) * X,
        "falling": X * falling_factorial(h, i, a) - falling_factorial(h, i, a - c) * X,
    }


def e_power_commutation_defects(case: TwistCase, power: int, i: int, a) -> dict:
    """e^n h^(i)_a - h^(i)_{a-n} e^n and the falling analogue."""
    h, e = _he(case)
    a = Fraction(a)
    en = e ** power
    return {
        "rising": en * rising_factorial(h, i, a) - rising_factorial(h, i, a - power) * en,
        "falling": en * falling_factorial(h, i, a) - falling_factorial(h, i, a - power) * en,
    }


def coproduct_falling_defect(case: TwistCase, r: int, a) -> TensorUEAElement:
    """Δ0(h^[r]) - sum_i C(r,i) h^[i]_{-a} (x) h^[r-i]_a."""
    h, _ = _he(case)
    a = Fraction(a)
    rhs = TensorUEAElement({}, 2)
    for i in range(r + 1):
        rhs = rhs + tensor(falling_factorial(h, i, -a), falling_factorial(h, r - i, a)).scale(binomial(r, i))
    return coproduct0(falling_factorial(h, r)) - rhs


def y_power_defect(p, q, s: int) -> UEAElement:
    """Y_p Y_q^s - (Y_q^s Y_p - s(p-q) Y_q^(s-1) M_{p+q})."""
    p, q = Fraction(p), Fraction(q)
    yp, yq = gen(Y(p)), gen(Y(q))
    rhs = yq ** s * yp
    if s:
        rhs = rhs - (yq ** (s - 1) * gen(M(p + q))).scale(s * (p - q))
    return yp * yq ** s - rhs
