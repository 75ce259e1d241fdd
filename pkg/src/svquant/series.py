"""
Truncated power series in t with coefficients in U(L) or its tensor powers.

A :class:`Series` keeps t^0..t^N (N = ``order``).  Products are Cauchy
products truncated at the smaller order; coefficient products keep operand
order, which matters because U(L) is noncommutative.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .enveloping import (ONE, TensorUEAElement, UEAElement, apply_on_leg,
                         binomial, lift)

DEFAULT_ORDER = 5


def zero_of(degree: int):
    return UEAElement() if degree == 1 else TensorUEAElement({}, degree)


def one_of(degree: int):
    return ONE if degree == 1 else TensorUEAElement.one(degree)


def _degree_of(x) -> int:
    return 1 if isinstance(x, UEAElement) else x.degree


class Series:
    __slots__ = ("degree", "order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None, degree: int | None = None):
        coeffs = list(coeffs)
        if degree is None:
            degree = _degree_of(coeffs[0]) if coeffs else 1
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[:order + 1]
        zero = zero_of(degree)
        coeffs += [zero] * (order + 1 - len(coeffs))
        for c in coeffs:
            if _degree_of(c) != degree:
                raise ValueError("all coefficients must share the tensor degree")
        self.degree = degree
        self.order = order
        self.coeffs = tuple(coeffs)

    # -- constructors -----------------------------------------------------
    @classmethod
    def one(cls, order: int, degree: int = 1) -> "Series":
        return cls([one_of(degree)], order, degree)

    @classmethod
    def zero(cls, order: int, degree: int = 1) -> "Series":
        return cls([], order, degree)

    # -- ring structure ---------------------------------------------------
    def _check(self, other: "Series"):
        if not isinstance(other, Series):
            raise TypeError(f"cannot combine Series with {type(other).__name__}")
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._check(other)
        return Series([a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs)], n, self.degree)

    def __sub__(self, other):
        n = self._check(other)
        return Series([a - b for a, b in zip(self.coeffs[:n + 1], other.coeffs)], n, self.degree)

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order, self.degree)

    def scale(self, c) -> "Series":
        return Series([x.scale(c) for x in self.coeffs], self.order, self.degree)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        n = self._check(other)
        out = []
        for k in range(n + 1):
            acc = zero_of(self.degree)
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return Series(out, n, self.degree)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self.degree == other.degree and self.coeffs[:n + 1] == other.coeffs[:n + 1]

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return Series(self.coeffs[:order + 1], order, self.degree)

    def shift(self, k: int = 1) -> "Series":
        """Multiply by t^k."""
        return Series([zero_of(self.degree)] * k + list(self.coeffs), self.order, self.degree)

    def __getitem__(self, k):
        return self.coeffs[k]

    # -- rendering ----------------------------------------------------------
    def render(self) -> str:
        """c0 + c1*t + ... with each coefficient expanded term by term."""
        parts = []
        for k, coeff in enumerate(self.coeffs):
            tpart = "" if k == 0 else ("·t" if k == 1 else f"·t^{k}")
            for key, c in coeff:
                if isinstance(coeff, UEAElement):
                    body = _mono_text(key)
                else:
                    body = "⊗".join(_mono_text(m) for m in key)
                parts.append((body if c == 1 else f"({c})·{body}") + tpart)
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        """Nested arrays: one list per t-power, one [coeff, [legs...]] per term."""
        out = []
        for coeff in self.coeffs:
            if isinstance(coeff, UEAElement):
                out.append([[str(c), [_mono_text(m)]] for m, c in coeff])
            else:
                out.append(coeff.legs())
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Series(order={self.order}, degree={self.degree}: {self.render()})"


def _mono_text(m) -> str:
    return "*".join(map(str, m)) if m else "1"


def embed(x, order: int = DEFAULT_ORDER) -> Series:
    """Place x at t^0."""
    if not isinstance(x, TensorUEAElement):
        x = lift(x)
    return Series([x], order, _degree_of(x))


def invert(s: Series) -> Series:
    """Two-sided inverse of a series with constant term 1.

    With s = 1 + s1 t + ..., the inverse g satisfies g_k = -sum_{i>=1} s_i g_{k-i}.
    """
    if s.coeffs[0] != one_of(s.degree):
        raise ValueError("invert needs constant coefficient 1")
    g = [one_of(s.degree)]
    for k in range(1, s.order + 1):
        acc = zero_of(s.degree)
        for i in range(1, k + 1):
            if s.coeffs[i] and g[k - i]:
                acc = acc + s.coeffs[i] * g[k - i]
        g.append(-acc)
    return Series(g, s.order, s.degree)


def binomial_series(e, alpha, order: int = DEFAULT_ORDER) -> Series:
    """(1 - e t)^alpha = sum_k C(alpha, k) (-e)^k t^k."""
    e = lift(e)
    alpha = Fraction(alpha)
    coeffs = []
    power = ONE
    for k in range(order + 1):
        coeffs.append(power.scale(binomial(alpha, k) * (-1) ** k))
        power = power * e
    return Series(coeffs, order, 1)


def tensor_apply(kind: str, s: Series, leg: int = 0) -> Series:
    """Apply Δ0 / S0 / ε / id to one tensor leg of every coefficient."""
    coeffs = [apply_on_leg(c, leg, kind) for c in s.coeffs]
    degree = s.degree + (1 if kind == "coproduct" else -1 if kind == "counit" else 0)
    if degree < 1:
        raise ValueError("illegal leg index")
    return Series(coeffs, s.order, degree)


def series_tensor(*parts: Series) -> Series:
    """Tensor product of series: (sum a_i t^i) (x) (sum b_j t^j) = sum a_i(x)b_j t^(i+j)."""
    order = min(p.order for p in parts)
    degree = sum(p.degree for p in parts)
    cur = [{(): Fraction(1)}] + [{} for _ in range(order)]
    for p in parts:
        nxt = [{} for _ in range(order + 1)]
        for i, left in enumerate(cur):
            if not left:
                continue
            for j in range(order + 1 - i):
                coeff = p.coeffs[j]
                if not coeff:
                    continue
                items = ({(m,): c for m, c in coeff.terms.items()} if p.degree == 1
                         else coeff.terms)
                bucket = nxt[i + j]
                for k1, c1 in left.items():
                    for k2, c2 in items.items():
                        k = k1 + k2
                        bucket[k] = bucket.get(k, 0) + c1 * c2
        cur = nxt
    coeffs = [TensorUEAElement(d, degree) if degree > 1 else UEAElement({k[0]: c for k, c in d.items()})
              for d in cur]
    return Series(coeffs, order, degree)


def insert_unit_leg(s: Series, position: int) -> Series:
    """x -> x with a 1 inserted as tensor leg ``position`` (e.g. F -> F(x)1)."""
    coeffs = []
    for c in s.coeffs:
        items = {(m,): v for m, v in c.terms.items()} if s.degree == 1 else c.terms
        coeffs.append(TensorUEAElement(
            {k[:position] + ((),) + k[position:]: v for k, v in items.items()}, s.degree + 1))
    return Series(coeffs, s.order, s.degree + 1)


def multiply_legs(s: Series, middle: Series | None = None) -> Series:
    """m(a (x) b) = a b, optionally with a series inserted: sum a·middle·b."""
    if s.degree != 2:
        raise ValueError("multiply_legs needs degree 2")
    order = s.order if middle is None else min(s.order, middle.order)
    out = [UEAElement() for _ in range(order + 1)]
    for k in range(order + 1):
        for (a, b), c in s.coeffs[k].terms.items():
            ea, eb = UEAElement({a: c}), UEAElement({b: 1})
            if middle is None:
                out[k] = out[k] + ea * eb
                continue
            for j in range(order + 1 - k):
                mj = middle.coeffs[j]
                if mj:
                    out[k + j] = out[k + j] + ea * mj * eb
    return Series(out, order, 1)
