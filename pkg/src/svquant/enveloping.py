"""
U(L) in PBW normal form with the primitive Hopf structure.

A PBW monomial is a plain sorted tuple of :class:`~svquant.lie.Generator`;
the empty tuple is the unit.  Products are straightened by moving each new
generator leftwards past larger ones, ``x g = g x + [x, g]``; the recursion is
memoized per (monomial, generator) pair.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, NamedTuple, Sequence

from . import lie
from .lie import Generator, LieElement, _Combination

__all__ = [
    "UEAElement", "TensorUEAElement", "ONE", "gen", "normalize", "mul",
    "coproduct0", "antipode0", "counit", "rising_factorial",
    "falling_factorial", "binomial", "tensor", "apply_on_leg",
    "factorial_identity_defects", "product_rule_defects",
    "ad_power_expansion_defect", "render_monomial",
]

Monomial = tuple  # sorted tuple of Generators

_times_cache: dict = {}
_mono_cache: dict = {}
_antipode_cache: dict = {}
_coproduct_cache: dict = {}


def _clear_caches():
    _times_cache.clear()
    _mono_cache.clear()
    _antipode_cache.clear()


lie.on_bracket_change(_clear_caches)


def _times_gen(m: Monomial, g: Generator) -> dict:
    """Normal form of the word m·g; the returned dict must not be mutated."""
    if not m or m[-1] <= g:
        return {m + (g,): 1}
    key = (m, g)
    hit = _times_cache.get(key)
    if hit is not None:
        return hit
    x, rest = m[-1], m[:-1]
    out: dict = {}
    # rest·x·g = (rest·g)·x + rest·[x, g]
    for mono, c in _times_gen(rest, g).items():
        for mono2, c2 in _times_gen(mono, x).items():
            out[mono2] = out.get(mono2, 0) + c * c2
    for cb, h in lie.bracket_generators(x, g):
        for mono, c in _times_gen(rest, h).items():
            out[mono] = out.get(mono, 0) + cb * c
    out = {k: v for k, v in out.items() if v}
    _times_cache[key] = out
    return out


def _mono_mul(a: Monomial, b: Monomial) -> dict:
    if not a or not b or a[-1] <= b[0]:
        return {a + b: 1}
    key = (a, b)
    hit = _mono_cache.get(key)
    if hit is not None:
        return hit
    cur: dict = {a: 1}
    for g in b:
        nxt: dict = {}
        for mono, c in cur.items():
            for mono2, c2 in _times_gen(mono, g).items():
                nxt[mono2] = nxt.get(mono2, 0) + c * c2
        cur = {k: v for k, v in nxt.items() if v}
    _mono_cache[key] = cur
    return cur


def render_monomial(m: Monomial) -> str:
    return "*".join(map(str, m)) if m else "1"


class UEAElement(_Combination):
    """Rational combination of PBW monomials."""

    @classmethod
    def scalar(cls, c) -> "UEAElement":
        return cls({(): c})

    @classmethod
    def from_lie(cls, x) -> "UEAElement":
        if isinstance(x, Generator):
            return cls({(x,): 1})
        return cls({(g,): c for g, c in x.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, UEAElement):
            return self.scale(other)
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                for m, c in _mono_mul(a, b).items():
                    out[m] = out.get(m, 0) + ca * cb * c
        return UEAElement(out)

    def __add__(self, other):
        if not isinstance(other, UEAElement):
            other = UEAElement.scalar(other)
        return super().__add__(other)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, UEAElement):
            other = UEAElement.scalar(other)
        return super().__sub__(other)

    def __pow__(self, n: int):
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.terms == ({(): Fraction(other)} if other else {})
        return super().__eq__(other)

    __hash__ = _Combination.__hash__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self:
            body = render_monomial(m)
            mag = abs(c)
            if m and mag == 1:
                text = body
            elif m:
                text = f"{mag}*{body}"
            else:
                text = str(mag)
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(text if c > 0 else f"-{text}")
            else:
                parts.append(f" {sign} {text}")
        return "".join(parts)

    def __repr__(self):
        return f"UEAElement({self})"


ONE = UEAElement.scalar(1)


def gen(g) -> UEAElement:
    """Lift a generator or Lie element into U(L)."""
    return UEAElement.from_lie(g)


def normalize(word: Sequence[Generator]) -> UEAElement:
    """Straighten an arbitrary generator word into PBW normal form."""
    cur: dict = {(): Fraction(1)}
    for g in word:
        nxt: dict = {}
        for mono, c in cur.items():
            for m2, c2 in _times_gen(mono, g).items():
                nxt[m2] = nxt.get(m2, 0) + c * c2
        cur = nxt
    return UEAElement(cur)


def mul(x: UEAElement, y: UEAElement) -> UEAElement:
    return x * y


def lift(x):
    """Scalars, generators, Lie elements -> UEAElement; UEAElements pass through."""
    if isinstance(x, UEAElement):
        return x
    if isinstance(x, (Generator, LieElement)):
        return UEAElement.from_lie(x)
    return UEAElement.scalar(x)


# ---------------------------------------------------------------------------
# tensors of U(L)

class TensorUEAElement(_Combination):
    """Element of U(L)^(x)d for d in {2, 3}, keyed by tuples of monomials."""

    __slots__ = ("degree",)

    def __init__(self, terms=None, degree: int = 2):
        super().__init__(terms)
        self.degree = degree

    def _new(self, terms):
        return TensorUEAElement(terms, self.degree)

    @classmethod
    def one(cls, degree: int) -> "TensorUEAElement":
        return cls({((),) * degree: 1}, degree)

    def __mul__(self, other):
        if not isinstance(other, TensorUEAElement):
            return self.scale(other)
        if other.degree != self.degree:
            raise ValueError("tensor degree mismatch")
        out: dict = {}
        if self.degree == 2:
            for (a0, a1), ca in self.terms.items():
                for (b0, b1), cb in other.terms.items():
                    c = ca * cb
                    p1 = _mono_mul(a1, b1)
                    for m0, c0 in _mono_mul(a0, b0).items():
                        cc = c * c0
                        for m1, c1 in p1.items():
                            k = (m0, m1)
                            out[k] = out.get(k, 0) + cc * c1
        else:
            for ka, ca in self.terms.items():
                for kb, cb in other.terms.items():
                    partial = {(): ca * cb}
                    for a, b in zip(ka, kb):
                        prod = _mono_mul(a, b)
                        partial = {k + (m,): c * cm for k, c in partial.items()
                                   for m, cm in prod.items()}
                    for k, c in partial.items():
                        out[k] = out.get(k, 0) + c
        return TensorUEAElement(out, self.degree)

    def __eq__(self, other):
        if isinstance(other, TensorUEAElement) and (self.terms or other.terms):
            return self.degree == other.degree and self.terms == other.terms
        return super().__eq__(other)

    __hash__ = _Combination.__hash__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self:
            body = "⊗".join(render_monomial(m) for m in k)
            parts.append(body if c == 1 else f"({c})·{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"TensorUEAElement({self})"

    def legs(self):
        """JSON-friendly nested form: [[coefficient, [leg, ...]], ...]."""
        return [[str(c), [render_monomial(m) for m in k]] for k, c in self]


def tensor(*factors) -> TensorUEAElement:
    """x1 (x) x2 (x) ... of UEAElements."""
    factors = [lift(f) for f in factors]
    out = {(): Fraction(1)}
    for f in factors:
        out = {k + (m,): c * cm for k, c in out.items() for m, cm in f.terms.items()}
    return TensorUEAElement(out, len(factors))


# ---------------------------------------------------------------------------
# primitive Hopf structure

def _coproduct_mono(m: Monomial) -> dict:
    hit = _coproduct_cache.get(m)
    if hit is not None:
        return hit
    # subsequences of a sorted word are sorted: no straightening needed
    out: dict = {}
    n = len(m)
    for k in range(n + 1):
        for left in combinations(range(n), k):
            chosen = set(left)
            key = (tuple(m[i] for i in left), tuple(m[i] for i in range(n) if i not in chosen))
            out[key] = out.get(key, 0) + 1
    _coproduct_cache[m] = out
    return out


def coproduct0(x) -> TensorUEAElement:
    """Primitive coproduct X -> X(x)1 + 1(x)X extended multiplicatively."""
    x = lift(x)
    out: dict = {}
    for m, c in x.terms.items():
        for k, ck in _coproduct_mono(m).items():
            out[k] = out.get(k, 0) + c * ck
    return TensorUEAElement(out, 2)


def _antipode_mono(m: Monomial) -> dict:
    hit = _antipode_cache.get(m)
    if hit is not None:
        return hit
    res = normalize(tuple(reversed(m))).terms
    if len(m) % 2:
        res = {k: -v for k, v in res.items()}
    _antipode_cache[m] = res
    return res


def antipode0(x) -> UEAElement:
    """Anti-homomorphism with S0(X) = -X on generators."""
    x = lift(x)
    out: dict = {}
    for m, c in x.terms.items():
        for k, ck in _antipode_mono(m).items():
            out[k] = out.get(k, 0) + c * ck
    return UEAElement(out)


def counit(x) -> Fraction:
    return lift(x).terms.get((), Fraction(0))


_LEG_MAPS = ("id", "coproduct", "antipode", "counit")


def apply_on_leg(x, leg: int, kind: str):
    """Apply Δ0, S0 or ε to one leg of a tensor (degree 1 means a UEAElement).

    Δ0 raises the tensor degree by one and ε lowers it; a degree-2 tensor hit
    by ε comes back as a UEAElement.
    """
    if kind not in _LEG_MAPS:
        raise ValueError(f"unknown leg map {kind!r}")
    if isinstance(x, UEAElement):
        if leg != 0:
            raise ValueError("illegal leg index")
        if kind == "id":
            return x
        if kind == "coproduct":
            return coproduct0(x)
        if kind == "antipode":
            return antipode0(x)
        raise ValueError("counit on a degree-1 element leaves a scalar; use counit()")
    d = x.degree
    if not 0 <= leg < d:
        raise ValueError("illegal leg index")
    if kind == "id":
        return x
    out: dict = {}
    if kind == "counit":
        for k, c in x.terms.items():
            if not k[leg]:
                nk = k[:leg] + k[leg + 1:]
                out[nk] = out.get(nk, 0) + c
        if d == 2:
            return UEAElement({k[0]: c for k, c in out.items()})
        return TensorUEAElement(out, d - 1)
    for k, c in x.terms.items():
        if kind == "coproduct":
            image = {(a, b): v for (a, b), v in _coproduct_mono(k[leg]).items()}
        else:
            image = {(a,): v for a, v in _antipode_mono(k[leg]).items()}
        for piece, v in image.items():
            nk = k[:leg] + piece + k[leg + 1:]
            out[nk] = out.get(nk, 0) + c * v
    return TensorUEAElement(out, d + 1 if kind == "coproduct" else d)


def multiply_legs(x: TensorUEAElement) -> UEAElement:
    """m: a (x) b -> a b (degree 2 only)."""
    if x.degree != 2:
        raise ValueError("multiply_legs needs degree 2")
    out: dict = {}
    for (a, b), c in x.terms.items():
        for m, cm in _mono_mul(a, b).items():
            out[m] = out.get(m, 0) + c * cm
    return UEAElement(out)


# ---------------------------------------------------------------------------
# factorial polynomials and combinatorial identities

def binomial(alpha, k: int) -> Fraction:
    """Generalized binomial coefficient alpha(alpha-1)...(alpha-k+1)/k!."""
    if k < 0:
        return Fraction(0)
    alpha = Fraction(alpha)
    num = Fraction(1)
    for j in range(k):
        num *= alpha - j
    return num / factorial(k)


def rising_factorial(x, n: int, a=0) -> UEAElement:
    """(x+a)(x+a+1)...(x+a+n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x, a = lift(x), Fraction(a)
    out = ONE
    for j in range(n):
        out = out * (x + (a + j))
    return out


def falling_factorial(x, n: int, a=0) -> UEAElement:
    """(x+a)(x+a-1)...(x+a-n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x, a = lift(x), Fraction(a)
    out = ONE
    for j in range(n):
        out = out * (x + (a - j))
    return out


class ProductRuleDefects(NamedTuple):
    rising: UEAElement    # x^(s+t)_a - x^(s)_a x^(t)_{a+s}
    falling: UEAElement   # x^[s+t]_a - x^[s]_a x^[t]_{a-s}
    shift: UEAElement     # x^[s]_a - x^(s)_{a-s+1}


class FactorialDefects(NamedTuple):
    product: tuple        # ProductRuleDefects for every split s + t = r
    rising_sum: UEAElement
    falling_sum: UEAElement


def product_rule_defects(x, a, s: int, t: int) -> ProductRuleDefects:
    a = Fraction(a)
    return ProductRuleDefects(
        rising_factorial(x, s + t, a) - rising_factorial(x, s, a) * rising_factorial(x, t, a + s),
        falling_factorial(x, s + t, a) - falling_factorial(x, s, a) * falling_factorial(x, t, a - s),
        falling_factorial(x, s, a) - rising_factorial(x, s, a - s + 1),
    )


def factorial_identity_defects(x, a, b, r: int) -> FactorialDefects:
    """LHS - RHS of the three factorial-polynomial identities at total degree r.

    The two binomial sums are::

        sum_{s+t=r} (-1)^t/(s! t!) x^[s]_a x^(t)_b     = C(a-b, r)
        sum_{s+t=r} (-1)^t/(s! t!) x^[s]_a x^[t]_{b-s} = C(a-b+r-1, r)
    """
    a, b = Fraction(a), Fraction(b)
    lhs1 = UEAElement()
    lhs2 = UEAElement()
    for s in range(r + 1):
        t = r - s
        w = Fraction((-1) ** t, factorial(s) * factorial(t))
        fs = falling_factorial(x, s, a)
        lhs1 = lhs1 + (fs * rising_factorial(x, t, b)).scale(w)
        lhs2 = lhs2 + (fs * falling_factorial(x, t, b - s)).scale(w)
    products = tuple(product_rule_defects(x, a, s, r - s) for s in range(r + 1))
    return FactorialDefects(
        products,
        lhs1 - binomial(a - b, r),
        lhs2 - binomial(a - b + r - 1, r),
    )


def ad(y: UEAElement, x: UEAElement) -> UEAElement:
    return y * x - x * y


def ad_power_expansion_defect(x, y, m: int) -> UEAElement:
    """x y^m - sum_k (-1)^k C(m,k) y^(m-k) (ad y)^k (x)."""
    x, y = lift(x), lift(y)
    rhs = UEAElement()
    adk = x
    for k in range(m + 1):
        rhs = rhs + (y ** (m - k) * adk).scale(Fraction((-1) ** k * binomial(m, k)))
        adk = ad(y, adk)
    return x * y ** m - rhs


def element_sum(xs: Iterable) -> UEAElement:
    total = UEAElement()
    for x in xs:
        total = total + x
    return total
