"""
The Schrodinger-Virasoro Lie algebra and its coboundary bialgebra structure.

Basis elements L_n, M_n (n integer) and Y_p (p half-odd integer) are stored as
``Generator(rank, twice)`` where ``twice`` is twice the index, so every index
is an exact integer internally and tuples of generators compare in PBW order
(M < Y < L, then ascending index).

Non-vanishing brackets::

    [L_m, L_n] = (n - m) L_{m+n}      [L_m, M_n] = n M_{m+n}
    [L_n, Y_p] = (p - n/2) Y_{p+n}    [Y_p, Y_q] = (q - p) M_{p+q}
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, NamedTuple

__all__ = [
    "Generator", "L", "M", "Y", "LieElement", "TensorLieElement", "TwistCase",
    "bracket", "bracket_generators", "case_generators", "r_matrix", "swap",
    "cybe_defect", "delta_r", "cocycle_defect", "grid_generators",
    "corrupted_brackets", "on_bracket_change",
]

M_RANK, Y_RANK, L_RANK = 0, 1, 2
FAMILIES = {"M": M_RANK, "Y": Y_RANK, "L": L_RANK}
_FAMILY_NAMES = {v: k for k, v in FAMILIES.items()}


class Generator(NamedTuple):
    rank: int
    twice: int

    @classmethod
    def make(cls, family: str, index) -> "Generator":
        """Build a basis element, rejecting indices of the wrong parity."""
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        index = Fraction(index)
        twice = 2 * index
        if twice.denominator != 1:
            raise ValueError(f"{family}({index}): index must be in Z/2")
        twice = int(twice)
        if family == "Y":
            if twice % 2 == 0:
                raise ValueError(f"Y({index}): index must lie in Z + 1/2")
        elif twice % 2:
            raise ValueError(f"{family}({index}): index must be an integer")
        return cls(FAMILIES[family], twice)

    @property
    def family(self) -> str:
        return _FAMILY_NAMES[self.rank]

    @property
    def index(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __str__(self):
        if self.rank == Y_RANK:
            return f"Y({self.twice}/2)"
        return f"{self.family}({self.twice // 2})"

    def __repr__(self):
        return str(self)


def L(n) -> Generator:
    return Generator.make("L", n)


def M(n) -> Generator:
    return Generator.make("M", n)


def Y(p) -> Generator:
    return Generator.make("Y", p)


# ---------------------------------------------------------------------------
# structure constants

def _true_rules(x: Generator, y: Generator):
    """[x, y] for x.rank >= y.rank, as a tuple of (coefficient, generator)."""
    if x.rank == L_RANK:
        if y.rank == L_RANK:  # [L_m, L_n] = (n-m) L_{m+n}
            c = Fraction(y.twice - x.twice, 2)
            return ((c, Generator(L_RANK, x.twice + y.twice)),) if c else ()
        if y.rank == M_RANK:  # [L_m, M_n] = n M_{m+n}
            c = Fraction(y.twice, 2)
            return ((c, Generator(M_RANK, x.twice + y.twice)),) if c else ()
        # [L_n, Y_p] = (p - n/2) Y_{p+n}
        c = Fraction(2 * y.twice - x.twice, 4)
        return ((c, Generator(Y_RANK, x.twice + y.twice)),) if c else ()
    if x.rank == Y_RANK and y.rank == Y_RANK:  # [Y_p, Y_q] = (q-p) M_{p+q}
        c = Fraction(y.twice - x.twice, 2)
        return ((c, Generator(M_RANK, x.twice + y.twice)),) if c else ()
    return ()


def _corrupt_rules(x: Generator, y: Generator):
    # negative control: [L_m, M_n] = (m+n) M_{m+n}; agrees with the true table at m = 0
    if x.rank == L_RANK and y.rank == M_RANK:
        c = Fraction(x.twice + y.twice, 2)
        return ((c, Generator(M_RANK, x.twice + y.twice)),) if c else ()
    return _true_rules(x, y)


_rules: Callable = _true_rules
_listeners: list[Callable[[], None]] = []
_bracket_cache: dict = {}


def on_bracket_change(callback: Callable[[], None]) -> None:
    """Register a cache-invalidation hook run whenever the bracket table is swapped."""
    _listeners.append(callback)


def _set_rules(rules) -> None:
    global _rules
    _rules = rules
    _bracket_cache.clear()
    for cb in _listeners:
        cb()


@contextlib.contextmanager
def corrupted_brackets():
    """Temporarily replace [L_m, M_n] by (m+n) M_{m+n}. Test hook only."""
    old = _rules
    _set_rules(_corrupt_rules)
    try:
        yield
    finally:
        _set_rules(old)


def bracket_generators(x: Generator, y: Generator) -> tuple:
    """Return [x, y] as a tuple of ``(coefficient, generator)`` pairs."""
    key = (x, y)
    hit = _bracket_cache.get(key)
    if hit is not None:
        return hit
    if x.rank >= y.rank:
        res = _rules(x, y)
    else:
        res = tuple((-c, g) for c, g in _rules(y, x))
    _bracket_cache[key] = res
    return res


# ---------------------------------------------------------------------------
# linear combinations

class _Combination:
    """Finite rational combination over hashable keys; zero coefficients are pruned."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self.terms = {k: v for k, v in terms.items() if v}
        self._hash = None

    def _new(self, terms):
        return type(self)(terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return self._new(out)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return self._new({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)


class LieElement(_Combination):
    """Element of the Lie algebra: mapping Generator -> Fraction."""

    @classmethod
    def of(cls, g: Generator, c=1) -> "LieElement":
        return cls({g: c})

    def __mul__(self, c):
        return self.scale(c)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{g}" if c != 1 else str(g) for g, c in self)

    __repr__ = __str__


def _lie(x) -> LieElement:
    return x if isinstance(x, LieElement) else LieElement.of(x)


def bracket(x, y) -> LieElement:
    """Bilinear extension of the generator brackets (generators are accepted too)."""
    x, y = _lie(x), _lie(y)
    out: dict = {}
    for gx, cx in x.terms.items():
        for gy, cy in y.terms.items():
            for c, g in bracket_generators(gx, gy):
                out[g] = out.get(g, 0) + cx * cy * c
    return LieElement(out)


class TensorLieElement(_Combination):
    """Element of L (x) L or L (x) L (x) L keyed by generator tuples."""

    __slots__ = ("degree",)

    def __init__(self, terms=None, degree=None):
        super().__init__(terms)
        if degree is None:
            degree = len(next(iter(self.terms))) if self.terms else 2
        if degree not in (2, 3):
            raise ValueError("tensor degree must be 2 or 3")
        if any(len(k) != degree for k in self.terms):
            raise ValueError("inconsistent tensor degree")
        self.degree = degree

    def _new(self, terms):
        return TensorLieElement(terms, self.degree)

    def __eq__(self, other):
        res = super().__eq__(other)
        if res is True and isinstance(other, TensorLieElement) and self.terms:
            return self.degree == other.degree
        return res

    __hash__ = _Combination.__hash__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self:
            body = "⊗".join(map(str, k))
            parts.append(body if c == 1 else f"({c})·{body}")
        return " + ".join(parts)

    __repr__ = __str__


def tensor(*factors) -> TensorLieElement:
    """Tensor product of Lie elements."""
    factors = [_lie(f) for f in factors]
    out: dict = {}
    for combo in product(*(f.terms.items() for f in factors)):
        key = tuple(g for g, _ in combo)
        c = Fraction(1)
        for _, cf in combo:
            c *= cf
        out[key] = out.get(key, 0) + c
    return TensorLieElement(out, len(factors))


def swap(r: TensorLieElement) -> TensorLieElement:
    """Exchange the two legs of a degree-2 tensor."""
    if r.degree != 2:
        raise ValueError("swap needs a degree-2 tensor")
    return TensorLieElement({(b, a): c for (a, b), c in r.terms.items()}, 2)


def _act_on_leg(x: LieElement, t: TensorLieElement, leg: int) -> dict:
    out: dict = {}
    for key, c in t.terms.items():
        for gx, cx in x.terms.items():
            for cb, g in bracket_generators(gx, key[leg]):
                nk = key[:leg] + (g,) + key[leg + 1:]
                out[nk] = out.get(nk, 0) + c * cx * cb
    return out


def adjoint_action(x, t: TensorLieElement) -> TensorLieElement:
    """Diagonal adjoint action x . t on a tensor."""
    x = _lie(x)
    total = TensorLieElement({}, t.degree)
    for leg in range(t.degree):
        total = total + TensorLieElement(_act_on_leg(x, t, leg), t.degree)
    return total


# ---------------------------------------------------------------------------
# twist cases and the bialgebra structure

@dataclass(frozen=True)
class TwistCase:
    """Choice of (h, e): 1 -> (L0/n0, M_n0), 2 -> (2L0/n0, Y_{n0/2}), 3 -> (L0/n0, L_n0)."""

    case_id: int
    n0: int

    def __post_init__(self):
        if self.case_id not in (1, 2, 3):
            raise ValueError(f"unknown case {self.case_id}")
        if self.n0 == 0:
            raise ValueError("n0 must be nonzero")
        if self.case_id == 2 and self.n0 % 2 == 0:
            raise ValueError(f"case 2 needs odd n0, got {self.n0}")

    def __str__(self):
        return f"case{self.case_id}(n0={self.n0})"


def case_generators(c: TwistCase) -> tuple[LieElement, LieElement]:
    n0 = c.n0
    if c.case_id == 1:
        h, e = LieElement.of(L(0), Fraction(1, n0)), LieElement.of(M(n0))
    elif c.case_id == 2:
        h, e = LieElement.of(L(0), Fraction(2, n0)), LieElement.of(Y(Fraction(n0, 2)))
    else:
        h, e = LieElement.of(L(0), Fraction(1, n0)), LieElement.of(L(n0))
    assert bracket(h, e) == e
    return h, e


def r_matrix(h, e) -> TensorLieElement:
    """r = h (x) e - e (x) h; requires [h, e] = e."""
    h, e = _lie(h), _lie(e)
    if bracket(h, e) != e:
        raise ValueError("r_matrix needs [h, e] = e")
    return tensor(h, e) - tensor(e, h)


def cybe_defect(r: TensorLieElement) -> TensorLieElement:
    """[r12, r13] + [r12, r23] + [r13, r23] in L^(x)3."""
    if r.degree != 2:
        raise ValueError("cybe_defect needs a degree-2 tensor")
    out: dict = {}

    def put(key, c):
        out[key] = out.get(key, 0) + c

    items = list(r.terms.items())
    for (a, b), c1 in items:
        for (x, y), c2 in items:
            c = c1 * c2
            for cb, g in bracket_generators(a, x):  # [r12, r13]
                put((g, b, y), c * cb)
            for cb, g in bracket_generators(b, x):  # [r12, r23]
                put((a, g, y), c * cb)
            for cb, g in bracket_generators(b, y):  # [r13, r23]
                put((a, x, g), c * cb)
    return TensorLieElement(out, 3)


def delta_r(x, a, b) -> TensorLieElement:
    """[x,a](x)b - b(x)[x,a] + a(x)[x,b] - [x,b](x)a."""
    x, a, b = _lie(x), _lie(a), _lie(b)
    xa, xb = bracket(x, a), bracket(x, b)
    return tensor(xa, b) - tensor(b, xa) + tensor(a, xb) - tensor(xb, a)


def cocycle_defect(x, y, a, b) -> TensorLieElement:
    """delta([x,y]) - x.delta(y) + y.delta(x); vanishes for a 1-cocycle."""
    return (delta_r(bracket(x, y), a, b)
            - adjoint_action(x, delta_r(y, a, b))
            + adjoint_action(y, delta_r(x, a, b)))


def grid_generators(index_range: int = 3) -> list[Generator]:
    """L_n, M_n for |n| <= range and Y_p for |2p| <= 2*range - 1."""
    gens = [L(n) for n in range(-index_range, index_range + 1)]
    gens += [M(n) for n in range(-index_range, index_range + 1)]
    gens += [Generator(Y_RANK, tp) for tp in range(-2 * index_range + 1, 2 * index_range, 2)]
    return sorted(gens)


def lie_sum(elements: Iterable[LieElement]) -> LieElement:
    total = LieElement()
    for el in elements:
        total = total + el
    return total
