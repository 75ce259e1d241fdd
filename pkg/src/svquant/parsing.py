"""
Parser for the small element language used on the command line.

    element  := ['+'|'-'] term (('+'|'-') term)*
    term     := rational ['*'] atom ('*' atom)*  |  atom ('*' atom)*  |  rational
    atom     := ('L'|'M') '(' int ')'  |  'Y' '(' int ['/' '2'] ')'
    rational := int ['/' posint]

Whitespace is insignificant.  Words are straightened into PBW form.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .enveloping import ONE, UEAElement, normalize
from .lie import Generator

__all__ = ["ParseError", "parse_element", "parse_generator"]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[LMY])|(?P<op>[-+*/()]))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def _take(self, kind, value=None):
        k, v, pos = self.tok
        if k != kind or (value is not None and v != value):
            want = value or kind
            got = v or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", pos)
        self.i += 1
        return v, pos

    def _peek(self, kind, value=None) -> bool:
        k, v, _ = self.tok
        return k == kind and (value is None or v == value)

    def element(self) -> UEAElement:
        sign = 1
        if self._peek("op", "-") or self._peek("op", "+"):
            sign = -1 if self._take("op")[0] == "-" else 1
        total = self.term().scale(sign)
        while self._peek("op", "+") or self._peek("op", "-"):
            sign = -1 if self._take("op")[0] == "-" else 1
            total = total + self.term().scale(sign)
        self._take("end")
        return total

    def _int(self, signed=False) -> int:
        neg = False
        if signed and self._peek("op", "-"):
            self._take("op", "-")
            neg = True
        v, _ = self._take("int")
        return -int(v) if neg else int(v)

    def term(self) -> UEAElement:
        coeff = Fraction(1)
        if self._peek("int"):
            num = self._int()
            den = 1
            if self._peek("op", "/"):
                self._take("op", "/")
                pos = self.tok[2]
                den = self._int()
                if den == 0:
                    raise ParseError("zero denominator", pos)
            coeff = Fraction(num, den)
            if self._peek("op", "*"):
                self._take("op", "*")
            elif not self._peek("name"):
                return ONE.scale(coeff)
        word = [self.atom()]
        while self._peek("op", "*"):
            self._take("op", "*")
            word.append(self.atom())
        return normalize(word).scale(coeff)

    def atom(self) -> Generator:
        family, pos = self._take("name")
        self._take("op", "(")
        num = self._int(signed=True)
        twice = 2 * num
        if self._peek("op", "/"):
            self._take("op", "/")
            _, _, dpos = self.tok
            den = self._int()
            if den != 2:
                raise ParseError("only /2 denominators are allowed", dpos)
            twice = num
        self._take("op", ")")
        if family == "Y" and twice % 2 == 0:
            raise ParseError(f"Y index must be a half-odd integer, got {Fraction(twice, 2)}", pos)
        if family != "Y" and twice % 2:
            raise ParseError(f"{family} index must be an integer", pos)
        return Generator.make(family, Fraction(twice, 2))


def parse_element(text: str) -> UEAElement:
    """Parse and straighten an expression such as ``"1/2*L(1)*L(0) - Y(3/2)"``."""
    return _Parser(text).element()


def parse_generator(text: str) -> Generator:
    p = _Parser(text)
    g = p.atom()
    p._take("end")
    return g
