"""
grammar.py

Text syntax for parameters, characters and Gaussian rationals.

    param    := ('C' | 'R') ':' summand ('+' summand)*
    summand  := 'chi(' int ',' gq ')' | 'lambda(' bit ',' gq ')' | 'phi(' int ',' gq ')'
    char     := 'chi(' int ',' gq ')' | 'lambda(' bit ',' gq ')'
    gq       := rat | rat ('+' | '-') rat 'i'
    rat      := int | int '/' posint

``chi(a, t)`` and ``phi(a, t)`` carry the subscript pair as written, so
``chi(-2, 1/2)`` is CharC(N=2, t=1/2). Printing is done by ``str`` on the
objects themselves, and parse(str(p)) == p for every normalized parameter.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Optional, Tuple, Union

from archimedean_converse.arithmetic.scalars import GaussQ
from archimedean_converse.errors import FieldMismatchError, ParseError
from archimedean_converse.parameters.constituents import (
    CharC,
    CharR,
    Character,
    Constituent,
    Disc2R,
    Field,
)
from archimedean_converse.parameters.parameter import Parameter, normalize

_TOKENS = {
    "decimal": r"\d+\.\d*(?:[Ee][+\-]?\d+)?|\d+[Ee][+\-]?\d+",
    "num": r"\d+",
    "name": r"[A-Za-z_]+",
    "lpar": r"\(",
    "rpar": r"\)",
    "comma": r",",
    "colon": r":",
    "plus": r"\+",
    "minus": r"-",
    "slash": r"/",
    "skip": r"\s+",
    "error": r".",
}
_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKENS.items()))

_SUMMANDS = {
    Field.COMPLEX: ("chi",),
    Field.REAL: ("lambda", "phi"),
}


class Token(NamedTuple):
    type: str
    value: str
    where: Tuple[int, int]


def tokenize(code: str) -> Iterator[Token]:
    for mo in _REGEX.finditer(code):
        kind = str(mo.lastgroup)
        value = mo.group()
        where = mo.start(), mo.end()
        if kind == "skip":
            continue
        if kind == "decimal":
            raise ParseError(code, where, f"non-rational literal '{value}', write it as p/q")
        if kind == "error":
            raise ParseError(code, where, f"unknown symbol '{value}'")
        yield Token(kind, value, where)
    yield Token("end", "", (len(code), len(code)))


class _Parser:
    def __init__(self, code: str) -> None:
        self.code = code
        self.tokens: List[Token] = list(tokenize(code))
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.type != "end":
            self.pos += 1
        return token

    def error(self, token: Token, message: str) -> ParseError:
        return ParseError(self.code, token.where, message)

    def expect(self, kind: str, value: Optional[str] = None) -> Token:
        token = self.advance()
        if token.type != kind or (value is not None and token.value != value):
            wanted = f"'{value}'" if value is not None else kind
            found = f"'{token.value}'" if token.value else "end of input"
            raise self.error(token, f"expected {wanted}, found {found}")
        return token

    def accept(self, kind: str) -> bool:
        if self.peek().type == kind:
            self.advance()
            return True
        return False

    def integer(self) -> int:
        negative = self.accept("minus")
        value = int(self.expect("num").value)
        return -value if negative else value

    def rational(self, signed: bool = True) -> Fraction:
        numerator = self.integer() if signed else int(self.expect("num").value)
        if not self.accept("slash"):
            return Fraction(numerator)
        token = self.expect("num")
        if int(token.value) == 0:
            raise self.error(token, "zero denominator")
        return Fraction(numerator, int(token.value))

    def gauss(self) -> GaussQ:
        re_part = self.rational()
        token = self.peek()
        if token.type not in ("plus", "minus"):
            return GaussQ(re_part)
        self.advance()
        im_part = self.rational(signed=False)
        self.expect("name", "i")
        return GaussQ(re_part, im_part if token.type == "plus" else -im_part)

    def summand(self, allowed: Tuple[str, ...]) -> Constituent:
        head = self.expect("name")
        if head.value not in ("chi", "lambda", "phi"):
            raise self.error(head, f"unknown constituent '{head.value}'")
        if head.value not in allowed:
            raise FieldMismatchError(
                f"{head.value}(...) at position {head.where[0]} does not belong here "
                f"(expected one of {', '.join(allowed)}): {self.code}"
            )
        self.expect("lpar")
        a_token = self.peek()
        a = self.integer()
        self.expect("comma")
        t = self.gauss()
        self.expect("rpar")
        if head.value == "chi":
            return CharC(-a, t)
        if head.value == "phi":
            return Disc2R(-a, t)
        if a not in (0, 1):
            raise self.error(a_token, f"lambda sign must be 0 or 1, got {a}")
        return CharR(a, t)

    def parameter(self) -> Parameter:
        head = self.expect("name")
        if head.value not in ("C", "R"):
            raise self.error(head, f"expected field 'C' or 'R', found '{head.value}'")
        field = Field(head.value)
        self.expect("colon")
        items = [self.summand(_SUMMANDS[field])]
        while self.accept("plus"):
            items.append(self.summand(_SUMMANDS[field]))
        self.expect("end")
        return normalize(field, items)

    def finish(self) -> None:
        self.expect("end")


def parse_param(text: str) -> Parameter:
    """Parse and normalize a parameter, e.g. ``"R: lambda(1, 3) + phi(-2, 1)"``."""
    return _Parser(text).parameter()


def parse_character(text: str) -> Character:
    parser = _Parser(text)
    chi = parser.summand(("chi", "lambda"))
    parser.finish()
    return chi  # type: ignore[return-value]


def parse_gq(text: str) -> GaussQ:
    parser = _Parser(text)
    value = parser.gauss()
    parser.finish()
    return value


def parse_complex(text: str) -> complex:
    """
    A numeric evaluation point.

    Exact ``gq`` syntax (``1/2+3i``) is tried first; otherwise a float form such
    as ``0.25-1.5i`` or ``0.25-1.5j`` is accepted.
    """
    try:
        return complex(parse_gq(text))
    except ParseError:
        pass
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError:
        raise ParseError(text, None, f"not a complex number: {text!r}") from None


def format_character(chi: Union[Character, None]) -> str:
    return "equal" if chi is None else str(chi)
