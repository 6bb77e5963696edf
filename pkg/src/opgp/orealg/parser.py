"""
Pratt parser for operator expressions such as "y*Dz - z*Dy" or "1/2*x^2*Dx".

Grammar: rational literals (3, 1/2, 0.25), generator names of the ring,
binary + - *, prefix + -, right-associative ^ with a non-negative integer
exponent, parentheses. Parsed values are OrePolys in normal order.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from .poly import OrePoly, mul
from .ring import RingSpec
from ..exceptions import OperatorSyntaxError, UnknownIdentifierError, UnsupportedPowerError

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:\.\d+)?(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)

# left binding powers
_LBP = {"+": 10, "-": 10, "*": 20, "^": 40}
_PREFIX_BP = 30


@dataclass(frozen=True)
class Token:
    kind: str  # number | name | op | end
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise OperatorSyntaxError(f"Unexpected character '{text[bad]}'", text, bad)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class OperatorParser:
    """Top-down operator precedence parser evaluating straight into OrePoly."""

    def __init__(self, text: str, ring: RingSpec):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.index = 0
        self._nud: Dict[str, Callable[[Token], OrePoly]] = {
            "+": lambda tok: self.expression(_PREFIX_BP),
            "-": lambda tok: -self.expression(_PREFIX_BP),
            "(": self._group,
        }
        self._led: Dict[str, Callable[[Token, OrePoly], OrePoly]] = {
            "+": lambda tok, left: left + self.expression(_LBP["+"]),
            "-": lambda tok, left: left - self.expression(_LBP["-"]),
            "*": lambda tok, left: mul(left, self.expression(_LBP["*"])),
            "^": self._power,
        }

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self, expected: Optional[str] = None) -> Token:
        tok = self.current
        if expected is not None and tok.text != expected:
            found = tok.text or "end of input"
            raise OperatorSyntaxError(f"Expected '{expected}' but found '{found}'", self.text, tok.pos)
        self.index += 1
        return tok

    def parse(self) -> OrePoly:
        if self.current.kind == "end":
            raise OperatorSyntaxError("Empty operator expression", self.text, 0)
        value = self.expression(0)
        if self.current.kind != "end":
            raise OperatorSyntaxError(f"Unexpected token '{self.current.text}'", self.text, self.current.pos)
        return value

    def expression(self, rbp: int) -> OrePoly:
        tok = self.advance()
        left = self.nud(tok)
        while self.current.kind == "op" and _LBP.get(self.current.text, 0) > rbp:
            op = self.advance()
            left = self._led[op.text](op, left)
        return left

    def nud(self, tok: Token) -> OrePoly:
        if tok.kind == "number":
            return OrePoly.constant(self.ring, _literal(tok.text))
        if tok.kind == "name":
            try:
                return OrePoly.generator(self.ring, tok.text)
            except UnknownIdentifierError:
                raise UnknownIdentifierError(f"Unknown identifier '{tok.text}'", self.text, tok.pos)
        if tok.kind == "op" and tok.text in self._nud:
            return self._nud[tok.text](tok)
        found = tok.text or "end of input"
        raise OperatorSyntaxError(f"Unexpected '{found}'", self.text, tok.pos)

    def _group(self, tok: Token) -> OrePoly:
        value = self.expression(0)
        self.advance(")")
        return value

    def _power(self, tok: Token, base: OrePoly) -> OrePoly:
        exponent = self.current
        if exponent.kind != "number" or not exponent.text.isdigit():
            raise OperatorSyntaxError("Exponent must be a non-negative integer literal", self.text, exponent.pos)
        self.advance()
        if len(base) > 1:
            raise UnsupportedPowerError("Exponent on a sum is not supported", self.text, tok.pos)
        if self.current.text == "^":
            raise UnsupportedPowerError("Chained exponents are not supported", self.text, self.current.pos)
        return base ** int(exponent.text)


def _literal(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/", 1)
        if int(den) == 0:
            raise OperatorSyntaxError(f"Zero denominator in literal '{text}'")
        return Fraction(Fraction(num), int(den))
    return Fraction(text)


def parse_operator(text: str, ring: RingSpec) -> OrePoly:
    """Parse `text` into the normal-ordered element of `ring`."""
    value = OperatorParser(text, ring).parse()
    logger.debug(f"Parsed '{text}' -> {value}")
    return value
