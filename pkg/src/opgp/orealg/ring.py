"""
Rings of operators: commutative polynomial rings Q[x1..xd] and Weyl algebras
Q[x1..xd]<D1..Dd>, together with the normal-ordered words x^a D^b spanning them.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb, perm
from itertools import product
from typing import Dict, Iterable, Optional, Tuple

from .. import constants
from ..exceptions import AlgebraError, UnknownIdentifierError

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


class RingKind(str, Enum):
    COMMUTATIVE = "commutative"
    WEYL = "weyl"


@dataclass(frozen=True)
class RingSpec:
    """
    Declares a ring by its base variables and, for Weyl algebras, their partials.

    `variables` are the base variables x1..xd; `partials` are the names of
    D1..Dd (empty for commutative rings).
    """
    kind: RingKind
    variables: Tuple[str, ...]
    partials: Tuple[str, ...] = ()

    def __post_init__(self):
        if not self.variables:
            raise AlgebraError("A ring needs at least one base variable.")
        if self.kind == RingKind.WEYL and len(self.partials) != len(self.variables):
            raise AlgebraError(
                f"Weyl algebra over {len(self.variables)} variables needs {len(self.variables)} partials, "
                f"got {len(self.partials)}."
            )
        if self.kind == RingKind.COMMUTATIVE and self.partials:
            raise AlgebraError("A commutative ring has no partial derivative generators.")
        names = self.names
        if len(set(names)) != len(names):
            raise AlgebraError(f"Generator names must be unique: {names}")

    @classmethod
    def weyl(cls, variables: Iterable[str], partials: Optional[Iterable[str]] = None) -> "RingSpec":
        variables = tuple(variables)
        if partials is None:
            partials = tuple(f"{constants.PARTIAL_PREFIX}{v}" for v in variables)
        return cls(RingKind.WEYL, variables, tuple(partials))

    @classmethod
    def commutative(cls, variables: Iterable[str]) -> "RingSpec":
        return cls(RingKind.COMMUTATIVE, tuple(variables))

    @property
    def d(self) -> int:
        return len(self.variables)

    @property
    def is_weyl(self) -> bool:
        return self.kind == RingKind.WEYL

    @property
    def names(self) -> Tuple[str, ...]:
        return self.variables + self.partials

    def base_ring(self) -> "RingSpec":
        """The commutative subring R' of multiplication operators."""
        return RingSpec.commutative(self.variables)

    def locate(self, name: str) -> Tuple[bool, int]:
        """Return (is_partial, index) of a generator name."""
        if name in self.variables:
            return False, self.variables.index(name)
        if name in self.partials:
            return True, self.partials.index(name)
        raise UnknownIdentifierError(f"Unknown identifier '{name}' for ring with generators {list(self.names)}")

    def __str__(self) -> str:
        if self.is_weyl:
            return f"Q[{','.join(self.variables)}]<{','.join(self.partials)}>"
        return f"Q[{','.join(self.variables)}]"


@dataclass(frozen=True, slots=True)
class Monomial:
    """The normal-ordered word x^a D^b."""
    a: Exponents
    b: Exponents

    @classmethod
    def one(cls, d: int) -> "Monomial":
        return cls((0,) * d, (0,) * d)

    @classmethod
    def unit(cls, d: int, index: int, partial: bool = False) -> "Monomial":
        e = tuple(1 if i == index else 0 for i in range(d))
        zero = (0,) * d
        return cls(zero, e) if partial else cls(e, zero)

    @property
    def exponents(self) -> Exponents:
        return self.a + self.b

    @property
    def degree(self) -> int:
        return sum(self.a) + sum(self.b)

    @property
    def is_one(self) -> bool:
        return not any(self.a) and not any(self.b)

    def divides(self, other: "Monomial") -> bool:
        return all(p <= q for p, q in zip(self.a, other.a)) and all(p <= q for p, q in zip(self.b, other.b))

    def shift(self, other: "Monomial") -> "Monomial":
        """Exponent-wise sum; the leading word of a product in either ring kind."""
        return Monomial(
            tuple(p + q for p, q in zip(self.a, other.a)),
            tuple(p + q for p, q in zip(self.b, other.b)),
        )

    def quotient(self, other: "Monomial") -> "Monomial":
        """Exponent-wise difference self - other; other must divide self."""
        return Monomial(
            tuple(p - q for p, q in zip(self.a, other.a)),
            tuple(p - q for p, q in zip(self.b, other.b)),
        )

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(max(p, q) for p, q in zip(self.a, other.a)),
            tuple(max(p, q) for p, q in zip(self.b, other.b)),
        )

    def grevlex_key(self) -> Tuple:
        """Sort key of graded reverse lexicographic order over (a, b); larger key is larger."""
        e = self.exponents
        return (sum(e), tuple(-x for x in reversed(e)))


@lru_cache(maxsize=65536)
def weyl_word_product(left: Monomial, right: Monomial) -> Tuple[Tuple[Monomial, int], ...]:
    """
    Normal-order (x^a D^b)(x^c D^e).

    D^b x^c expands per variable by the Leibniz rule into
    sum_k C(b,k) c!/(c-k)! x^(c-k) D^(b-k).
    """
    ranges = [range(min(bi, ci) + 1) for bi, ci in zip(left.b, right.a)]
    out = []
    for ks in product(*ranges):
        coef = 1
        for bi, ci, k in zip(left.b, right.a, ks):
            coef *= comb(bi, k) * perm(ci, k)
        a = tuple(p + q - k for p, q, k in zip(left.a, right.a, ks))
        b = tuple(p + q - k for p, q, k in zip(left.b, right.b, ks))
        out.append((Monomial(a, b), coef))
    return tuple(out)


def word_product(ring: RingSpec, left: Monomial, right: Monomial) -> Dict[Monomial, int]:
    if not ring.is_weyl or not any(left.b) or not any(right.a):
        return {left.shift(right): 1}
    return dict(weyl_word_product(left, right))
