"""
Sparse vectors of the free left module R^r used inside Gröbner computations.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .order import DEFAULT_ORDER, ModuleOrder
from ..orealg import Monomial, OrePoly, RingSpec
from ..orealg.ring import word_product
from ..exceptions import DimensionMismatchError, RingMismatchError

Term = Tuple[int, Monomial]


class ModuleVector:
    """A map (component, word) -> nonzero rational."""

    __slots__ = ("ring", "rank", "terms", "_lead")

    def __init__(self, ring: RingSpec, rank: int, terms: Optional[Dict[Term, Fraction]] = None):
        self.ring = ring
        self.rank = rank
        self.terms: Dict[Term, Fraction] = terms if terms is not None else {}
        self._lead = None

    @classmethod
    def from_row(cls, ring: RingSpec, row: Sequence[OrePoly]) -> "ModuleVector":
        terms: Dict[Term, Fraction] = {}
        for comp, entry in enumerate(row):
            if entry.ring != ring:
                raise RingMismatchError(f"Entry {entry} is not in {ring}.")
            for mono, coef in entry.terms.items():
                terms[(comp, mono)] = coef
        return cls(ring, len(row), terms)

    def to_row(self) -> Tuple[OrePoly, ...]:
        parts: List[Dict[Monomial, Fraction]] = [{} for _ in range(self.rank)]
        for (comp, mono), coef in self.terms.items():
            parts[comp][mono] = coef
        return tuple(OrePoly(self.ring, p) for p in parts)

    def is_zero(self) -> bool:
        return not self.terms

    def leading(self, order: ModuleOrder = DEFAULT_ORDER) -> Tuple[int, Monomial, Fraction]:
        if self._lead is None:
            comp, mono = max(self.terms, key=lambda t: order.key(*t))
            self._lead = (comp, mono, self.terms[(comp, mono)])
        return self._lead

    def degree(self) -> int:
        return max((mono.degree for _, mono in self.terms), default=-1)

    def monic(self, order: ModuleOrder = DEFAULT_ORDER) -> "ModuleVector":
        lc = self.leading(order)[2]
        if lc == 1:
            return self
        return ModuleVector(self.ring, self.rank, {t: c / lc for t, c in self.terms.items()})

    def word_mul(self, word: Monomial, coef: Fraction) -> Dict[Term, Fraction]:
        """Terms of coef * word * self."""
        out: Dict[Term, Fraction] = {}
        for (comp, mono), c in self.terms.items():
            for prod_mono, k in word_product(self.ring, word, mono).items():
                key = (comp, prod_mono)
                value = out.get(key, 0) + coef * c * k
                if value:
                    out[key] = value
                else:
                    out.pop(key, None)
        return out

    def check_conformable(self, other: "ModuleVector"):
        if self.ring != other.ring:
            raise RingMismatchError(f"Vectors over {self.ring} and {other.ring} cannot be combined.")
        if self.rank != other.rank:
            raise DimensionMismatchError(f"Vectors of rank {self.rank} and {other.rank} cannot be combined.")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.ring == other.ring and self.rank == other.rank and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return "ModuleVector(" + ", ".join(str(e) for e in self.to_row()) + ")"


def subtract_into(target: Dict[Term, Fraction], terms: Dict[Term, Fraction]):
    """target -= terms, dropping cancelled entries."""
    for key, c in terms.items():
        value = target.get(key, 0) - c
        if value:
            target[key] = value
        else:
            target.pop(key, None)


def as_vectors(ring: RingSpec, rank: int, rows: Iterable[Sequence[OrePoly]]) -> List[ModuleVector]:
    vectors = []
    for row in rows:
        if len(row) != rank:
            raise DimensionMismatchError(f"Expected vectors of length {rank}, got {len(row)}.")
        vectors.append(ModuleVector.from_row(ring, row))
    return vectors
