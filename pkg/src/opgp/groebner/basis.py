"""
Buchberger's algorithm for left submodules of R^r, R a commutative
polynomial ring or a Weyl algebra.

Both ring kinds share the property that the leading word of a product is the
exponent-wise sum of the leading words, so division and S-vectors are the
commutative ones with Weyl products underneath.
"""

import heapq
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .order import DEFAULT_ORDER, ModuleOrder
from .vector import ModuleVector, Term, subtract_into
from .. import constants
from ..orealg import Monomial, OrePoly, RingSpec
from ..exceptions import DimensionMismatchError, ResourceLimitError, RingMismatchError

logger = logging.getLogger(__name__)


class GroebnerBasis:
    """
    Generators of a left submodule together with the order they are a Gröbner basis for.
    """

    def __init__(self, ring: RingSpec, rank: int, generators: List[ModuleVector],
                 order: ModuleOrder = DEFAULT_ORDER, reduced: bool = False):
        self.ring = ring
        self.rank = rank
        self.generators = generators
        self.order = order
        self.reduced = reduced
        self._by_comp: Dict[int, List[int]] = {}
        for idx, g in enumerate(generators):
            self._by_comp.setdefault(g.leading(order)[0], []).append(idx)

    def __len__(self) -> int:
        return len(self.generators)

    def rows(self) -> List[Tuple[OrePoly, ...]]:
        return [g.to_row() for g in self.generators]

    def _divisor(self, comp: int, mono: Monomial) -> Optional[int]:
        for idx in self._by_comp.get(comp, ()):
            if self.generators[idx].leading(self.order)[1].divides(mono):
                return idx
        return None

    def _check(self, v: ModuleVector):
        if v.ring != self.ring:
            raise RingMismatchError(f"Vector over {v.ring} reduced against a basis over {self.ring}.")
        if v.rank != self.rank:
            raise DimensionMismatchError(f"Vector of rank {v.rank} reduced against a basis of rank {self.rank}.")

    def divide(self, v: ModuleVector, full: bool = True) -> Tuple[ModuleVector, List[OrePoly]]:
        """
        Return (remainder, quotients) with v = sum(q_k * g_k) + remainder.

        With full=False only leading terms are reduced (top reduction).
        """
        self._check(v)
        quotients: List[Dict[Monomial, Fraction]] = [{} for _ in self.generators]
        work = dict(v.terms)
        remainder: Dict[Term, Fraction] = {}
        key = self.order.key
        while work:
            comp, mono = max(work, key=lambda t: key(*t))
            coef = work[(comp, mono)]
            idx = self._divisor(comp, mono)
            if idx is None:
                if not full:
                    remainder.update(work)
                    break
                remainder[(comp, mono)] = coef
                del work[(comp, mono)]
                continue
            g = self.generators[idx]
            _, g_mono, g_coef = g.leading(self.order)
            word = mono.quotient(g_mono)
            factor = coef / g_coef
            subtract_into(work, g.word_mul(word, factor))
            quotients[idx][word] = quotients[idx].get(word, 0) + factor
        rem = ModuleVector(self.ring, self.rank, remainder)
        return rem, [OrePoly(self.ring, q) for q in quotients]

    def normal_form(self, v: ModuleVector) -> ModuleVector:
        return self.divide(v)[0]

    def contains(self, v: ModuleVector) -> bool:
        return self.normal_form(v).is_zero()

    def is_groebner(self) -> bool:
        """Buchberger criterion: every S-vector reduces to zero."""
        n = len(self.generators)
        for i in range(n):
            for j in range(i + 1, n):
                s = s_vector(self.generators[i], self.generators[j], self.order)
                if s is not None and not self.normal_form(s).is_zero():
                    return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.ring, self.rank, self.generators) == (other.ring, other.rank, other.generators)

    def __repr__(self) -> str:
        return f"GroebnerBasis(rank={self.rank}, size={len(self.generators)}, reduced={self.reduced})"


def s_vector(f: ModuleVector, g: ModuleVector, order: ModuleOrder = DEFAULT_ORDER) -> Optional[ModuleVector]:
    """S-vector of f and g, or None when their leading terms sit in different components."""
    fc, fm, fl = f.leading(order)
    gc, gm, gl = g.leading(order)
    if fc != gc:
        return None
    lcm = fm.lcm(gm)
    terms = f.word_mul(lcm.quotient(fm), 1 / fl)
    subtract_into(terms, g.word_mul(lcm.quotient(gm), 1 / gl))
    return ModuleVector(f.ring, f.rank, terms)


def buchberger(gens: Sequence[ModuleVector], order: ModuleOrder = DEFAULT_ORDER,
               max_reductions: int = constants.MAX_PAIR_REDUCTIONS,
               ring: RingSpec = None, rank: int = None) -> GroebnerBasis:
    """
    Reduced Gröbner basis of the left submodule generated by `gens`.

    Pairs are processed by the normal strategy (smallest lcm first). The
    product criterion is only used for ideals of commutative rings.
    `ring` and `rank` are needed when `gens` is empty.
    """
    if gens:
        ring, rank = gens[0].ring, gens[0].rank
        for g in gens[1:]:
            gens[0].check_conformable(g)
    elif ring is None or rank is None:
        raise DimensionMismatchError("An empty generator list needs an explicit ring and rank.")

    basis: List[ModuleVector] = []
    pairs: List[Tuple] = []
    product_criterion = not ring.is_weyl and rank == 1

    def add(vector: ModuleVector):
        vector = vector.monic(order)
        new = len(basis)
        comp, mono, _ = vector.leading(order)
        for i, h in enumerate(basis):
            h_comp, h_mono, _ = h.leading(order)
            if h_comp != comp:
                continue
            lcm = h_mono.lcm(mono)
            if product_criterion and lcm == h_mono.shift(mono):
                continue
            # min-heap on the module order: the normal strategy pops the smallest lcm
            heapq.heappush(pairs, (order.key(comp, lcm), i, new))
        basis.append(vector)

    for g in gens:
        if not g.is_zero():
            add(g)

    reductions = 0
    while pairs:
        _, i, j = heapq.heappop(pairs)
        s = s_vector(basis[i], basis[j], order)
        reductions += 1
        if reductions > max_reductions:
            raise ResourceLimitError(
                f"Buchberger exceeded {max_reductions} pair reductions (basis size {len(basis)}, {len(pairs)} pairs pending)."
            )
        if s is None or s.is_zero():
            continue
        rem = GroebnerBasis(ring, rank, basis, order).normal_form(s)
        if not rem.is_zero():
            add(rem)
    logger.debug(f"[Buchberger] rank {rank}: {len(gens)} generators, {reductions} pair reductions, {len(basis)} basis elements")
    return GroebnerBasis(ring, rank, _interreduce(basis, ring, rank, order), order, reduced=True)


def _interreduce(basis: List[ModuleVector], ring: RingSpec, rank: int, order: ModuleOrder) -> List[ModuleVector]:
    # drop generators whose leading term is divisible by another's
    minimal: List[ModuleVector] = []
    for idx, g in enumerate(basis):
        comp, mono, _ = g.leading(order)
        redundant = False
        for jdx, h in enumerate(basis):
            if jdx == idx:
                continue
            h_comp, h_mono, _ = h.leading(order)
            if h_comp == comp and h_mono.divides(mono) and (h_mono != mono or jdx < idx):
                redundant = True
                break
        if not redundant:
            minimal.append(g)

    reduced = list(minimal)
    for idx in range(len(reduced)):
        others = reduced[:idx] + reduced[idx + 1:]
        rem = GroebnerBasis(ring, rank, others, order).normal_form(reduced[idx])
        reduced[idx] = rem.monic(order)
    reduced.sort(key=lambda v: order.key(*v.leading(order)[:2]))
    return reduced
