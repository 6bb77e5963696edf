"""
Syzygies, nullspaces and row-module comparisons of operator matrices.

Left syzygies of the rows of M (k x r) are computed by a Gröbner basis of the
rows [M_i | e_i] of R^(r+k). With position-over-term and the original
components first, basis elements whose leading term lies in the unit part
have zero original part; their unit parts generate the syzygy module.
"""

import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

from .basis import GroebnerBasis, buchberger
from .order import DEFAULT_ORDER
from .vector import ModuleVector, as_vectors
from ..orealg import OperatorMatrix, OrePoly, RingSpec, involution
from ..exceptions import DimensionMismatchError, RingMismatchError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def row_basis(m: OperatorMatrix) -> GroebnerBasis:
    """Reduced Gröbner basis of the row module of m."""
    return buchberger(as_vectors(m.ring, m.cols, m.row_list()), ring=m.ring, rank=m.cols)


def normal_form(v: Sequence[OrePoly], gb: GroebnerBasis) -> Tuple[OrePoly, ...]:
    if len(v) != gb.rank:
        raise DimensionMismatchError(f"Vector of length {len(v)} against a basis of rank {gb.rank}.")
    return gb.normal_form(ModuleVector.from_row(gb.ring, v)).to_row()


def syzygy_module(m: OperatorMatrix) -> OperatorMatrix:
    """Rows s with s*M = 0 generating every left syzygy of the rows of M."""
    k, r = m.rows, m.cols
    ring = m.ring
    one, zero = OrePoly.one(ring), OrePoly.zero(ring)
    augmented = [
        list(m.row(i)) + [one if j == i else zero for j in range(k)]
        for i in range(k)
    ]
    gb = buchberger(as_vectors(ring, r + k, augmented), ring=ring, rank=r + k)
    found = [g.to_row()[r:] for g in gb.generators if g.leading(gb.order)[0] >= r]
    logger.debug(f"[Syzygy] {k}x{r} matrix: {len(gb)} basis elements, {len(found)} syzygies before pruning")
    kept = prune_generators(ring, k, found)
    return OperatorMatrix(ring, kept, k)


def prune_generators(ring: RingSpec, rank: int, rows: Sequence[Sequence[OrePoly]],
                     base: Sequence[Sequence[OrePoly]] = ()) -> List[Tuple[OrePoly, ...]]:
    """
    Greedily keep rows, lowest degree first, that are not already in the
    module generated by `base` and the rows kept so far.
    """
    def weight(row):
        return (max(e.degree() for e in row), sum(len(e) for e in row), [str(e) for e in row])

    kept: List[Tuple[OrePoly, ...]] = []
    current = list(base)
    gb = buchberger(as_vectors(ring, rank, current), ring=ring, rank=rank)
    for row in sorted((tuple(r) for r in rows), key=weight):
        if gb.contains(ModuleVector.from_row(ring, row)):
            continue
        kept.append(row)
        current.append(row)
        gb = buchberger(as_vectors(ring, rank, current), ring=ring, rank=rank)
    return sorted(kept, key=lambda row: (_first_nonzero(row), weight(row)))


def _first_nonzero(row: Sequence[OrePoly]) -> int:
    return next(i for i, e in enumerate(row) if not e.is_zero())


def right_nullspace(m: OperatorMatrix) -> OperatorMatrix:
    """B with M*B = 0 whose columns generate every right syzygy."""
    return involution(syzygy_module(involution(m)))


def _check_pair(m1: OperatorMatrix, m2: OperatorMatrix):
    if m1.ring != m2.ring:
        raise RingMismatchError(f"Matrices over {m1.ring} and {m2.ring} cannot be compared.")
    if m1.cols != m2.cols:
        raise DimensionMismatchError(f"Row modules of {m1.shape} and {m2.shape} live in different free modules.")


def reduce_matrix(m1: OperatorMatrix, m2: OperatorMatrix) -> OperatorMatrix:
    """Normal forms of the rows of m1 modulo the row module of m2 that are nonzero."""
    _check_pair(m1, m2)
    gb = row_basis(m2)
    residues = []
    for row in m1.row_list():
        nf = normal_form(row, gb)
        if any(not e.is_zero() for e in nf):
            residues.append(nf)
    return OperatorMatrix(m1.ring, residues, m1.cols)


def row_module_equal(m1: OperatorMatrix, m2: OperatorMatrix) -> bool:
    return reduce_matrix(m1, m2).rows == 0 and reduce_matrix(m2, m1).rows == 0


def column_module_equal(m1: OperatorMatrix, m2: OperatorMatrix) -> bool:
    """Column modules compared through the involution."""
    return row_module_equal(involution(m1), involution(m2))
