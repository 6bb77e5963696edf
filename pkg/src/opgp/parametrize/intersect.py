"""
Intersection of the images of two parametrizations B1 and B2 with the same
row count: with [C1; C2] the right nullspace of [B1 B2], P = B1*C1 = -B2*C2
parametrizes the functions in both images.
"""

import logging
from fractions import Fraction
from typing import List

from pydantic import BaseModel, ConfigDict

from .normalize import normalize_columns
from ..groebner import prune_generators, reduce_matrix, right_nullspace, syzygy_module
from ..orealg import OperatorMatrix, mat_mul
from ..exceptions import DimensionMismatchError, NullspaceConsistencyError, RingMismatchError

logger = logging.getLogger(__name__)


class IntersectionResult(BaseModel):
    """
        Class holds the stacked B = [B1 B2], its nullspace C = [C1; C2], the normalized P
        and the extra relations.
        Column k of P is scales[k] times column columns[k] of B1*C1.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
    B: OperatorMatrix
    C: OperatorMatrix
    split: int
    P: OperatorMatrix
    columns: List[int]
    scales: List[Fraction]
    extra_relations: OperatorMatrix

    @property
    def C1(self) -> OperatorMatrix:
        return self.C.take_rows(0, self.split)

    @property
    def C2(self) -> OperatorMatrix:
        return self.C.take_rows(self.split, self.C.rows)


def intersect(b1: OperatorMatrix, b2: OperatorMatrix) -> IntersectionResult:
    if b1.ring != b2.ring:
        raise RingMismatchError(f"Cannot intersect parametrizations over {b1.ring} and {b2.ring}.")
    if b1.rows != b2.rows:
        raise DimensionMismatchError(f"Parametrizations {b1.shape} and {b2.shape} describe different numbers of functions.")

    stacked = b1.hstack(b2)
    c = right_nullspace(stacked)
    c1 = c.take_rows(0, b1.cols)
    c2 = c.take_rows(b1.cols, c.rows)
    p = mat_mul(b1, c1)
    if p != -mat_mul(b2, c2):
        raise NullspaceConsistencyError("B1*C1 differs from -B2*C2; the computed nullspace is wrong.")

    relations = reduce_matrix(syzygy_module(c), stacked)
    kept = prune_generators(stacked.ring, stacked.cols, relations.row_list(), base=stacked.row_list())
    extra = OperatorMatrix(stacked.ring, kept, stacked.cols)
    if extra.rows:
        logger.warning(f"Intersection imposes {extra.rows} additional relation(s): {extra}")

    normalized, columns, scales = normalize_columns(p)
    logger.info(f"Intersection: C is {c.rows}x{c.cols}, P keeps {normalized.cols} of {p.cols} column(s)")
    return IntersectionResult(B=stacked, C=c, split=b1.cols, P=normalized, columns=columns, scales=scales, extra_relations=extra)
