import logging
from typing import Sequence, Union

from ..orealg import OperatorMatrix, OrePoly, RingSpec, block_diagonal, parse_operator
from ..exceptions import BoundaryGeneratorError

logger = logging.getLogger(__name__)


def boundary_param(assignment: Sequence[Sequence[Union[OrePoly, str]]], ring: RingSpec) -> OperatorMatrix:
    """
    Parametrize functions vanishing on the zero sets of polynomial ideals.

    `assignment[i]` lists the generators of the ideal for the i-th function;
    the result is the block-diagonal matrix with the generator row of each
    function as its blocks.
    """
    blocks = []
    for i, gens in enumerate(assignment):
        row = []
        for g in gens:
            poly = parse_operator(g, ring) if isinstance(g, str) else g
            if poly.has_partials():
                raise BoundaryGeneratorError(f"Boundary generator '{poly}' of function {i + 1} contains a partial derivative.")
            row.append(poly)
        blocks.append(OperatorMatrix(ring, [row], len(row)))
    result = block_diagonal(ring, blocks)
    logger.debug(f"Boundary parametrization ({result.rows}x{result.cols}): {result}")
    return result
