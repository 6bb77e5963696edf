"""
Parametrizations of solution sets {f : A f = 0}.

B = right nullspace of A is the parametrization; A' = left nullspace of B
describes the largest parametrizable part of the solutions. A and A'
generating the same row module is the controllability test.
"""

import logging
from pydantic import BaseModel, ConfigDict

from ..datacls import MatrixBlock, ParametrizationReport
from ..groebner import reduce_matrix, right_nullspace, syzygy_module
from ..orealg import OperatorMatrix, mat_mul
from ..exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


class ParametrizationResult(BaseModel):
    """
        Class holds B, its left nullspace A' and the controllability witness.
        `witness` lists rows of A' that do not reduce to zero modulo A.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
    A: OperatorMatrix
    B: OperatorMatrix
    Aprime: OperatorMatrix
    witness: OperatorMatrix

    @property
    def controllable(self) -> bool:
        return self.witness.rows == 0


def parametrize(a: OperatorMatrix) -> ParametrizationResult:
    logger.info(f"Parametrizing {a.rows}x{a.cols} system over {a.ring}")
    b = right_nullspace(a)
    aprime = syzygy_module(b)
    witness = reduce_matrix(aprime, a)
    if witness.rows:
        logger.warning(f"System is not controllable: {witness.rows} row(s) of A' are not implied by A")
    logger.debug(f"Parametrization B ({b.rows}x{b.cols}): {b}")
    return ParametrizationResult(A=a, B=b, Aprime=aprime, witness=witness)


def verify_parametrization(a: OperatorMatrix, b: OperatorMatrix) -> ParametrizationReport:
    """Check A*B = 0 and compare the row modules of A and the left nullspace of B."""
    if a.cols != b.rows:
        raise DimensionMismatchError(f"A {a.shape} and B {b.shape} are not conformable.")
    product_zero = mat_mul(a, b).is_zero()
    aprime = syzygy_module(b)
    return ParametrizationReport(
        product_zero=product_zero,
        residue_a=MatrixBlock.of(reduce_matrix(a, aprime)),
        residue_aprime=MatrixBlock.of(reduce_matrix(aprime, a)),
    )
