"""
Exact arithmetic in polynomial rings and Weyl algebras.

- ring: RingSpec and normal-ordered Monomial words
- poly: OrePoly and its product
- parser: operator expression syntax
- matrix: OperatorMatrix, mat_mul and the involution
"""

from .ring import RingKind, RingSpec, Monomial
from .poly import OrePoly, mul
from .parser import parse_operator
from .matrix import OperatorMatrix, mat_mul, involution, block_diagonal

__all__ = [
    'RingKind',
    'RingSpec',
    'Monomial',
    'OrePoly',
    'mul',
    'parse_operator',
    'OperatorMatrix',
    'mat_mul',
    'involution',
    'block_diagonal',
]
