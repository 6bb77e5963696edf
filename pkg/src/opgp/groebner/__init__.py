"""
Module Gröbner bases over polynomial rings and Weyl algebras.

- order: ModuleOrder (grevlex, position over term)
- basis: buchberger, GroebnerBasis, normal forms
- syzygy: syzygy_module, right_nullspace, reduce_matrix, row_module_equal
- macaulay: degree-truncated syzygies by exact linear algebra
"""

from .order import ModuleOrder, DEFAULT_ORDER
from .vector import ModuleVector
from .basis import GroebnerBasis, buchberger, s_vector
from .syzygy import (
    row_basis,
    normal_form,
    syzygy_module,
    right_nullspace,
    reduce_matrix,
    row_module_equal,
    column_module_equal,
    prune_generators,
)
from .macaulay import truncated_syzygies

__all__ = [
    'ModuleOrder',
    'DEFAULT_ORDER',
    'ModuleVector',
    'GroebnerBasis',
    'buchberger',
    's_vector',
    'row_basis',
    'normal_form',
    'syzygy_module',
    'right_nullspace',
    'reduce_matrix',
    'row_module_equal',
    'column_module_equal',
    'prune_generators',
    'truncated_syzygies',
]
