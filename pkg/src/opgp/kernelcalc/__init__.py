"""
Symbolic covariance functions: squared-exponential kernels pushed through operator matrices.
"""

from .expr import GaussianFactor, GaussianPolyExpr, paired_ring
from .kernel import (
    KernelMatrix, default_ring, base_kernel, apply_group, push_kernel,
    substitute_group2, evaluate_pair, apply_operator_point, plain_vector,
)
from .oracle import squared_exponential, mixed_partial, fd_push_kernel, compare_push
from .serialize import (
    expr_to_document, expr_from_document, kernel_to_document, kernel_from_document,
    dump_kernel, load_kernel,
)

__all__ = [
    'GaussianFactor',
    'GaussianPolyExpr',
    'paired_ring',
    'KernelMatrix',
    'default_ring',
    'base_kernel',
    'apply_group',
    'push_kernel',
    'substitute_group2',
    'evaluate_pair',
    'apply_operator_point',
    'plain_vector',
    'squared_exponential',
    'mixed_partial',
    'fd_push_kernel',
    'compare_push',
    'expr_to_document',
    'expr_from_document',
    'kernel_to_document',
    'kernel_from_document',
    'dump_kernel',
    'load_kernel',
]
