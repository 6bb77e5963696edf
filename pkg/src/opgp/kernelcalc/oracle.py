"""
Numerical cross-checks of symbolic kernels by central finite differences.
"""

import logging
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .. import constants
from ..orealg import OperatorMatrix
from ..exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

Function = Callable[[np.ndarray], float]


def squared_exponential(d: int, lengthscales: Optional[Sequence[float]] = None) -> Function:
    """k(z) for z = (x1, x2) stacked, with k = exp(-1/2 sum (x1 - x2)^2 / l^2)."""
    ls = np.ones(d) if lengthscales is None else np.asarray(lengthscales, dtype=float)

    def k(z: np.ndarray) -> float:
        diff = (z[:d] - z[d:]) / ls
        return float(np.exp(-0.5 * diff @ diff))

    return k


def mixed_partial(f: Function, z: np.ndarray, orders: Tuple[int, ...], h: float = constants.FD_STEP) -> float:
    """d^orders f at z by nested central differences, one axis at a time."""
    axis = next((i for i, k in enumerate(orders) if k), None)
    if axis is None:
        return f(z)
    lower = orders[:axis] + (orders[axis] - 1,) + orders[axis + 1:]
    step = np.zeros_like(z)
    step[axis] = h
    return (mixed_partial(f, z + step, lower, h) - mixed_partial(f, z - step, lower, h)) / (2 * h)


def fd_push_kernel(
        B: OperatorMatrix,
        x1: Sequence[float],
        x2: Sequence[float],
        lengthscales: Optional[Sequence[float]] = None,
        h: float = constants.FD_STEP,
) -> np.ndarray:
    """
    B<1> diag(k) B<2>^T at (x1, x2), with every derivative taken numerically.

    Words are normal ordered, so each x^a D^b differentiates first and then
    multiplies by the monomial at the evaluation point.
    """
    d = B.ring.d
    if len(x1) != d or len(x2) != d:
        raise DimensionMismatchError(f"Points must have {d} coordinates.")
    k = squared_exponential(d, lengthscales)
    z = np.concatenate([np.asarray(x1, dtype=float), np.asarray(x2, dtype=float)])
    cache = {}

    def partial(orders: Tuple[int, ...]) -> float:
        if orders not in cache:
            cache[orders] = mixed_partial(k, z, orders, h)
        return cache[orders]

    out = np.zeros((B.rows, B.rows))
    for i in range(B.rows):
        for j in range(B.rows):
            total = 0.0
            for u in range(B.cols):
                for w1, c1 in B[i, u].sorted_terms():
                    for w2, c2 in B[j, u].sorted_terms():
                        scale = float(c1) * float(c2)
                        scale *= float(np.prod(np.asarray(x1, dtype=float) ** np.asarray(w1.a)))
                        scale *= float(np.prod(np.asarray(x2, dtype=float) ** np.asarray(w2.a)))
                        total += scale * partial(tuple(w1.b) + tuple(w2.b))
            out[i, j] = total
    return out


def compare_push(
        B: OperatorMatrix,
        symbolic: np.ndarray,
        x1: Sequence[float],
        x2: Sequence[float],
        lengthscales: Optional[Sequence[float]] = None,
        tolerance: float = constants.FD_TOLERANCE,
) -> Tuple[bool, float]:
    """(agrees, max absolute deviation) between a symbolic evaluation and the oracle."""
    numeric = fd_push_kernel(B, x1, x2, lengthscales)
    deviation = float(np.max(np.abs(numeric - symbolic))) if numeric.size else 0.0
    logger.debug(f"[Oracle] Max absolute deviation {deviation:.3e} at {list(x1)}, {list(x2)}.")
    return deviation <= tolerance, deviation
