"""
Matrix-valued covariance functions and the two-sided operator push.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .expr import GaussianFactor, GaussianPolyExpr, Scalar, paired_ring
from ..orealg import Monomial, OperatorMatrix, OrePoly, RingSpec
from ..exceptions import DimensionMismatchError, RingMismatchError

logger = logging.getLogger(__name__)

DEFAULT_VARIABLES = ("x", "y", "z")


def default_ring(d: int) -> RingSpec:
    """Weyl algebra over x, y, z for d <= 3, x1..xd beyond."""
    if d < 1:
        raise DimensionMismatchError("A kernel needs at least one input dimension.")
    names = DEFAULT_VARIABLES[:d] if d <= len(DEFAULT_VARIABLES) else tuple(f"x{i + 1}" for i in range(d))
    return RingSpec.weyl(names)


class KernelMatrix:
    """
    A rows x cols array of paired expressions k_ij(x1, x2).

    `ring` is the operator ring whose base variables name the inputs; the
    entries live over the paired commutative ring of both copies.
    """

    def __init__(self, ring: RingSpec, entries: Sequence[Sequence[GaussianPolyExpr]], cols: Optional[int] = None):
        self.ring = ring
        self.pair_ring = paired_ring(ring)
        self.entries: Tuple[Tuple[GaussianPolyExpr, ...], ...] = tuple(tuple(row) for row in entries)
        self.cols = len(self.entries[0]) if self.entries else (cols or 0)
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatchError("Kernel rows have different lengths.")
            for e in row:
                if e.ring != self.pair_ring:
                    raise RingMismatchError(f"Kernel entry over {e.ring}, expected {self.pair_ring}.")

    @property
    def d(self) -> int:
        return self.ring.d

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), self.cols

    @property
    def size(self) -> int:
        rows, cols = self.shape
        if rows != cols:
            raise DimensionMismatchError(f"Kernel of shape {rows}x{cols} is not square.")
        return rows

    def __getitem__(self, index: Tuple[int, int]) -> GaussianPolyExpr:
        i, j = index
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        """k_ij(x1, x2) == k_ji(x2, x1), compared exactly."""
        rows, cols = self.shape
        if rows != cols:
            return False
        return all(self[i, j] == self[j, i].swap_groups() for i in range(rows) for j in range(i, rows))

    def evaluate(self, x1: Sequence[float], x2: Sequence[float]) -> np.ndarray:
        return evaluate_pair(self, x1, x2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KernelMatrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.entries == other.entries

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


def base_kernel(
        d: int,
        m: int,
        lengthscales: Optional[Sequence[Scalar]] = None,
        ring: Optional[RingSpec] = None,
) -> KernelMatrix:
    """diag(k, ..., k) with m copies of the squared exponential k over d inputs."""
    ring = ring or default_ring(d)
    if ring.d != d:
        raise DimensionMismatchError(f"Ring {ring} has {ring.d} variables, expected {d}.")
    if m < 1:
        raise DimensionMismatchError("A kernel needs at least one output.")
    if lengthscales is None:
        scales = None
    else:
        if len(lengthscales) != d:
            raise DimensionMismatchError(f"Expected {d} lengthscales, got {len(lengthscales)}.")
        if any(ls <= 0 for ls in lengthscales):
            raise DimensionMismatchError("Lengthscales must be positive.")
        scales = [1 / (Fraction(ls) ** 2) for ls in lengthscales]
    pair = paired_ring(ring)
    k = GaussianPolyExpr.term(OrePoly.one(pair), GaussianFactor.paired(d, scales))
    zero = GaussianPolyExpr.zero(pair, d)
    return KernelMatrix(ring, [[k if i == j else zero for j in range(m)] for i in range(m)])


class _Action:
    """Applies operators to one expression, caching its partial derivatives by multi-index."""

    def __init__(self, expr: GaussianPolyExpr, offset: int):
        self.expr = expr
        self.offset = offset
        self._cache: Dict[Tuple[int, ...], GaussianPolyExpr] = {(0,) * expr.d: expr}

    def derivative(self, b: Tuple[int, ...]) -> GaussianPolyExpr:
        if b in self._cache:
            return self._cache[b]
        axis = next(i for i in reversed(range(len(b))) if b[i])
        lower = b[:axis] + (b[axis] - 1,) + b[axis + 1:]
        out = self.derivative(lower).diff(self.offset + axis)
        self._cache[b] = out
        return out

    def apply(self, op: OrePoly) -> GaussianPolyExpr:
        expr = self.expr
        out = GaussianPolyExpr.zero(expr.ring, expr.d)
        n = expr.ring.d
        for mono, coef in op.sorted_terms():
            a = [0] * n
            for i, e in enumerate(mono.a):
                a[self.offset + i] = e
            word = OrePoly(expr.ring, {Monomial(tuple(a), (0,) * n): coef})
            out = out + self.derivative(tuple(mono.b)).mul_poly(word)
        return out


def _check_operator(op_ring: RingSpec, ring: RingSpec):
    if op_ring.variables != ring.variables:
        raise RingMismatchError(f"Operators over {op_ring} cannot act on functions of {ring.variables}.")


def apply_group(L: OperatorMatrix, K: KernelMatrix, group: int) -> KernelMatrix:
    """
    L acting on one argument of K.

    group 1: (L<1> K)_ij = sum_u L_iu<1> K_uj, acting on x1 along rows.
    group 2: (K L<2>^T)_ij = sum_v L_jv<2> K_iv, acting on x2 along columns.
    """
    _check_operator(L.ring, K.ring)
    rows, cols = K.shape
    d = K.d
    if group == 1:
        if L.cols != rows:
            raise DimensionMismatchError(f"Operator with {L.cols} columns applied to {rows} kernel rows.")
        actions = [[_Action(K[u, j], 0) for j in range(cols)] for u in range(rows)]
        out = [[_sum(K, (actions[u][j].apply(L[i, u]) for u in range(rows) if not L[i, u].is_zero()))
                for j in range(cols)] for i in range(L.rows)]
        return KernelMatrix(K.ring, out, cols)
    if group == 2:
        if L.cols != cols:
            raise DimensionMismatchError(f"Operator with {L.cols} columns applied to {cols} kernel columns.")
        actions = [[_Action(K[i, v], d) for v in range(cols)] for i in range(rows)]
        out = [[_sum(K, (actions[i][v].apply(L[j, v]) for v in range(cols) if not L[j, v].is_zero()))
                for j in range(L.rows)] for i in range(rows)]
        return KernelMatrix(K.ring, out, L.rows)
    raise ValueError(f"group must be 1 or 2, got {group}")


def _sum(K: KernelMatrix, exprs) -> GaussianPolyExpr:
    total = GaussianPolyExpr.zero(K.pair_ring, K.d)
    for e in exprs:
        total = total + e
    return total


def push_kernel(B: OperatorMatrix, K: KernelMatrix) -> KernelMatrix:
    """B<1> K B<2>^T: the covariance of B f for f ~ GP(0, K)."""
    logger.debug(f"[Kernel] Pushing a {K.shape[0]}x{K.shape[1]} kernel through a {B.rows}x{B.cols} operator.")
    result = apply_group(B, apply_group(B, K, 1), 2)
    logger.debug(f"[Kernel] Pushed kernel has {sum(len(e) for row in result.entries for e in row)} terms.")
    return result


def substitute_group2(K: KernelMatrix, point: Sequence[Scalar]) -> List[List[GaussianPolyExpr]]:
    """K(x, point) as a rows x cols array of centered expressions over the base ring."""
    base = K.ring.base_ring()
    return [[e.substitute_group2(point, base) for e in row] for row in K.entries]


def evaluate_pair(K: KernelMatrix, x1: Sequence[float], x2: Sequence[float]) -> np.ndarray:
    d = K.d
    if len(x1) != d or len(x2) != d:
        raise DimensionMismatchError(f"Kernel inputs must have {d} coordinates.")
    z = [float(v) for v in x1] + [float(v) for v in x2]
    rows, cols = K.shape
    out = np.zeros((rows, cols))
    for i in range(rows):
        for j in range(cols):
            out[i, j] = K[i, j].evaluate(z)
    return out


def apply_operator_point(A: OperatorMatrix, m: Sequence[GaussianPolyExpr]) -> List[GaussianPolyExpr]:
    """A applied to a vector of centered expressions, e.g. a posterior mean."""
    if A.cols != len(m):
        raise DimensionMismatchError(f"Operator with {A.cols} columns applied to a vector of length {len(m)}.")
    if not m:
        return []
    ring, d = m[0].ring, m[0].d
    _check_operator(A.ring, ring)
    actions = [_Action(e, 0) for e in m]
    out = []
    for i in range(A.rows):
        total = GaussianPolyExpr.zero(ring, d)
        for j in range(A.cols):
            if not A[i, j].is_zero():
                total = total + actions[j].apply(A[i, j])
        out.append(total)
    return out


def plain_vector(polys: Sequence[OrePoly], d: int) -> List[GaussianPolyExpr]:
    """Polynomials as expressions carrying the plain factor."""
    return [GaussianPolyExpr.term(p, GaussianFactor.plain(d)) if not p.is_zero()
            else GaussianPolyExpr.zero(p.ring, d) for p in polys]
