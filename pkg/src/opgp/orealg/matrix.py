"""
Rectangular matrices over an operator ring.

Zero-row and zero-column matrices are allowed: they are what nullspace
computations return when there is nothing to report.
"""

from typing import Iterable, List, Sequence, Tuple

from .parser import parse_operator
from .poly import OrePoly, mul
from .ring import RingSpec
from ..exceptions import DimensionMismatchError, RingMismatchError


class OperatorMatrix:
    """Immutable matrix of OrePolys sharing one ring, stored row-major."""

    __slots__ = ("ring", "rows", "cols", "_entries")

    def __init__(self, ring: RingSpec, entries: Sequence[Sequence[OrePoly]], cols: int = None):
        self.ring = ring
        grid = tuple(tuple(row) for row in entries)
        self.rows = len(grid)
        if cols is None:
            if not grid:
                raise DimensionMismatchError("Column count must be given for a matrix without rows.")
            cols = len(grid[0])
        self.cols = cols
        for row in grid:
            if len(row) != cols:
                raise DimensionMismatchError(f"Ragged matrix: expected {cols} entries per row, got {len(row)}.")
            for entry in row:
                if entry.ring != ring:
                    raise RingMismatchError(f"Entry {entry} is not in {ring}.")
        self._entries = grid

    # --- constructors ---
    @classmethod
    def parse(cls, rows: Sequence[Sequence[str]], ring: RingSpec) -> "OperatorMatrix":
        return cls(ring, [[parse_operator(str(text), ring) for text in row] for row in rows])

    @classmethod
    def zeros(cls, ring: RingSpec, rows: int, cols: int) -> "OperatorMatrix":
        return cls(ring, [[OrePoly.zero(ring)] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "OperatorMatrix":
        return cls(ring, [[OrePoly.one(ring) if i == j else OrePoly.zero(ring) for j in range(n)] for i in range(n)], n)

    @classmethod
    def diagonal(cls, ring: RingSpec, entries: Sequence[OrePoly]) -> "OperatorMatrix":
        n = len(entries)
        return cls(ring, [[entries[i] if i == j else OrePoly.zero(ring) for j in range(n)] for i in range(n)], n)

    @classmethod
    def column(cls, ring: RingSpec, entries: Sequence[OrePoly]) -> "OperatorMatrix":
        return cls(ring, [[e] for e in entries], 1)

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Iterable[Sequence[OrePoly]], cols: int) -> "OperatorMatrix":
        return cls(ring, list(rows), cols)

    # --- access ---
    def __getitem__(self, index: Tuple[int, int]) -> OrePoly:
        i, j = index
        return self._entries[i][j]

    def row(self, i: int) -> Tuple[OrePoly, ...]:
        return self._entries[i]

    def column_entries(self, j: int) -> Tuple[OrePoly, ...]:
        return tuple(row[j] for row in self._entries)

    def row_list(self) -> List[Tuple[OrePoly, ...]]:
        return list(self._entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self._entries for e in row)

    def is_empty(self) -> bool:
        return self.rows == 0 or self.cols == 0

    # --- structure ---
    def transpose(self) -> "OperatorMatrix":
        return OperatorMatrix(self.ring, [self.column_entries(j) for j in range(self.cols)], self.rows)

    def hstack(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_ring(other)
        if self.rows != other.rows:
            raise DimensionMismatchError(f"Cannot place {self.shape} beside {other.shape}.")
        return OperatorMatrix(self.ring, [a + b for a, b in zip(self._entries, other._entries)], self.cols + other.cols)

    def vstack(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_ring(other)
        if self.cols != other.cols:
            raise DimensionMismatchError(f"Cannot stack {self.shape} over {other.shape}.")
        return OperatorMatrix(self.ring, self._entries + other._entries, self.cols)

    def take_rows(self, start: int, stop: int) -> "OperatorMatrix":
        return OperatorMatrix(self.ring, self._entries[start:stop], self.cols)

    def take_columns(self, indices: Sequence[int]) -> "OperatorMatrix":
        return OperatorMatrix(self.ring, [[row[j] for j in indices] for row in self._entries], len(indices))

    def map(self, func) -> "OperatorMatrix":
        return OperatorMatrix(self.ring, [[func(e) for e in row] for row in self._entries], self.cols)

    # --- arithmetic ---
    def _check_ring(self, other: "OperatorMatrix"):
        if self.ring != other.ring:
            raise RingMismatchError(f"Matrices over {self.ring} and {other.ring} cannot be combined.")

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_ring(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot add {self.shape} and {other.shape}.")
        return OperatorMatrix(
            self.ring,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._entries, other._entries)],
            self.cols,
        )

    def __neg__(self) -> "OperatorMatrix":
        return self.map(lambda e: -e)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.ring, self.shape, self._entries))

    def involution(self) -> "OperatorMatrix":
        return involution(self)

    # --- text ---
    def to_lists(self) -> List[List[str]]:
        return [[str(e) for e in row] for row in self._entries]

    def __str__(self) -> str:
        if self.rows == 0:
            return f"[] ({self.rows}x{self.cols})"
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self._entries) + "]"

    def __repr__(self) -> str:
        return f"OperatorMatrix({self.rows}x{self.cols}, {self})"


def mat_mul(m: OperatorMatrix, n: OperatorMatrix) -> OperatorMatrix:
    """Entry (i,k) = sum_j M_ij * N_jk with factors kept in order."""
    m._check_ring(n)
    if m.cols != n.rows:
        raise DimensionMismatchError(f"Cannot multiply {m.shape} by {n.shape}.")
    zero = OrePoly.zero(m.ring)
    entries = []
    for i in range(m.rows):
        row = []
        for k in range(n.cols):
            acc = zero
            for j in range(m.cols):
                if not m[i, j].is_zero() and not n[j, k].is_zero():
                    acc = acc + mul(m[i, j], n[j, k])
            row.append(acc)
        entries.append(row)
    return OperatorMatrix(m.ring, entries, n.cols)


def involution(m: OperatorMatrix) -> OperatorMatrix:
    """theta(M)^T: entrywise anti-automorphism D -> -D, then transpose."""
    return OperatorMatrix(
        m.ring,
        [[m[i, j].involute() for i in range(m.rows)] for j in range(m.cols)],
        m.rows,
    )


def block_diagonal(ring: RingSpec, blocks: Sequence[OperatorMatrix]) -> OperatorMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    zero = OrePoly.zero(ring)
    entries = [[zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for block in blocks:
        for i in range(block.rows):
            for j in range(block.cols):
                entries[r0 + i][c0 + j] = block[i, j]
        r0 += block.rows
        c0 += block.cols
    return OperatorMatrix(ring, entries, cols)
