"""
Canonical scaling and arrangement of parametrization columns.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, Tuple

from ..groebner import DEFAULT_ORDER, ModuleVector
from ..orealg import OperatorMatrix
from ..exceptions import DimensionMismatchError


def column_scale(entries) -> Fraction:
    """
    Factor turning a column into integer entries without common divisor and a
    positive leading coefficient in the module order.
    """
    coefs = [c for e in entries for c in e.terms.values()]
    den = lcm(*(c.denominator for c in coefs))
    num = gcd(*(int(c * den) for c in coefs))
    lead = ModuleVector.from_row(entries[0].ring, entries).leading(DEFAULT_ORDER)[2]
    sign = 1 if lead > 0 else -1
    return Fraction(sign * den, num)


def normalize_columns(m: OperatorMatrix) -> Tuple[OperatorMatrix, List[int], List[Fraction]]:
    """
    Drop identically zero columns and scale the rest by column_scale.

    Returns the new matrix, the indices of the kept columns and their scales.
    """
    kept: List[int] = []
    scales: List[Fraction] = []
    columns = []
    for j in range(m.cols):
        entries = m.column_entries(j)
        if all(e.is_zero() for e in entries):
            continue
        s = column_scale(entries)
        kept.append(j)
        scales.append(s)
        columns.append([e.scale(s) for e in entries])
    rows = [[columns[j][i] for j in range(len(columns))] for i in range(m.rows)]
    return OperatorMatrix(m.ring, rows, len(columns)), kept, scales


def arrange_columns(m: OperatorMatrix, arrangement: Sequence[int]) -> OperatorMatrix:
    """
    Reorder and sign-flip columns: arrangement [2, -1] puts column 2 first and
    the negated column 1 second (1-based).
    """
    picked = []
    for signed in arrangement:
        j = abs(signed) - 1
        if signed == 0 or j >= m.cols:
            raise DimensionMismatchError(f"Column {signed} does not exist in a matrix with {m.cols} columns.")
        picked.append([e if signed > 0 else -e for e in m.column_entries(j)])
    rows = [[col[i] for col in picked] for i in range(m.rows)]
    return OperatorMatrix(m.ring, rows, len(picked))
