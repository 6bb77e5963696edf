"""
Degree-truncated syzygies by exact linear algebra on the Macaulay coefficient
matrix. Independent of Buchberger; used to cross-check syzygy_module over
commutative rings.
"""

from fractions import Fraction
from itertools import product
from typing import Dict, List, Tuple

from sympy import Matrix, Rational

from ..orealg import Monomial, OperatorMatrix, OrePoly
from ..exceptions import AlgebraError


def monomials_up_to(d: int, degree: int) -> List[Monomial]:
    zero = (0,) * d
    words = [Monomial(a, zero) for a in product(range(degree + 1), repeat=d) if sum(a) <= degree]
    return sorted(words, key=Monomial.grevlex_key)


def truncated_syzygies(m: OperatorMatrix, degree: int) -> OperatorMatrix:
    """
    A basis of the rational vector space of syzygies s of the rows of m with
    every entry of degree <= `degree`.
    """
    if m.ring.is_weyl:
        raise AlgebraError("The Macaulay truncation is only implemented for commutative rings.")
    ring = m.ring
    words = monomials_up_to(ring.d, degree)
    unknowns = [(i, w) for i in range(m.rows) for w in words]

    # equation per (column, monomial of the product)
    equations: Dict[Tuple[int, Monomial], Dict[int, Fraction]] = {}
    for col, (i, w) in enumerate(unknowns):
        for j in range(m.cols):
            for mono, coef in m[i, j].terms.items():
                row = equations.setdefault((j, w.shift(mono)), {})
                row[col] = row.get(col, 0) + coef

    if not unknowns:
        return OperatorMatrix(ring, [], m.rows)
    if not equations:
        basis = [[1 if k == col else 0 for k in range(len(unknowns))] for col in range(len(unknowns))]
    else:
        keys = sorted(equations, key=lambda t: (t[0], t[1].grevlex_key()))
        coeffs = Matrix([
            [Rational(v.numerator, v.denominator) for v in (equations[key].get(c, Fraction(0)) for c in range(len(unknowns)))]
            for key in keys
        ])
        basis = [[Fraction(int(x.p), int(x.q)) for x in vec] for vec in coeffs.nullspace()]

    rows = []
    for vec in basis:
        entries = [dict() for _ in range(m.rows)]
        for (i, w), value in zip(unknowns, vec):
            if value:
                entries[i][w] = value
        rows.append([OrePoly(ring, e) for e in entries])
    return OperatorMatrix(ring, rows, m.rows)
