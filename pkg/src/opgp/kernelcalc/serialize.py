"""
Exact JSON round trip of symbolic kernels.
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from .expr import GaussianFactor, GaussianPolyExpr
from .kernel import KernelMatrix
from ..datacls import ExprDocument, KernelDocument, MonomialDocument, RingDocument, TermDocument
from ..orealg import Monomial, OrePoly, RingKind, RingSpec
from ..exceptions import ConfigParsingError, DimensionMismatchError

logger = logging.getLogger(__name__)


def ring_to_document(ring: RingSpec) -> RingDocument:
    return RingDocument(kind=ring.kind.value, variables=list(ring.variables), partials=list(ring.partials))


def ring_from_document(doc: RingDocument) -> RingSpec:
    return RingSpec(RingKind(doc.kind), tuple(doc.variables), tuple(doc.partials))


def expr_to_document(expr: GaussianPolyExpr) -> ExprDocument:
    terms = []
    for factor, poly in expr.items():
        terms.append(TermDocument(
            scales=[str(s) for s in factor.scales],
            center=None if factor.center is None else [str(c) for c in factor.center],
            monomials=[MonomialDocument(exponents=list(mono.a), coefficient=str(coef))
                       for mono, coef in poly.sorted_terms()],
        ))
    return ExprDocument(terms=terms)


def expr_from_document(doc: ExprDocument, ring: RingSpec, d: int) -> GaussianPolyExpr:
    terms = {}
    zero = (0,) * ring.d
    for term in doc.terms:
        factor = GaussianFactor(
            tuple(Fraction(s) for s in term.scales),
            None if term.center is None else tuple(Fraction(c) for c in term.center),
        )
        monos = {}
        for m in term.monomials:
            if len(m.exponents) != ring.d:
                raise DimensionMismatchError(f"Monomial with {len(m.exponents)} exponents in a ring of {ring.d} variables.")
            monos[Monomial(tuple(m.exponents), zero)] = Fraction(m.coefficient)
        poly = OrePoly(ring, monos)
        terms[factor] = terms[factor] + poly if factor in terms else poly
    return GaussianPolyExpr(ring, d, terms)


def kernel_to_document(K: KernelMatrix) -> KernelDocument:
    rows, cols = K.shape
    return KernelDocument(
        ring=ring_to_document(K.ring),
        rows=rows,
        cols=cols,
        entries=[[expr_to_document(e) for e in row] for row in K.entries],
    )


def kernel_from_document(doc: KernelDocument) -> KernelMatrix:
    ring = ring_from_document(doc.ring)
    K = KernelMatrix(ring, [], doc.cols)
    entries = [[expr_from_document(e, K.pair_ring, ring.d) for e in row] for row in doc.entries]
    if len(entries) != doc.rows:
        raise DimensionMismatchError(f"Kernel document declares {doc.rows} rows but holds {len(entries)}.")
    return KernelMatrix(ring, entries, doc.cols)


def dump_kernel(K: KernelMatrix, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(kernel_to_document(K).model_dump_json(indent=2), encoding="utf-8")
    logger.debug(f"[Kernel] Wrote {path}")
    return path


def load_kernel(path: Union[str, Path]) -> KernelMatrix:
    try:
        doc = KernelDocument.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except ValidationError as e:
        raise ConfigParsingError(f"Malformed kernel document '{path}': {e}") from e
    return kernel_from_document(doc)
