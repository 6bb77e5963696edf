from typing import List, Optional
from pydantic import BaseModel, Field


class MonomialDocument(BaseModel):
    """
        Class represents one rational multiple of a monomial; the coefficient is "p/q" text.
    """
    exponents: List[int]
    coefficient: str


class TermDocument(BaseModel):
    """
        Class represents polynomial * exp(-1/2 sum s_a (u_a - w_a)^2).
        - scales: 1/lengthscale^2 per axis as "p/q" text
        - center: None for the paired form, otherwise the substituted point
    """
    scales: List[str]
    center: Optional[List[str]] = None
    monomials: List[MonomialDocument] = Field(default_factory=list)


class ExprDocument(BaseModel):
    terms: List[TermDocument] = Field(default_factory=list)


class RingDocument(BaseModel):
    kind: str
    variables: List[str]
    partials: List[str] = Field(default_factory=list)


class KernelDocument(BaseModel):
    """
        Class represents a symbolic covariance matrix over the paired variables of `ring`.
    """
    ring: RingDocument
    rows: int
    cols: int
    entries: List[List[ExprDocument]]


class ObservationDocument(BaseModel):
    point: List[float]
    value: List[float]
    functional: Optional[List[List[str]]] = None


class ModelDocument(BaseModel):
    """
        Class represents a fitted regression model.
        - alpha: the solved weights, in observation order
        - posterior_mean: the symbolic mean, one expression per output
    """
    kernel: KernelDocument
    observations: List[ObservationDocument]
    jitter: float
    alpha: List[float]
    prior_mean: List[str]
    posterior_mean: List[ExprDocument]
