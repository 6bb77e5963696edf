"""
Data classes shared by the pipeline and the CLI.

- reports: MatrixBlock, ParametrizationReport, CheckResult, CheckReport
- documents: JSON documents for kernels and fitted models
"""

from .reports import MatrixBlock, ParametrizationReport, CheckResult, CheckReport
from .documents import (
    MonomialDocument, TermDocument, ExprDocument, RingDocument,
    KernelDocument, ObservationDocument, ModelDocument,
)

__all__ = [
    'MatrixBlock',
    'ParametrizationReport',
    'CheckResult',
    'CheckReport',
    'MonomialDocument',
    'TermDocument',
    'ExprDocument',
    'RingDocument',
    'KernelDocument',
    'ObservationDocument',
    'ModelDocument',
]
