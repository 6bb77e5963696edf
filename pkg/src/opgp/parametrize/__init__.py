"""
Parametrizations of solution sets, boundary conditions and their intersections.
"""

from .solution import ParametrizationResult, parametrize, verify_parametrization
from .boundary import boundary_param
from .intersect import IntersectionResult, intersect
from .normalize import normalize_columns, arrange_columns

__all__ = [
    'ParametrizationResult',
    'parametrize',
    'verify_parametrization',
    'boundary_param',
    'IntersectionResult',
    'intersect',
    'normalize_columns',
    'arrange_columns',
]
