"""
Gaussian process regression with symbolic operator-pushed kernels.
"""

from .observation import Observation
from .model import GPModel, gram, fit, apply_to_mean
from .export import AxisRange, SphereGrid, GridSpec, GridTable, grid_header, export_grid

__all__ = [
    'Observation',
    'GPModel',
    'gram',
    'fit',
    'apply_to_mean',
    'AxisRange',
    'SphereGrid',
    'GridSpec',
    'GridTable',
    'grid_header',
    'export_grid',
]
