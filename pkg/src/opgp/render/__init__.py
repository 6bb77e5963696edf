"""
SVG rendering of exported vector fields.
"""

from .quiver import read_grid_csv, quiver_svg, render_quiver

__all__ = [
    'read_grid_csv',
    'quiver_svg',
    'render_quiver',
]
