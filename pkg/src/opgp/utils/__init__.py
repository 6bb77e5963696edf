"""
Utilities shared across opgp.
"""

from .logger import setup_logger, parse_level_spec, normalize_module_name

__all__ = [
    'setup_logger',
    'parse_level_spec',
    'normalize_module_name',
]
