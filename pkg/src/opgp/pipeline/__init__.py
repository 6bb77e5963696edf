"""
Scenario execution: stages, checks and artifacts.
"""

from .workspace import Artifact, Workspace
from .checks import CHECKS, run_check
from .runner import Runner, scenario_ring

__all__ = [
    'Artifact',
    'Workspace',
    'CHECKS',
    'run_check',
    'Runner',
    'scenario_ring',
]
