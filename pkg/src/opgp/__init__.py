"""
opgp - Gaussian process priors whose realizations solve linear operator equations

Main modules:
- orealg: polynomial rings, Weyl algebras, operator matrices and their parser
- groebner: Groebner bases of modules, syzygies, nullspaces, module comparison
- parametrize: parametrizations of solution sets, boundary conditions, intersections
- kernelcalc: squared-exponential kernels pushed through operator matrices
- gpr: regression with function-value and derivative observations, grid export
- pipeline: YAML scenarios executed stage by stage, with checks
- render: SVG quiver plots of exported grids

Quick start example:
```python
from opgp import OperatorMatrix, RingSpec, parametrize, base_kernel, push_kernel, fit, Observation

R = RingSpec.weyl("xyz")
A = OperatorMatrix.parse([["x", "y", "z"], ["Dx", "Dy", "Dz"]], R)
B = parametrize(A).B
K = push_kernel(B, base_kernel(3, B.cols, ring=R))
model = fit(K, [Observation(point=(1, 0, 0), value=(0, 0, 1))])
```
"""

__version__ = "0.3.0"

from .orealg import RingKind, RingSpec, OrePoly, OperatorMatrix, parse_operator
from .groebner import (
    GroebnerBasis, buchberger, syzygy_module, right_nullspace, reduce_matrix,
    row_module_equal, column_module_equal,
)
from .parametrize import parametrize, verify_parametrization, boundary_param, intersect
from .kernelcalc import GaussianPolyExpr, KernelMatrix, base_kernel, push_kernel, apply_operator_point
from .gpr import Observation, GPModel, gram, fit, GridSpec, export_grid
from .config import Scenario, ScenarioModel
from .pipeline import Runner
from .exceptions import (
    OpgpError,
    ConfigurationError,
    ConfigValidationError,
    DefinitionError,
    AlgebraError,
    OperatorSyntaxError,
    ComputationError,
    RenderError,
)

__all__ = [
    '__version__',
    'RingKind',
    'RingSpec',
    'OrePoly',
    'OperatorMatrix',
    'parse_operator',
    'GroebnerBasis',
    'buchberger',
    'syzygy_module',
    'right_nullspace',
    'reduce_matrix',
    'row_module_equal',
    'column_module_equal',
    'parametrize',
    'verify_parametrization',
    'boundary_param',
    'intersect',
    'GaussianPolyExpr',
    'KernelMatrix',
    'base_kernel',
    'push_kernel',
    'apply_operator_point',
    'Observation',
    'GPModel',
    'gram',
    'fit',
    'GridSpec',
    'export_grid',
    'Scenario',
    'ScenarioModel',
    'Runner',
    'OpgpError',
    'ConfigurationError',
    'ConfigValidationError',
    'DefinitionError',
    'AlgebraError',
    'OperatorSyntaxError',
    'ComputationError',
    'RenderError',
]
