import pytest
from opgp.gpr import Observation
from opgp.kernelcalc import base_kernel, default_ring, push_kernel
from opgp.orealg import OperatorMatrix
from opgp.parametrize import boundary_param, intersect


@pytest.fixture(scope="module")
def ring3():
    return default_ring(3)


@pytest.fixture(scope="module")
def rotations(ring3):
    return OperatorMatrix.parse([["-z*Dy + y*Dz"], ["z*Dx - x*Dz"], ["-y*Dx + x*Dy"]], ring3)


@pytest.fixture(scope="module")
def sphere_operator(ring3):
    return OperatorMatrix.parse([["x", "y", "z"], ["Dx", "Dy", "Dz"]], ring3)


@pytest.fixture(scope="module")
def rotation_kernel(rotations):
    return push_kernel(rotations, base_kernel(3, 1))


@pytest.fixture(scope="module")
def equator_kernel(ring3, rotations):
    """Tangent divergence-free fields vanishing on z = 0."""
    P = intersect(rotations, boundary_param([["z"], ["z"], ["z"]], ring3)).P
    return push_kernel(P, base_kernel(3, P.cols))


@pytest.fixture(scope="module")
def square_kernel():
    ring = default_ring(2)
    b1 = OperatorMatrix.parse([["Dy"], ["-Dx"]], ring)
    P = intersect(b1, boundary_param([["x*(x-1)"], ["y*(y-1)"]], ring)).P
    return push_kernel(P, base_kernel(2, P.cols))


@pytest.fixture(scope="module")
def ode_observations():
    """f(0), f'(0), f(1), f'(1)."""
    D = OperatorMatrix.parse([["Dx"]], default_ring(1))
    return [
        Observation(point=(0.0,), value=(0.0,)),
        Observation(point=(0.0,), value=(1.0,), functional=D, name="D"),
        Observation(point=(1.0,), value=(1.0,)),
        Observation(point=(1.0,), value=(0.0,), functional=D, name="D"),
    ]
