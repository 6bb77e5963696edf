import numpy as np
import pytest
from pydantic import ValidationError
from opgp.gpr import AxisRange, GridSpec, Observation, SphereGrid, export_grid, fit, grid_header
from opgp.kernelcalc import base_kernel
from opgp.exceptions import DimensionMismatchError, EmptyGridError


@pytest.fixture(scope="module")
def sphere_model(rotation_kernel):
    obs = [
        Observation(point=(1.0, 0.0, 0.0), value=(0.0, 0.0, 1.0)),
        Observation(point=(-1.0, 0.0, 0.0), value=(0.0, 0.0, 1.0)),
    ]
    return fit(rotation_kernel, obs)


@pytest.fixture
def line_model():
    return fit(base_kernel(1, 1), [Observation(point=(0.0,), value=(2.0,))])


class TestGridSpec:
    """Tests for grid point generation."""

    def test_axes_order(self):
        spec = GridSpec(axes=[AxisRange(min=0, max=1, count=2), AxisRange(min=0, max=2, count=3)])
        points = spec.points()
        assert points.shape == (6, 2)
        # first axis varies slowest
        assert points[:3, 0] == pytest.approx([0, 0, 0])
        assert points[:3, 1] == pytest.approx([0, 1, 2])

    def test_sphere_cells(self):
        points = SphereGrid(lat=4, lon=8, radius=2.0).points()
        assert points.shape == (32, 3)
        assert np.linalg.norm(points, axis=1) == pytest.approx(np.full(32, 2.0))
        # cell-centered latitudes never hit a pole
        assert np.max(np.abs(points[:, 2])) < 2.0

    @pytest.mark.parametrize("kwargs", [
        {},
        {"axes": [AxisRange(min=0, max=1, count=2)], "sphere": SphereGrid(lat=1, lon=1)},
        {"axes": [], "extra": 1},
    ])
    def test_exactly_one_kind(self, kwargs):
        with pytest.raises(ValidationError):
            GridSpec(**kwargs)

    @pytest.mark.parametrize("spec", [
        GridSpec(axes=[AxisRange(min=0, max=1, count=0)]),
        GridSpec(axes=[]),
        GridSpec(sphere=SphereGrid(lat=0, lon=4)),
    ])
    def test_empty_grids(self, spec):
        with pytest.raises(EmptyGridError):
            spec.points()

    def test_header(self):
        assert grid_header(2, 2, False) == ["x1", "x2", "f1", "f2"]
        assert grid_header(1, 1, True) == ["x1", "f1", "sd1"]


class TestExportGrid:
    """Tests for model evaluation on grids."""

    def test_single_point(self, line_model):
        table = export_grid(line_model, GridSpec(axes=[AxisRange(min=0, max=0, count=1)], std=True))
        assert table.header == ["x1", "f1", "sd1"]
        assert table.rows == 1
        assert table.values[0, 1] == pytest.approx(2.0, abs=1e-6)
        assert table.values[0, 2] < 1e-3

    def test_dimension_mismatch(self, line_model):
        with pytest.raises(DimensionMismatchError):
            export_grid(line_model, GridSpec(sphere=SphereGrid(lat=2, lon=2)))

    def test_sphere_fields_are_tangent(self, sphere_model):
        table = export_grid(sphere_model, GridSpec(sphere=SphereGrid(lat=5, lon=6)))
        x, f = table.values[:, :3], table.values[:, 3:6]
        assert np.sum(x * f, axis=1) == pytest.approx(np.zeros(30), abs=1e-9)

    def test_csv(self, tmp_path, line_model):
        table = export_grid(line_model, GridSpec(axes=[AxisRange(min=-1, max=1, count=5)]))
        path = table.to_csv(tmp_path / "out" / "line.csv")
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "x1,f1"
        assert len(lines) == 6
        assert np.loadtxt(path, delimiter=",", skiprows=1) == pytest.approx(table.values)

    def test_deterministic(self, line_model):
        spec = GridSpec(axes=[AxisRange(min=-1, max=1, count=7)], std=True)
        assert np.array_equal(export_grid(line_model, spec).values, export_grid(line_model, spec).values)
