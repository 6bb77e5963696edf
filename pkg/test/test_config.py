import pytest
from opgp.config import Scenario, ScenarioModel, bundled_scenarios, resolve_scenario
from opgp.exceptions import (
    ConfigFileMissingError, ConfigParsingError, ConfigValidationError, ReferenceNotFoundError, StageTypeError,
)


def minimal(**overrides):
    data = {
        "name": "plane",
        "ring": {"variables": ["x", "y"]},
        "matrices": {"A": [["Dx", "Dy"]]},
        "observations": {"center": [{"point": [0.5, 0.5], "value": [1, 0]}]},
        "pipeline": [
            {"stage": "parametrize", "input": "A", "output": "B"},
            {"stage": "kernel", "operator": "B", "output": "K"},
            {"stage": "fit", "kernel": "K", "observations": "center", "output": "M"},
        ],
    }
    data.update(overrides)
    return data


class TestScenarioModel:
    """Tests for scenario validation."""

    def test_valid(self):
        scenario = Scenario.from_dict(minimal())
        assert scenario.name == "plane"
        assert [s.stage for s in scenario.model.pipeline] == ["parametrize", "kernel", "fit"]

    def test_grid_axes_as_triples(self):
        pipeline = minimal()["pipeline"] + [{"stage": "grid", "model": "M", "output": "G", "axes": [[0, 1, 3], [0, 1, 2]]}]
        grid = Scenario.from_dict(minimal(pipeline=pipeline)).model.pipeline[-1]
        assert [a.count for a in grid.axes] == [3, 2]

    def test_undeclared_reference(self):
        pipeline = [{"stage": "kernel", "operator": "missing", "output": "K"}]
        with pytest.raises(ReferenceNotFoundError):
            ScenarioModel.model_validate(minimal(pipeline=pipeline))

    def test_forward_reference(self):
        pipeline = [
            {"stage": "kernel", "operator": "B", "output": "K"},
            {"stage": "parametrize", "input": "A", "output": "B"},
        ]
        with pytest.raises(ReferenceNotFoundError):
            ScenarioModel.model_validate(minimal(pipeline=pipeline))

    def test_wrong_kind(self):
        pipeline = [{"stage": "fit", "kernel": "A", "observations": "center", "output": "M"}]
        with pytest.raises(StageTypeError):
            ScenarioModel.model_validate(minimal(pipeline=pipeline))

    def test_check_references(self):
        pipeline = minimal()["pipeline"] + [
            {"stage": "check", "checks": [{"kind": "interpolation", "model": "K"}]},
        ]
        with pytest.raises(StageTypeError):
            ScenarioModel.model_validate(minimal(pipeline=pipeline))

    def test_undeclared_functional(self):
        observations = {"center": [{"point": [0, 0], "value": [1], "functional": "L"}]}
        with pytest.raises(ReferenceNotFoundError):
            ScenarioModel.model_validate(minimal(observations=observations))

    @pytest.mark.parametrize("overrides", [
        {"pipeline": [{"stage": "smooth", "input": "A"}]},
        {"pipeline": [{"stage": "check", "checks": [{"kind": "unknown"}]}]},
        {"ring": {"variables": ["x"], "metric": "flat"}},
        {"means": {"A": ["1", "0"]}},
        {"pipeline": [{"stage": "parametrize", "input": "A", "output": "A"}]},
        {"pipeline": minimal()["pipeline"] + [{"stage": "grid", "model": "M", "output": "G"}]},
        {"pipeline": minimal()["pipeline"] + [
            {"stage": "check", "checks": [
                {"kind": "boundary", "model": "M", "variable": "x", "components": [1, 2], "expected": ["0"]},
            ]},
        ]},
    ])
    def test_invalid_structures(self, overrides):
        with pytest.raises(ConfigValidationError):
            Scenario.from_dict(minimal(**overrides))


class TestScenarioFiles:
    """Tests for loading scenario files."""

    def test_load(self, tmp_path):
        path = tmp_path / "s.yml"
        path.write_text("name: s\nring:\n  variables: [x]\nmatrices:\n  I: [[1]]\n", encoding="utf-8")
        assert Scenario(path).model.matrices == {"I": [[1]]}

    def test_missing(self, tmp_path):
        with pytest.raises(ConfigFileMissingError):
            Scenario(tmp_path / "absent.yml")

    @pytest.mark.parametrize("content", ["name: [unclosed\n", "- just\n- a list\n"])
    def test_unparsable(self, tmp_path, content):
        path = tmp_path / "bad.yml"
        path.write_text(content, encoding="utf-8")
        with pytest.raises(ConfigParsingError):
            Scenario(path)

    def test_yaml_error_position(self, tmp_path):
        path = tmp_path / "bad.yml"
        path.write_text("name: s\nring: {variables: [x\n", encoding="utf-8")
        with pytest.raises(ConfigParsingError, match="line"):
            Scenario(path)

    def test_bundled(self):
        names = bundled_scenarios()
        assert "sphere_div_free" in names
        assert "square_flow" in names
        for name in names:
            Scenario(resolve_scenario(name))

    @pytest.mark.parametrize("name", bundled_scenarios())
    def test_bundled_oracles_use_twenty_pairs(self, name):
        model = Scenario(resolve_scenario(name)).model
        checks = [c for s in model.pipeline if s.stage == "check" for c in s.checks]
        for check in checks:
            if check.kind == "kernel_oracle":
                assert check.pairs >= 20
                assert check.tolerance <= 1e-5

    def test_resolve(self, tmp_path):
        path = tmp_path / "mine.yml"
        path.write_text("name: mine\nring:\n  variables: [x]\n", encoding="utf-8")
        assert resolve_scenario(str(path)) == path
        assert resolve_scenario("square_flow.yml").name == "square_flow.yml"
        with pytest.raises(ConfigFileMissingError):
            resolve_scenario("no_such_scenario")
