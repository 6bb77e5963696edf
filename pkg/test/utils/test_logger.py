import logging

import pytest
from opgp.utils import normalize_module_name, parse_level_spec, setup_logger


class TestLevelSpec:
    """Tests for parsing per-module log level specifications."""

    @pytest.mark.parametrize(
        "spec, expected",
        [
            (None, {}),
            ("", {}),
            ("gb=DEBUG", {"gb": "DEBUG"}),
            ("gb=debug, kc=Info", {"gb": "DEBUG", "kc": "INFO"}),
            ("gb=DEBUG,broken,=INFO", {"gb": "DEBUG"}),
        ],
    )
    def test_parse(self, spec, expected):
        assert parse_level_spec(spec) == expected


class TestModuleNames:
    """Tests for alias expansion of logger names."""

    @pytest.mark.parametrize(
        "name, expected",
        [
            ("gb", "opgp.groebner"),
            ("kc", "opgp.kernelcalc"),
            ("groebner.*", "opgp.groebner"),
            ("gpr.model", "opgp.gpr.model"),
            ("opgp.render", "opgp.render"),
            ("numpy", "numpy"),
        ],
    )
    def test_normalize(self, name, expected):
        assert normalize_module_name(name) == expected


class TestSetupLogger:
    """Tests for applying levels through setup_logger."""

    def test_module_levels(self):
        target = logging.getLogger("opgp.groebner")
        previous = target.level
        try:
            setup_logger(module_levels={"gb": "WARNING", "kc": "NOT_A_LEVEL"})
            assert target.level == logging.WARNING
        finally:
            target.setLevel(previous)
