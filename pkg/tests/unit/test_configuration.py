"""
Unit tests for RunConfig loading, validation and precedence.
"""

import json
from pathlib import Path

import pytest

from src.monotone_clt.config import RunConfig, cap_from_environment, resolve_config
from src.monotone_clt.exceptions import ConfigurationError


class TestRunConfig:
    """Test cases for the RunConfig class."""

    def test_defaults(self):
        config = RunConfig()
        assert config.cap == 10 ** 7
        assert config.tolerance == 1e-10
        assert config.output_format == "csv"
        assert config.moment_file is None
        assert config.quadrature.panel_count == 64

    def test_from_dict_ignores_unknown_keys(self):
        config = RunConfig.from_dict({"cap": 5, "colour": "blue", "moment_file": "m.json"})
        assert config.cap == 5
        assert config.moment_file == Path("m.json")

    def test_to_dict_key_order(self):
        assert list(RunConfig().to_dict()) == [
            "moment_file", "cap", "tolerance", "panel_count", "max_panels",
            "output_format", "rational", "seed", "samples",
        ]

    @pytest.mark.parametrize("kwargs", [
        {"cap": 0},
        {"tolerance": 0.0},
        {"output_format": "xml"},
        {"samples": 0},
    ])
    def test_invalid_values(self, kwargs):
        with pytest.raises(ConfigurationError):
            RunConfig(**kwargs)

    def test_load_yaml(self, sample_yaml_config, sample_config_dict):
        config = RunConfig.load(sample_yaml_config)
        assert config.cap == sample_config_dict["cap"]
        assert config.rational is True
        assert config.output_format == "json"

    def test_load_json(self, sample_json_config):
        assert RunConfig.load(sample_json_config).samples == 25

    def test_load_shipped_default(self):
        config = RunConfig.load(Path(__file__).parent.parent.parent / "mclt_config.yaml")
        assert config == RunConfig()

    def test_schema_violation(self, temp_dir):
        path = temp_dir / "bad.json"
        path.write_text(json.dumps({"cap": "many"}))
        with pytest.raises(ConfigurationError) as exc_info:
            RunConfig.load(path)
        assert "cap" in str(exc_info.value)

    def test_unknown_key_rejected_by_schema(self, temp_dir):
        path = temp_dir / "bad.yaml"
        path.write_text("verbose: true\n")
        with pytest.raises(ConfigurationError):
            RunConfig.load(path)

    def test_unsupported_suffix(self, temp_dir):
        path = temp_dir / "config.toml"
        path.write_text("cap = 3\n")
        with pytest.raises(ConfigurationError):
            RunConfig.load(path)

    def test_missing_file(self, temp_dir):
        with pytest.raises(ConfigurationError):
            RunConfig.load(temp_dir / "absent.yaml")

    def test_invalid_yaml(self, temp_dir):
        path = temp_dir / "broken.yaml"
        path.write_text("cap: [1, 2\n")
        with pytest.raises(ConfigurationError):
            RunConfig.load(path)


class TestPrecedence:
    """Defaults < config file < MCLT_CAP < explicit flags."""

    def test_environment_cap(self):
        assert cap_from_environment({"MCLT_CAP": " 42 "}) == 42
        assert cap_from_environment({}) is None

    @pytest.mark.parametrize("raw", ["abc", "0", "-5"])
    def test_bad_environment_cap(self, raw):
        with pytest.raises(ConfigurationError):
            cap_from_environment({"MCLT_CAP": raw})

    def test_environment_beats_file(self, sample_yaml_config):
        config = resolve_config(sample_yaml_config, {"MCLT_CAP": "77"})
        assert config.cap == 77
        assert config.samples == 25

    def test_flag_beats_environment(self, sample_yaml_config):
        config = resolve_config(sample_yaml_config, {"MCLT_CAP": "77"}, cap=99, tolerance=None)
        assert config.cap == 99
        assert config.tolerance == 1e-9

    def test_defaults_without_file(self):
        assert resolve_config(None, {}) == RunConfig()
