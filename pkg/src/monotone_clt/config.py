"""
Run configuration shared by every subcommand.

Precedence, lowest first: built-in defaults, a --config file, the MCLT_CAP
environment variable, explicit command-line flags.
"""

import json
import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import yaml

from .arcsine.quadrature import QuadratureSpec
from .combinatorics.enumeration import DEFAULT_CAP
from .exceptions import ConfigurationError
from .validators import SchemaValidator

logger = logging.getLogger(__name__)

CAP_ENV_VAR = "MCLT_CAP"
SCHEMA_NAME = "run-config.json"
OUTPUT_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class RunConfig:
    """Settings for enumeration caps, quadrature, output and randomised suites."""

    moment_file: Optional[Path] = None
    cap: int = DEFAULT_CAP
    tolerance: float = 1e-10
    panel_count: int = 64
    max_panels: int = 2 ** 14
    output_format: str = "csv"
    rational: bool = False
    seed: int = 20240601
    samples: int = 200

    def __post_init__(self):
        errors = []
        if self.cap < 1:
            errors.append(f"cap must be at least 1, got {self.cap}")
        if not self.tolerance > 0:
            errors.append(f"tolerance must be positive, got {self.tolerance}")
        if self.output_format not in OUTPUT_FORMATS:
            errors.append(f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        if self.samples < 1:
            errors.append(f"samples must be positive, got {self.samples}")
        if errors:
            raise ConfigurationError("Invalid run configuration: " + "; ".join(errors))

    @property
    def quadrature(self) -> QuadratureSpec:
        return QuadratureSpec(panel_count=self.panel_count, tolerance=self.tolerance,
                              max_panels=self.max_panels)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RunConfig":
        """Create RunConfig from a dictionary; unknown keys are ignored."""
        known = {f.name for f in fields(cls)}
        values = {key: value for key, value in data.items() if key in known and value is not None}
        if "moment_file" in values:
            values["moment_file"] = Path(values["moment_file"])
        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-compatible dictionary with stable key order."""
        return {
            "moment_file": str(self.moment_file) if self.moment_file else None,
            "cap": self.cap,
            "tolerance": self.tolerance,
            "panel_count": self.panel_count,
            "max_panels": self.max_panels,
            "output_format": self.output_format,
            "rational": self.rational,
            "seed": self.seed,
            "samples": self.samples,
        }

    @classmethod
    def load(cls, config_file: Path) -> "RunConfig":
        """Load configuration from a YAML or JSON file.

        Raises:
            ConfigurationError: If the file is missing, unparsable or fails the schema.
        """
        config_file = Path(config_file)
        if not config_file.exists():
            raise ConfigurationError(f"Configuration file not found: {config_file}")

        suffix = config_file.suffix.lower()
        try:
            with open(config_file, 'r', encoding='utf-8') as f:
                if suffix in ('.yaml', '.yml'):
                    data = yaml.safe_load(f) or {}
                elif suffix == '.json':
                    data = json.load(f)
                else:
                    raise ConfigurationError(f"Unsupported config format: {suffix}")
        except (yaml.YAMLError, json.JSONDecodeError) as e:
            raise ConfigurationError(f"Invalid configuration file format: {e}")

        errors = SchemaValidator(SCHEMA_NAME).validate(data)
        if errors:
            raise ConfigurationError(f"Configuration {config_file} is invalid: " + "; ".join(errors))

        logger.debug(f"Loaded configuration from {config_file}")
        return cls.from_dict(data)

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        """Copy with every non-None override applied."""
        values = {key: value for key, value in overrides.items() if value is not None}
        if "moment_file" in values:
            values["moment_file"] = Path(values["moment_file"])
        return replace(self, **values)


def cap_from_environment(environ: Optional[Mapping[str, str]] = None) -> Optional[int]:
    """The enumeration cap from MCLT_CAP, if set.

    Raises:
        ConfigurationError: If the variable is not a positive integer.
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(CAP_ENV_VAR)
    if raw is None or not raw.strip():
        return None
    try:
        cap = int(raw.strip())
    except ValueError:
        raise ConfigurationError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}")
    if cap < 1:
        raise ConfigurationError(f"{CAP_ENV_VAR} must be at least 1, got {cap}")
    return cap


def resolve_config(config_file: Optional[Path] = None,
                   environ: Optional[Mapping[str, str]] = None,
                   **flags: Any) -> RunConfig:
    """Combine defaults, config file, environment and explicit flags."""
    config = RunConfig.load(config_file) if config_file else RunConfig()
    env_cap = cap_from_environment(environ)
    if env_cap is not None:
        logger.debug(f"Using enumeration cap {env_cap} from {CAP_ENV_VAR}")
        config = config.with_overrides(cap=env_cap)
    return config.with_overrides(**flags)
