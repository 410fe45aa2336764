"""
Pytest configuration and fixtures for monotone CLT tests.

This module provides shared fixtures and configuration for all tests.
"""

import json
import shutil
import tempfile
from pathlib import Path

import pytest

from src.monotone_clt.config import RunConfig
from src.monotone_clt.moment_engine.models import MomentSequence

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture
def temp_dir():
    """Create a temporary directory for testing that gets cleaned up after the test."""
    temp_path = Path(tempfile.mkdtemp())
    yield temp_path
    # Cleanup
    if temp_path.exists():
        shutil.rmtree(temp_path)


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture
def bernoulli():
    """Standardized symmetric ±1 moments up to order 16."""
    return MomentSequence.bernoulli(16)


@pytest.fixture
def generic_moments():
    """Moments with nonzero odd terms, so no reduction factor vanishes by symmetry."""
    return MomentSequence.from_strings(["1", "1/2", "2", "-1/3", "5", "1/7", "3", "2/5", "11"])


@pytest.fixture
def moment_file(temp_dir):
    """Write a moment document and return its path."""
    def write(moments, max_order=None, name="moments.json"):
        path = temp_dir / name
        document = {
            "max_order": len(moments) - 1 if max_order is None else max_order,
            "moments": [str(value) for value in moments],
        }
        path.write_text(json.dumps(document, indent=2))
        return path
    return write


@pytest.fixture
def sample_config_dict():
    """Provide a sample run configuration dictionary."""
    return {
        'cap': 50000,
        'tolerance': 1e-9,
        'panel_count': 32,
        'max_panels': 4096,
        'output_format': 'json',
        'rational': True,
        'seed': 7,
        'samples': 25,
    }


@pytest.fixture
def sample_yaml_config(temp_dir, sample_config_dict):
    """Create a sample YAML configuration file."""
    import yaml

    config_file = temp_dir / "mclt_config.yaml"
    with open(config_file, 'w') as f:
        yaml.dump(sample_config_dict, f)

    return config_file


@pytest.fixture
def sample_json_config(temp_dir, sample_config_dict):
    """Create a sample JSON configuration file."""
    config_file = temp_dir / "mclt_config.json"
    with open(config_file, 'w') as f:
        json.dump(sample_config_dict, f, indent=2)

    return config_file


@pytest.fixture
def quick_config():
    """A run configuration with a short randomised suite."""
    return RunConfig(samples=40)
