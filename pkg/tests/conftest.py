"""Shared fixtures: the two-variable worked example, seeded generators, isolated settings."""

import numpy as np
import pytest

import src.config.settings as settings_module
from src.boolean import TrainingSet, TruthTableFunction
from src.config import Settings, use_settings
from src.config.constants import MAX_N_ENV_VAR

WORKED_TABLE = (1, 1, -1, 1)
WORKED_EXAMPLES = (("00", 1), ("01", 1), ("10", -1))


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Every test gets its own settings directory and no cap override."""
    monkeypatch.delenv(MAX_N_ENV_VAR, raising=False)
    previous = settings_module._settings
    settings = use_settings(Settings(tmp_path / "config"))
    yield settings
    settings_module._settings = previous


@pytest.fixture
def worked_function():
    return TruthTableFunction(WORKED_TABLE)


@pytest.fixture
def worked_training_set():
    return TrainingSet.from_examples(2, WORKED_EXAMPLES)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
