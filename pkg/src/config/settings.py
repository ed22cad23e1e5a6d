"""Settings management with JSON persistence."""

import json
import os
from pathlib import Path
from typing import Any
from platformdirs import user_config_dir

from .constants import (
    APP_NAME,
    APP_AUTHOR,
    DEFAULT_MAX_N,
    MAX_N_ENV_VAR,
    DEFAULT_BUDGET_CONSTANT,
    DEFAULT_PRECISION,
    DEFAULT_CONFIDENCE,
    DEFAULT_ROUND_SIZE,
    DEFAULT_MAX_SAMPLES,
    DEFAULT_INDIFFERENCE,
    DEFAULT_WORKERS,
    DEFAULT_HIT_QUANTILE,
)
from .logging_config import get_logger

logger = get_logger(__name__)


class Settings:
    """Manage sampler settings with JSON persistence."""

    def __init__(self, config_dir: Path | None = None):
        if config_dir is None:
            config_dir = Path(user_config_dir(APP_NAME, APP_AUTHOR))
        self._config_dir = Path(config_dir)
        self._config_file = self._config_dir / "settings.json"
        self._settings: dict[str, Any] = {}
        self._load()

    def _get_defaults(self) -> dict[str, Any]:
        """Return default settings."""
        return {
            "max_n": DEFAULT_MAX_N,
            "budget_constant": DEFAULT_BUDGET_CONSTANT,
            "precision": DEFAULT_PRECISION,
            "confidence": DEFAULT_CONFIDENCE,
            "round_size": DEFAULT_ROUND_SIZE,
            "max_samples": DEFAULT_MAX_SAMPLES,
            "indifference": DEFAULT_INDIFFERENCE,
            "workers": DEFAULT_WORKERS,
            "hit_quantile": DEFAULT_HIT_QUANTILE,
        }

    def _load(self) -> None:
        """Load settings from file or create defaults."""
        self._settings = self._get_defaults()

        if self._config_file.exists():
            try:
                with open(self._config_file, "r", encoding="utf-8") as f:
                    saved = json.load(f)
                    if isinstance(saved, dict):
                        self._settings.update(saved)
            except (json.JSONDecodeError, IOError) as e:
                logger.warning("Ignoring unreadable settings file %s: %s", self._config_file, e)

    def save(self) -> None:
        """Save current settings to file."""
        self._config_dir.mkdir(parents=True, exist_ok=True)
        with open(self._config_file, "w", encoding="utf-8") as f:
            json.dump(self._settings, f, indent=2)

    def get(self, key: str, default: Any = None) -> Any:
        """Get a setting value."""
        return self._settings.get(key, default)

    def set(self, key: str, value: Any) -> None:
        """Set a setting value and save."""
        self._settings[key] = value
        self.save()

    @property
    def config_file(self) -> Path:
        """Path of the backing JSON file."""
        return self._config_file

    @property
    def max_n(self) -> int:
        """Memory cap on the arity, with the environment override applied."""
        override = os.environ.get(MAX_N_ENV_VAR)
        if override:
            try:
                return int(override)
            except ValueError:
                logger.warning("Ignoring non-integer %s=%r", MAX_N_ENV_VAR, override)
        return int(self._settings.get("max_n", DEFAULT_MAX_N))

    @max_n.setter
    def max_n(self, value: int) -> None:
        self.set("max_n", int(value))

    @property
    def budget_constant(self) -> float:
        """Constant c of the fixed budget K = ceil(c * sqrt(2^n))."""
        return float(self._settings.get("budget_constant", DEFAULT_BUDGET_CONSTANT))

    @budget_constant.setter
    def budget_constant(self, value: float) -> None:
        self.set("budget_constant", float(value))

    @property
    def precision(self) -> float:
        """Precision parameter p of the estimation count m_est = ceil(16 p^2)."""
        return float(self._settings.get("precision", DEFAULT_PRECISION))

    @precision.setter
    def precision(self, value: float) -> None:
        self.set("precision", float(value))

    @property
    def confidence(self) -> float:
        """Confidence level delta of the sequential gap test."""
        return float(self._settings.get("confidence", DEFAULT_CONFIDENCE))

    @confidence.setter
    def confidence(self, value: float) -> None:
        self.set("confidence", float(value))

    @property
    def round_size(self) -> int:
        """Samples drawn per round of the sequential gap test."""
        return int(self._settings.get("round_size", DEFAULT_ROUND_SIZE))

    @round_size.setter
    def round_size(self, value: int) -> None:
        self.set("round_size", int(value))

    @property
    def max_samples(self) -> int:
        """Sample cap of the sequential gap test."""
        return int(self._settings.get("max_samples", DEFAULT_MAX_SAMPLES))

    @max_samples.setter
    def max_samples(self, value: int) -> None:
        self.set("max_samples", int(value))

    @property
    def indifference(self) -> float:
        """Coefficient difference below which the gap test treats two indices as tied."""
        return float(self._settings.get("indifference", DEFAULT_INDIFFERENCE))

    @indifference.setter
    def indifference(self, value: float) -> None:
        self.set("indifference", float(value))

    @property
    def workers(self) -> int:
        """Concurrent trial workers for experiments."""
        return max(1, int(self._settings.get("workers", DEFAULT_WORKERS)))

    @workers.setter
    def workers(self, value: int) -> None:
        self.set("workers", int(value))

    @property
    def hit_quantile(self) -> float:
        """Quantile of |coefficient| above which an identified index counts as a hit."""
        return float(self._settings.get("hit_quantile", DEFAULT_HIT_QUANTILE))

    @hit_quantile.setter
    def hit_quantile(self, value: float) -> None:
        self.set("hit_quantile", float(value))


# Global settings instance
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def use_settings(settings: Settings) -> Settings:
    """Replace the global settings instance (--config-dir and tests)."""
    global _settings
    _settings = settings
    return settings
