"""Configuration module."""

from .settings import Settings, get_settings, use_settings
from .logging_config import get_logger, configure_logging, level_for, LoggingConfig
from .constants import (
    APP_NAME,
    APP_VERSION,
    SCHEMA_VERSION,
    SCALING_NONE,
    SCALING_CLASSICAL,
    SCALING_UNITARY,
    M_RULE_SQRT,
    M_RULE_FIXED,
    M_RULE_FULL,
    POLICY_FIXED,
    POLICY_SEQUENTIAL,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_RESOURCE,
    EXIT_NOT_CONVERGED,
    EXIT_SELFTEST_FAILED,
)

__all__ = [
    "Settings",
    "get_settings",
    "use_settings",
    "get_logger",
    "configure_logging",
    "level_for",
    "LoggingConfig",
    "APP_NAME",
    "APP_VERSION",
    "SCHEMA_VERSION",
    "SCALING_NONE",
    "SCALING_CLASSICAL",
    "SCALING_UNITARY",
    "M_RULE_SQRT",
    "M_RULE_FIXED",
    "M_RULE_FULL",
    "POLICY_FIXED",
    "POLICY_SEQUENTIAL",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_RESOURCE",
    "EXIT_NOT_CONVERGED",
    "EXIT_SELFTEST_FAILED",
]
