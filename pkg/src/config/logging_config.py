"""Logging for the sampler: one app logger writing to stderr and a log file.

stdout carries command results only (JSON, CSV, selftest lines), so no
handler here ever writes to it. The console handler follows the -v/-q
flags; the file keeps at least INFO so a quiet run still leaves a trace.
"""

import logging
import sys
from pathlib import Path
from typing import TextIO

from platformdirs import user_log_dir

from .constants import APP_NAME, APP_AUTHOR

# Thread names tell concurrent experiment trials apart
LOG_FORMAT = "%(asctime)s %(levelname)s [%(threadName)s] %(name)s: %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
LOG_FILE_NAME = "sampler.log"
DEFAULT_LOG_LEVEL = logging.INFO


def level_for(verbose: bool = False, quiet: bool = False) -> int:
    """Console level selected by the verbosity flags."""
    if verbose:
        return logging.DEBUG
    if quiet:
        return logging.WARNING
    return DEFAULT_LOG_LEVEL


class _StderrHandler(logging.StreamHandler):
    """Writes to whatever sys.stderr is when a record is emitted."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self) -> TextIO:
        return sys.stderr

    @stream.setter
    def stream(self, value: TextIO) -> None:
        pass


class LoggingConfig:
    """Handlers of one named logger tree, set up once and re-levelled after."""

    def __init__(self, log_dir: Path | None = None, name: str = APP_NAME):
        self._name = name
        self._log_dir = Path(log_dir) if log_dir is not None else Path(user_log_dir(APP_NAME, APP_AUTHOR))
        self._console: logging.Handler | None = None
        self._file: logging.Handler | None = None

    @property
    def configured(self) -> bool:
        return self._console is not None

    def _open_file(self, formatter: logging.Formatter) -> logging.Handler | None:
        try:
            self._log_dir.mkdir(parents=True, exist_ok=True)
            handler = logging.FileHandler(self.log_file, encoding="utf-8", mode="a")
        except OSError:
            return None  # console only
        handler.setFormatter(formatter)
        return handler

    def configure(self, level: int = DEFAULT_LOG_LEVEL) -> None:
        if self.configured:
            self.set_level(level)
            return

        app_logger = logging.getLogger(self._name)
        app_logger.propagate = False
        formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT)

        self._console = _StderrHandler()
        self._console.setFormatter(formatter)
        app_logger.addHandler(self._console)

        self._file = self._open_file(formatter)
        if self._file is not None:
            app_logger.addHandler(self._file)

        self.set_level(level)

    def set_level(self, level: int) -> None:
        if not self.configured:
            return
        file_level = min(level, logging.INFO)
        logging.getLogger(self._name).setLevel(file_level if self._file is not None else level)
        self._console.setLevel(level)
        if self._file is not None:
            self._file.setLevel(file_level)

    def close(self) -> None:
        """Detach and close the handlers this config added."""
        app_logger = logging.getLogger(self._name)
        for handler in (self._console, self._file):
            if handler is not None:
                app_logger.removeHandler(handler)
                handler.close()
        self._console = self._file = None

    def get_logger(self, name: str) -> logging.Logger:
        if not self.configured:
            self.configure()
        return logging.getLogger(f"{self._name}.{name}")

    @property
    def log_file(self) -> Path:
        return self._log_dir / LOG_FILE_NAME

    @property
    def log_dir(self) -> Path:
        return self._log_dir


_logging_config: LoggingConfig | None = None


def get_logging_config() -> LoggingConfig:
    global _logging_config
    if _logging_config is None:
        _logging_config = LoggingConfig()
    return _logging_config


def get_logger(name: str) -> logging.Logger:
    """Child of the app logger; configures logging on first use."""
    return get_logging_config().get_logger(name)


def configure_logging(level: int = DEFAULT_LOG_LEVEL) -> None:
    get_logging_config().configure(level)
