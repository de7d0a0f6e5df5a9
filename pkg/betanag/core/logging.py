"""
Logging system for BetaNAG.

Structured logging for experiment runs: console output that coexists with
progress bars, optional rotating log files, JSON records carrying the
experiment cell a message belongs to.
"""

import functools
import json
import logging
import os
import sys
import time
from datetime import datetime
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Dict, Optional, Union

from tqdm import tqdm

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DETAILED_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"
JSON_FORMAT = "json"
_NAMED_FORMATS = {"default": DEFAULT_FORMAT, "detailed": DETAILED_FORMAT}

LEVEL_ENV_VAR = "BETANAG_LOG_LEVEL"

LOG_LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL,
}

# Attributes every LogRecord has; anything else arrived through `extra` or LogContext.
_RECORD_ATTRS = frozenset(
    logging.LogRecord("", 0, "", 0, "", (), None).__dict__.keys() | {"message", "asctime"}
)


class JSONFormatter(logging.Formatter):
    """One JSON object per record, extra fields under "extra"."""

    def __init__(self, include_extra: bool = True):
        super().__init__()
        self.include_extra = include_extra

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        if self.include_extra:
            extra_fields = {}
            for key, value in record.__dict__.items():
                if key in _RECORD_ATTRS:
                    continue
                try:
                    json.dumps(value)
                    extra_fields[key] = value
                except (TypeError, ValueError):
                    extra_fields[key] = str(value)
            if extra_fields:
                log_data["extra"] = extra_fields

        return json.dumps(log_data, ensure_ascii=False)


class TqdmHandler(logging.StreamHandler):
    """Console handler that routes through tqdm.write so progress bars stay intact."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            tqdm.write(self.format(record), file=self.stream)
            self.flush()
        except Exception:
            self.handleError(record)


def resolve_level(level: Union[str, int, None]) -> int:
    """Map a level name (or None, meaning the environment default) to a logging level."""
    if level is None:
        level = os.getenv(LEVEL_ENV_VAR, "info")
    if isinstance(level, int):
        return level
    return LOG_LEVELS.get(str(level).lower(), logging.INFO)


def build_formatter(log_format: str) -> logging.Formatter:
    """Formatter for a named format (default, detailed, json) or a raw format string."""
    if log_format == JSON_FORMAT:
        return JSONFormatter()
    return logging.Formatter(_NAMED_FORMATS.get(log_format, log_format))


class BetaNAGLogger:
    """
    Central logging configuration for BetaNAG.

    Singleton owning the handlers attached to the "betanag" logger.
    """

    _instance: Optional["BetaNAGLogger"] = None
    _initialized: bool = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if BetaNAGLogger._initialized:
            return

        self.root_logger = logging.getLogger("betanag")
        self.root_logger.setLevel(logging.DEBUG)
        self.root_logger.propagate = False
        self._handlers: Dict[str, logging.Handler] = {}
        BetaNAGLogger._initialized = True

    def configure(
        self,
        level: Union[str, int, None] = None,
        log_file: Optional[Path] = None,
        log_format: str = "default",
        json_output: bool = False,
        console_output: bool = True,
        file_rotation: bool = True,
        max_file_size: int = 10 * 1024 * 1024,
        backup_count: int = 5,
    ) -> None:
        """
        Configure logging for BetaNAG.

        Args:
            level: Log level name or number; None reads BETANAG_LOG_LEVEL
            log_file: Optional path to log file
            log_format: 'default', 'detailed', 'json' or a format string
            json_output: Output logs in JSON format
            console_output: Enable console output
            file_rotation: Enable log file rotation
            max_file_size: Max file size before rotation (bytes)
            backup_count: Number of backup files to keep
        """
        self.clear_handlers()

        level = resolve_level(level)
        self.root_logger.setLevel(level)

        formatter = build_formatter(JSON_FORMAT if json_output else log_format)

        if console_output:
            console_handler = TqdmHandler(sys.stdout)
            console_handler.setLevel(level)
            console_handler.setFormatter(formatter)
            self.add_handler("console", console_handler)

        if log_file:
            log_file = Path(log_file)
            log_file.parent.mkdir(parents=True, exist_ok=True)
            if file_rotation:
                file_handler: logging.Handler = RotatingFileHandler(
                    log_file,
                    maxBytes=max_file_size,
                    backupCount=backup_count,
                    encoding="utf-8",
                )
            else:
                file_handler = logging.FileHandler(log_file, encoding="utf-8")
            file_handler.setLevel(level)
            file_handler.setFormatter(formatter)
            self.add_handler("file", file_handler)

    def clear_handlers(self) -> None:
        """Remove all handlers from the root logger."""
        for handler in self.root_logger.handlers[:]:
            self.root_logger.removeHandler(handler)
        self._handlers.clear()

    def get_logger(self, name: str) -> logging.Logger:
        """Get a logger under the 'betanag.' namespace."""
        if not name.startswith("betanag"):
            name = f"betanag.{name}"
        return logging.getLogger(name)

    def add_handler(self, name: str, handler: logging.Handler) -> None:
        """Attach a named handler to the root logger."""
        self.root_logger.addHandler(handler)
        self._handlers[name] = handler


def setup_logging(
    level: Union[str, int, None] = None,
    log_file: Optional[Path] = None,
    log_format: str = "default",
    json_output: bool = False,
    console_output: bool = True,
    **kwargs,
) -> BetaNAGLogger:
    """Configure the "betanag" logger once per CLI invocation and return its manager."""
    manager = BetaNAGLogger()
    manager.configure(
        level=level,
        log_file=log_file,
        log_format=log_format,
        json_output=json_output,
        console_output=console_output,
        **kwargs,
    )
    return manager


class LogContext:
    """
    Attach experiment context to every record emitted inside the block.

    Usage:
        with LogContext(check="energy-decrement", beta=0.5, step=0.025):
            logger.info("Running cell")
    """

    def __init__(self, **context):
        self.context = context
        self._old_factory = None

    def __enter__(self):
        self._old_factory = logging.getLogRecordFactory()
        old_factory = self._old_factory
        context = self.context

        def record_factory(*args, **kwargs):
            record = old_factory(*args, **kwargs)
            for key, value in context.items():
                setattr(record, key, value)
            return record

        logging.setLogRecordFactory(record_factory)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        logging.setLogRecordFactory(self._old_factory)
        return False


def log_execution_time(logger: logging.Logger):
    """
    Decorator logging a function's wall time at DEBUG (ERROR when it raises).

    Usage:
        @log_execution_time(logger)
        def integrate(...):
            ...
    """

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                elapsed = time.perf_counter() - start
                logger.error(f"{func.__name__} failed after {elapsed:.3f}s: {e}")
                raise
            logger.debug(f"{func.__name__} completed in {time.perf_counter() - start:.3f}s")
            return result

        return wrapper

    return decorator
