"""
Logging configuration with optional JSON formatting and rotation.
All handlers write to stderr or files; stdout is reserved for data.
"""

import logging
import logging.handlers
import os
import sys
import time
from typing import Any, Dict

from pythonjsonlogger import jsonlogger

from src.utils.exceptions import SpectralConstantsError
from src.utils.logger import LOGGER_ROOT, get_logger

# extra fields shown inline by the console formatter
CONTEXT_FIELDS = ('campaign', 'claims', 'passed', 'failed', 'table', 'format', 'rows')

_LEVEL_COLORS = {
    logging.DEBUG: 36,
    logging.INFO: 32,
    logging.WARNING: 33,
    logging.ERROR: 31,
    logging.CRITICAL: 35,
}


class StandardFormatter(logging.Formatter):
    """Console formatter: one line per record, run context appended as key=value."""

    def __init__(self, use_colors: bool = True):
        super().__init__(fmt='%(asctime)s | %(levelname)-8s | %(name)s | %(message)s',
                         datefmt='%H:%M:%S')
        self.use_colors = use_colors

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        context = [f"{key}={getattr(record, key)}" for key in CONTEXT_FIELDS if hasattr(record, key)]
        if hasattr(record, 'duration_ms'):
            context.append(f"duration_ms={record.duration_ms:.1f}")
        if context:
            # traceback, if any, stays on the following lines
            head, sep, tail = line.partition('\n')
            line = f"{head} [{' '.join(context)}]{sep}{tail}"
        if self.use_colors and record.levelno in _LEVEL_COLORS:
            line = f"\033[{_LEVEL_COLORS[record.levelno]}m{line}\033[0m"
        return line


def _json_formatter() -> logging.Formatter:
    return jsonlogger.JsonFormatter(
        '%(asctime)s %(levelname)s %(name)s %(message)s',
        rename_fields={'levelname': 'level', 'name': 'logger'},
    )


def setup_logging(config: Dict[str, Any]) -> logging.Logger:
    """
    Setup logging for library and CLI use.

    Args:
        config: Configuration dictionary with logging settings

    Returns:
        Root toolkit logger
    """
    log_level = str(config.get('LOG_LEVEL', 'WARNING')).upper()
    log_file = config.get('LOG_FILE', '')
    use_json = config.get('LOG_JSON_FORMAT', False)
    max_bytes = config.get('LOG_MAX_BYTES', 10485760)
    backup_count = config.get('LOG_BACKUP_COUNT', 5)

    root_logger = logging.getLogger(LOGGER_ROOT)
    root_logger.setLevel(getattr(logging, log_level, logging.WARNING))
    root_logger.handlers = []
    root_logger.propagate = False

    # ==================== CONSOLE HANDLER (stderr) ====================
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(root_logger.level)
    if use_json:
        console_handler.setFormatter(_json_formatter())
    else:
        console_handler.setFormatter(StandardFormatter(use_colors=sys.stderr.isatty()))
    root_logger.addHandler(console_handler)

    # ==================== FILE HANDLER (Rotating, optional) ====================
    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding='utf-8'
        )
        file_handler.setLevel(root_logger.level)
        file_handler.setFormatter(_json_formatter() if use_json else StandardFormatter(use_colors=False))
        root_logger.addHandler(file_handler)

    # joblib workers chatter at INFO
    logging.getLogger('joblib').setLevel(logging.WARNING)

    root_logger.debug(f"Logging initialized - Level: {log_level}, Format: {'JSON' if use_json else 'Standard'}")

    return root_logger


class OperationLogger:
    """
    Times a campaign or table build and logs its outcome.

    Toolkit errors are logged at WARNING (they are reported to the caller
    anyway), anything else at ERROR. The exception is never suppressed.

        with OperationLogger('campaign', campaign='maincomp') as op:
            ...
            op.add_context('failed', 0)
    """

    def __init__(self, operation: str, **context):
        self.logger = get_logger('operation')
        self.operation = operation
        self.context = context
        self._started = 0.0

    def __enter__(self) -> 'OperationLogger':
        self._started = time.perf_counter()
        self.logger.debug(f"{self.operation} started", extra=self.context)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> bool:
        extra = {**self.context, 'duration_ms': (time.perf_counter() - self._started) * 1000.0}
        if exc_type is None:
            self.logger.info(f"{self.operation} finished", extra=extra)
        elif issubclass(exc_type, SpectralConstantsError):
            self.logger.warning(f"{self.operation} failed: {exc_val.error_code}: {exc_val}", extra=extra)
        else:
            self.logger.error(f"{self.operation} crashed: {exc_type.__name__}: {exc_val}", extra=extra)
        return False

    def add_context(self, key: str, value: Any):
        self.context[key] = value
