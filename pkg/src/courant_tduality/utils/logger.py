"""
Logging setup for the command line and for embedding applications.

Console output goes to stderr: stdout carries the JSON report stream.
"""

import logging
import logging.handlers
import os
import sys
from typing import Optional, TextIO, Union

from ..core.exceptions import ConfigError

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_FILE_BYTES = 10 * 1024 * 1024
LOG_FILE_BACKUPS = 5


def resolve_level(level: Union[int, str]) -> int:
    """
    Numeric level for an int or a name such as "debug" or "INFO".

    Raises:
        ConfigError: On an unknown level name.
    """
    if isinstance(level, int):
        return level
    value = logging.getLevelName(str(level).upper())
    if not isinstance(value, int):
        raise ConfigError(f"Unknown logging level: {level}")
    return value


def setup_logging(
    name: str = "courant_tduality",
    level: Union[int, str] = logging.INFO,
    log_file: Optional[str] = None,
    format_string: Optional[str] = None,
    stream: Optional[TextIO] = None,
) -> logging.Logger:
    """
    Attach a console handler (and optionally a rotating file) to a logger.

    Calling it again only adjusts the level of the handlers already
    attached, so repeated CLI invocations in one process do not duplicate
    output.

    Args:
        name: Logger name, normally the package name.
        level: Numeric level or level name.
        log_file: Log file, rotated at 10 MB with 5 backups.
        format_string: Record format; DEFAULT_FORMAT when omitted.
        stream: Console stream, stderr when omitted.

    Example:
        >>> logger = setup_logging(level="DEBUG", log_file="logs/tdualize.log")
    """
    numeric = resolve_level(level)
    logger = logging.getLogger(name)
    logger.setLevel(numeric)
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(numeric)
        return logger

    formatter = logging.Formatter(format_string or DEFAULT_FORMAT)
    handlers: list = [logging.StreamHandler(stream or sys.stderr)]
    if log_file:
        os.makedirs(os.path.dirname(os.path.abspath(log_file)), exist_ok=True)
        handlers.append(
            logging.handlers.RotatingFileHandler(
                log_file, maxBytes=LOG_FILE_BYTES, backupCount=LOG_FILE_BACKUPS
            )
        )
    for handler in handlers:
        handler.setLevel(numeric)
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    return logger
