import logging
import sys
from pathlib import Path
from typing import Optional, Union

logger = logging.getLogger("a4_polytopes")

DEFAULT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level: Union[int, str] = logging.INFO,
                      log_file: Optional[Union[str, Path]] = None,
                      log_format: Optional[str] = None) -> logging.Logger:
    """
    Configure the package logger.

    Records go to stderr; stdout carries the reports and meshes of the CLI.

    Args:
        level: A logging level or its name, e.g. ``"DEBUG"``
        log_file: Optional file that receives the same records
        log_format: Optional custom log format
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            raise ValueError(f"unknown log level {level!r}")

    logger.setLevel(level)
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(log_format or DEFAULT_FORMAT)
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(path))

    for handler in handlers:
        handler.setLevel(level)
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    logger.debug(f"a4_polytopes logging configured at level {logging.getLevelName(level)}")
    return logger
