"""
One-time logging configuration for the command line front end.
"""

import logging
import logging.config
import os

from src.utils.constants import DEFAULT_LOG_LEVEL, LOGGING_CONFIG_FILE


def configure_logging(level: str = DEFAULT_LOG_LEVEL) -> None:
    """Configure the formsym logger tree from logging.conf.

    Args:
        level: Level name applied to the formsym logger and its handler

    Raises:
        ValueError: If the level name is unknown
    """
    level = level.upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ValueError(f"unknown log level {level!r}")
    path = os.path.join(os.path.dirname(__file__), LOGGING_CONFIG_FILE)
    logging.config.fileConfig(path, defaults={"formsym_level": level}, disable_existing_loggers=False)
