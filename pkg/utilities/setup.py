"""Holds environmental variables, sets up custom logger."""

import logging
import os

log = logging.getLogger(name="log")

# declare environment constants
DEFAULT_LEXICON_PATH: str | None = os.environ.get("ACE_NLS_LEXICON") or None
LOG_LEVEL: str = os.environ.get("ACE_NLS_LOG_LEVEL", "WARNING").upper()


def level_from_name(name: str, default: int = logging.WARNING) -> int:
    """
    Translates a logging level name (e.g. "DEBUG") into its numeric value.

    Parameters:
        name (str): Level name as found in ACE_NLS_LOG_LEVEL.
        default (int, optional): Level used when name is not a known level. Defaults to logging.WARNING.

    Returns:
        int: numeric logging level.
    """
    level = logging.getLevelName(name)
    if isinstance(level, int):
        return level
    return default


def logger(
    logging_format: str = "%(levelname)s, %(name)s.%(funcName)s: %(message)s",
    level: int = logging.INFO,
) -> None:
    """
    Sets up custom logger. Messages go to the error stream so that generated documents on stdout stay pipe-safe.

    Parameters:
        logging_format (str, optional): Logging format. Defaults to "%(levelname)s, %(name)s.%(funcName)s: %(message)s".
        level (int, optional): Logging level. Defaults to logging.INFO.

    Returns:
        None
    """
    log.debug(msg="Setting up custom logger.")

    log.setLevel(level=level)

    handler = logging.StreamHandler(stream=None)

    formatter = logging.Formatter(fmt=logging_format)
    handler.setFormatter(fmt=formatter)

    if log.hasHandlers():
        log.handlers.clear()

    log.addHandler(handler)
    log.propagate = False
