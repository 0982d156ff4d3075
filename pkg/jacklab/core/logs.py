"""
Logging setup for the jacklab logger hierarchy.
"""

import logging
from typing import Optional

from .config import settings

_HANDLER_NAME = "jacklab-stream"


def configure_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> logging.Logger:
    """
    Attach a single stream handler to the ``jacklab`` logger.

    Calling this more than once replaces the level and format instead of
    stacking handlers.

    Args:
        level: Level name; defaults to ``settings.JACKLAB_LOG_LEVEL``
        fmt: Format string; defaults to ``settings.JACKLAB_LOG_FORMAT``

    Returns:
        The configured package logger
    """
    logger = logging.getLogger("jacklab")
    logger.setLevel((level or settings.JACKLAB_LOG_LEVEL).upper())

    handler = next((h for h in logger.handlers if h.get_name() == _HANDLER_NAME), None)
    if handler is None:
        handler = logging.StreamHandler()
        handler.set_name(_HANDLER_NAME)
        logger.addHandler(handler)
    handler.setFormatter(logging.Formatter(fmt or settings.JACKLAB_LOG_FORMAT))
    return logger
