"""
Core utilities and configuration for jacklab.
"""

from .config import settings, load_settings
from .logs import configure_logging

__all__ = ["settings", "load_settings", "configure_logging"]
