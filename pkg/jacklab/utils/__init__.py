"""
Output helpers.
"""

from .tables import FORMATS, render, rows_to_dataframe

__all__ = ["FORMATS", "render", "rows_to_dataframe"]
