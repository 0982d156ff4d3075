"""
Verification suites and runner.
"""

from .base import BaseSuite, Check
from .runner import available_suites, exit_status, get_suite, run_suite, write_reports
from .suites import SUITES

__all__ = [
    "BaseSuite",
    "Check",
    "SUITES",
    "available_suites",
    "exit_status",
    "get_suite",
    "run_suite",
    "write_reports",
]
