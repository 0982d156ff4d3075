"""
Suite registry and batch runner.
"""

import logging
from typing import List, Optional, TextIO

from jacklab.core.exceptions import UnknownSuiteError
from jacklab.models.schemas import SuiteInfo, VerificationReport
from jacklab.verify.base import BaseSuite
from jacklab.verify.suites import SUITES

logger = logging.getLogger(__name__)

ALL = "all"


def get_suite(name: str) -> BaseSuite:
    """
    Look up a suite by name.

    Raises:
        UnknownSuiteError: if no suite has that name
    """
    try:
        return SUITES[name]
    except KeyError:
        known = ", ".join(SUITES)
        raise UnknownSuiteError(f"unknown suite '{name}' (known: {known}, {ALL})") from None


def available_suites() -> List[SuiteInfo]:
    return [suite.info() for suite in SUITES.values()]


def run_suite(name: str, n_max: Optional[int] = None, seed: int = 0) -> List[VerificationReport]:
    """
    Run one suite, or every suite in registry order for ``"all"``.

    Args:
        name: Suite name or ``"all"``
        n_max: Parameter bound; each suite's default when None
        seed: Seed for randomized spot checks

    Returns:
        Reports, grouped by suite and sorted within each suite
    """
    suites = list(SUITES.values()) if name == ALL else [get_suite(name)]
    reports: List[VerificationReport] = []
    for suite in suites:
        reports.extend(suite.run(n_max=n_max, seed=seed))

    failed = sum(1 for r in reports if r.blocking_failure)
    logger.info(f"{len(reports)} reports, {failed} failed")
    return reports


def exit_status(reports: List[VerificationReport]) -> int:
    """1 if any non-conjectural statement failed, else 0."""
    return 1 if any(r.blocking_failure for r in reports) else 0


def write_reports(reports: List[VerificationReport], stream: TextIO, timing: bool = False) -> None:
    for report in reports:
        stream.write(report.to_json_line(timing=timing) + "\n")
