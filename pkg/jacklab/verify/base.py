"""
Base suite interface for batch verification.
"""

import logging
import random
import time
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from jacklab.core.config import settings
from jacklab.core.exceptions import JackLabError
from jacklab.models.schemas import SuiteInfo, VerificationReport

logger = logging.getLogger(__name__)

# A check returns None when the statement holds, else the first failing case.
Counterexample = Optional[Dict[str, Any]]


@dataclass(frozen=True)
class Check:
    """One statement over one parameter range."""
    statement: str
    parameters: Dict[str, Any]
    run: Callable[[], Counterexample] = field(compare=False)
    conjectural: bool = False


def first_failure(
    cases: Iterable[Tuple[Dict[str, Any], Callable[[], Tuple[bool, Dict[str, Any]]]]]
) -> Counterexample:
    """
    Evaluate cases in order and return the first one that fails.

    Each case is ``(inputs, observe)`` where ``observe()`` returns
    ``(holds, observed)``; the counterexample merges both dicts.
    """
    for inputs, observe in cases:
        holds, observed = observe()
        if not holds:
            return {**inputs, **observed}
    return None


class BaseSuite(ABC):
    """
    Base class for all verification suites.

    Subclasses list their statements and build the checks for a given
    ``n_max``; running, timing, parallelism and ordering live here.
    """

    name: str = ""
    description: str = ""
    statements: Tuple[str, ...] = ()

    @abstractmethod
    def default_n(self) -> int:
        """
        Parameter bound used when none is given.

        Returns:
            Bound read from settings
        """
        pass

    @abstractmethod
    def checks(self, n_max: int, rng: random.Random) -> List[Check]:
        """
        Build every check up to ``n_max``.

        Args:
            n_max: Parameter bound; its meaning is suite specific
            rng: Seeded generator for randomized spot checks

        Returns:
            Checks in a deterministic order
        """
        pass

    def info(self) -> SuiteInfo:
        return SuiteInfo(
            name=self.name,
            description=self.description,
            default_n=self.default_n(),
            statements=list(self.statements),
        )

    def _evaluate(self, check: Check) -> VerificationReport:
        started = time.perf_counter()
        try:
            counterexample = check.run()
            detail = None
        except JackLabError as exc:
            counterexample = {**check.parameters, "error": f"{type(exc).__name__}: {exc}"}
            detail = "raised"
        except Exception as exc:
            logger.exception(f"{self.name}: {check.statement} crashed")
            counterexample = {**check.parameters, "error": f"{type(exc).__name__}: {exc}"}
            detail = "crashed"
        elapsed = time.perf_counter() - started

        if check.conjectural:
            status = "reported-only"
            if counterexample is not None:
                detail = detail or "not observed"
        elif counterexample is None:
            status = "verified"
        else:
            status = "failed"
            logger.warning(f"{self.name}: {check.statement} failed at {counterexample}")

        return VerificationReport(
            suite=self.name,
            statement=check.statement,
            parameters=check.parameters,
            status=status,
            counterexample=counterexample,
            detail=detail,
            wall_time=elapsed,
        )

    def run(self, n_max: Optional[int] = None, seed: int = 0) -> List[VerificationReport]:
        """
        Run every check of the suite.

        Args:
            n_max: Parameter bound, defaults to :meth:`default_n`
            seed: Seed for randomized spot checks

        Returns:
            Reports sorted by statement and parameters
        """
        bound = self.default_n() if n_max is None else n_max
        checks = self.checks(bound, random.Random(seed))
        logger.info(f"suite {self.name}: {len(checks)} checks up to n={bound}")
        started = time.perf_counter()

        reports = []
        with ThreadPoolExecutor(max_workers=settings.worker_count) as executor:
            future_to_check = {executor.submit(self._evaluate, check): check for check in checks}
            for future in as_completed(future_to_check):
                reports.append(future.result())

        reports.sort(key=VerificationReport.sort_key)
        logger.info(f"suite {self.name} finished in {time.perf_counter() - started:.2f}s")
        return reports
