"""
jack-lab - exact Jack characters, connection coefficients and maps

Exact symbolic computation of Jack polynomials, normalized Jack characters
and their structure constants, together with the matchings and maps that
count their leading coefficients.

Quick Start:
    >>> from jacklab import Partition, connection_c
    >>> table = connection_c(2)
    >>> table.get(Partition.of(2), Partition.of(2), Partition.of(2))
    beta
"""

__version__ = "0.1.0"

from .algebra.partitions import Partition
from .algebra.coeffs import connection_c, connection_h
from .algebra.characters import ch, structure_constants
from .verify.runner import run_suite

__all__ = [
    "__version__",
    "Partition",
    "ch",
    "structure_constants",
    "connection_c",
    "connection_h",
    "run_suite",
]
