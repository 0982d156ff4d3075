"""
Symmetric-function kernel: basis transitions, the α-deformed inner product,
Jack polynomials J_λ and unnormalized Jack characters θ_μ(λ).

All per-degree data (monomial/power-sum transition, the Jack basis and the
inverse of the θ-matrix) is computed once per n and stored in write-once
tables shared by every caller.
"""

import logging
import threading
from dataclasses import dataclass, field as dataclass_field
from math import factorial
from typing import Dict, List, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring

from jacklab.algebra.partitions import Partition, all_partitions, z
from jacklab.algebra.scalars import ALPHA_FIELD, AlphaRationalFunction, alpha
from jacklab.core.exceptions import BasisMismatchError, DegenerateBasisError, PartitionError

logger = logging.getLogger(__name__)

POWER_SUM = "power-sum"
MONOMIAL = "monomial"

ALPHA_DOMAIN = ALPHA_FIELD.to_domain()


@dataclass
class SymFunc:
    """A homogeneous symmetric function stored as a sparse basis expansion."""

    basis: str
    degree: int
    coefficients: Dict[Partition, AlphaRationalFunction] = dataclass_field(default_factory=dict)

    def __post_init__(self):
        for lam in self.coefficients:
            if lam.size != self.degree:
                raise BasisMismatchError(f"{lam} does not have size {self.degree}")
        self.coefficients = {lam: c for lam, c in self.coefficients.items() if c}

    def coefficient(self, lam: Partition) -> AlphaRationalFunction:
        return self.coefficients.get(lam, ALPHA_FIELD.zero)

    def items(self):
        return self.coefficients.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (self.basis, self.degree, self.coefficients) == (
            other.basis, other.degree, other.coefficients
        )


# ---------------------------------------------------------------------------
# Transition between monomial and power-sum bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Transition:
    partitions: Tuple[Partition, ...]
    # p_to_m[i][j] = [m_{μ_j}] p_{λ_i}
    p_to_m: Tuple[tuple, ...]
    # m_to_p[i][j] = [p_{λ_j}] m_{μ_i}
    m_to_p: Tuple[tuple, ...]


def _expand_power_sums(n: int, partitions: Tuple[Partition, ...]) -> List[List]:
    """Rows of [x^μ] p_λ computed by expanding in exactly n variables."""
    names = ",".join(f"x{i}" for i in range(1, n + 1))
    poly_ring, *xs = ring(names, QQ)
    power = {k: sum((x ** k for x in xs), poly_ring.zero) for k in range(1, n + 1)}
    exponents = [lam.parts + (0,) * (n - lam.length) for lam in partitions]

    rows = []
    for lam in partitions:
        p_lam = poly_ring.one
        for part in lam:
            p_lam *= power[part]
        rows.append([p_lam.get(exps, QQ.zero) for exps in exponents])
    return rows


class _JackTables:
    """Write-once per-degree caches guarded by a lock."""

    def __init__(self):
        self._lock = threading.Lock()
        self._transitions: Dict[int, _Transition] = {}
        self._jacks: Dict[int, Dict[Partition, SymFunc]] = {}
        self._theta_inverse: Dict[int, Tuple[Tuple[AlphaRationalFunction, ...], ...]] = {}

    def transition(self, n: int) -> _Transition:
        cached = self._transitions.get(n)
        if cached is not None:
            return cached
        partitions = all_partitions(n)
        if n == 0:
            table = _Transition(partitions, ((QQ.one,),), ((QQ.one,),))
        else:
            rows = _expand_power_sums(n, partitions)
            size = len(partitions)
            inverse = DomainMatrix(rows, (size, size), QQ).inv()
            m_to_p = tuple(tuple(inverse[i, j].element for j in range(size)) for i in range(size))
            table = _Transition(partitions, tuple(tuple(r) for r in rows), m_to_p)
        with self._lock:
            table = self._transitions.setdefault(n, table)
        logger.debug(f"monomial/power-sum transition cached for n={n}")
        return table

    def jacks(self, n: int) -> Dict[Partition, SymFunc]:
        cached = self._jacks.get(n)
        if cached is not None:
            return cached
        computed = _gram_schmidt(n, self.transition(n))
        with self._lock:
            computed = self._jacks.setdefault(n, computed)
        logger.debug(f"Jack polynomials cached for n={n}")
        return computed

    def theta_inverse(self, n: int) -> Tuple[Tuple[AlphaRationalFunction, ...], ...]:
        cached = self._theta_inverse.get(n)
        if cached is not None:
            return cached
        matrix = theta_matrix(n)
        if not matrix.det():
            raise DegenerateBasisError("theta basis degenerate")
        inverse = matrix.inv()
        size = matrix.shape[0]
        rows = tuple(tuple(inverse[i, j].element for j in range(size)) for i in range(size))
        with self._lock:
            rows = self._theta_inverse.setdefault(n, rows)
        return rows


_TABLES = _JackTables()


def _weight(lam: Partition) -> AlphaRationalFunction:
    return alpha ** lam.length * z(lam)


def monomial_in_powersum(mu: Partition) -> SymFunc:
    """Power-sum expansion of the monomial symmetric function m_μ."""
    table = _TABLES.transition(mu.size)
    row = table.m_to_p[table.partitions.index(mu)]
    return SymFunc(
        POWER_SUM,
        mu.size,
        {lam: ALPHA_FIELD(c) for lam, c in zip(table.partitions, row) if c},
    )


def to_monomial_basis(f: SymFunc) -> SymFunc:
    """Rewrite a power-sum expansion in the monomial basis."""
    if f.basis != POWER_SUM:
        raise BasisMismatchError("expected a power-sum expansion")
    table = _TABLES.transition(f.degree)
    result = {}
    for j, mu in enumerate(table.partitions):
        total = ALPHA_FIELD.zero
        for i, lam in enumerate(table.partitions):
            entry = table.p_to_m[i][j]
            if entry:
                total += f.coefficient(lam) * entry
        result[mu] = total
    return SymFunc(MONOMIAL, f.degree, result)


def inner_product(f: SymFunc, g: SymFunc) -> AlphaRationalFunction:
    """
    ⟨f, g⟩_α with ⟨p_λ, p_μ⟩_α = α^{ℓ(λ)} z_λ δ_{λμ}.

    Raises:
        BasisMismatchError: unless both are power-sum expansions of one degree
    """
    if f.basis != POWER_SUM or g.basis != POWER_SUM:
        raise BasisMismatchError("inner product needs power-sum expansions")
    if f.degree != g.degree:
        raise BasisMismatchError(f"degree mismatch: {f.degree} != {g.degree}")
    total = ALPHA_FIELD.zero
    for lam, c in f.items():
        other = g.coefficient(lam)
        if other:
            total += c * other * _weight(lam)
    return total


def _gram_schmidt(n: int, table: _Transition) -> Dict[Partition, SymFunc]:
    # Increasing lexicographic order is a linear extension of dominance.
    order = list(reversed(table.partitions))
    unit_index = table.partitions.index(Partition((1,) * n)) if n else 0
    done: List[Tuple[SymFunc, AlphaRationalFunction]] = []
    result: Dict[Partition, SymFunc] = {}
    for lam in order:
        vector = dict(monomial_in_powersum(lam).coefficients)
        candidate = SymFunc(POWER_SUM, n, vector)
        for previous, norm in done:
            projection = inner_product(candidate, previous) / norm
            if projection:
                for mu, c in previous.items():
                    vector[mu] = vector.get(mu, ALPHA_FIELD.zero) - projection * c
        candidate = SymFunc(POWER_SUM, n, vector)

        # [m_{1^n}] J_λ = n!
        unit_coefficient = ALPHA_FIELD.zero
        for i, mu in enumerate(table.partitions):
            entry = table.p_to_m[i][unit_index]
            if entry:
                unit_coefficient += candidate.coefficient(mu) * entry
        scale = factorial(n) / unit_coefficient
        jack_lam = SymFunc(POWER_SUM, n, {mu: c * scale for mu, c in candidate.items()})
        done.append((jack_lam, inner_product(jack_lam, jack_lam)))
        result[lam] = jack_lam
    return result


def jack(lam: Partition) -> SymFunc:
    """The Jack polynomial J_λ in the power-sum basis."""
    return _TABLES.jacks(lam.size)[lam]


def theta(mu: Partition, lam: Partition) -> AlphaRationalFunction:
    """
    θ_μ(λ), the coefficient of p_μ in J_λ.

    Raises:
        PartitionError: if |μ| != |λ|
    """
    if mu.size != lam.size:
        raise PartitionError("incomparable sizes")
    return jack(lam).coefficient(mu)


def jack_norm(lam: Partition) -> AlphaRationalFunction:
    """⟨J_λ, J_λ⟩_α."""
    j = jack(lam)
    return inner_product(j, j)


def theta_matrix(n: int) -> DomainMatrix:
    """[θ_μ(λ)] with rows λ and columns μ in reverse-lexicographic order."""
    partitions = all_partitions(n)
    rows = [[theta(mu, lam) for mu in partitions] for lam in partitions]
    return DomainMatrix(rows, (len(partitions), len(partitions)), ALPHA_DOMAIN)


def theta_inverse(n: int) -> Tuple[Tuple[AlphaRationalFunction, ...], ...]:
    """
    Inverse of the θ-matrix of degree n, indexed [μ][λ].

    Raises:
        DegenerateBasisError: if the θ-matrix is singular
    """
    return _TABLES.theta_inverse(n)
