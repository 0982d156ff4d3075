"""
Connection coefficients c^λ_{π,σ} and their logarithmic counterparts
h^λ_{π,σ}.

c is computed by solving θ_π θ_σ = Σ_μ c^μ θ_μ pointwise on all λ ⊢ n
against the inverse θ-matrix, and checked against the Cauchy-sum formula.
h is read off α t ∂_t log of the triple generating series of c.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Dict, Iterator, Optional, Tuple, Union

from sympy.polys.ring_series import rs_log
from sympy.polys.rings import ring

from jacklab.algebra.jack import ALPHA_DOMAIN, jack_norm, theta, theta_inverse
from jacklab.algebra.partitions import Partition, all_partitions, degree_d, ordered_splittings, z
from jacklab.algebra.scalars import (
    ALPHA_FIELD,
    BETA_RING,
    AlphaRationalFunction,
    BetaPolynomial,
    alpha,
    alpha_to_beta,
    poly_coefficient,
)
from jacklab.core.exceptions import ConversionError, OracleMismatchError

logger = logging.getLogger(__name__)

Triple = Tuple[Partition, Partition, Partition]
Coefficient = Union[AlphaRationalFunction, BetaPolynomial]

ALPHA = "alpha"
BETA = "beta"


@dataclass
class TripleTable:
    """Coefficients indexed by (π, σ, λ), all partitions of n; absent entries are zero."""

    n: int
    kind: str
    entries: Dict[Triple, Coefficient] = field(default_factory=dict)

    def zero(self) -> Coefficient:
        return ALPHA_FIELD.zero if self.kind == ALPHA else BETA_RING.zero

    def get(self, pi: Partition, sigma: Partition, lam: Partition) -> Coefficient:
        return self.entries.get((pi, sigma, lam), self.zero())

    def items(self) -> Iterator[Tuple[Triple, Coefficient]]:
        return iter(sorted(self.entries.items()))

    def is_symmetric(self) -> bool:
        """Invariance under exchanging π and σ."""
        return all(
            self.get(sigma, pi, lam) == value for (pi, sigma, lam), value in self.entries.items()
        )


# ---------------------------------------------------------------------------
# c: linear solve with a Cauchy-sum oracle
# ---------------------------------------------------------------------------

def cauchy_c(pi: Partition, sigma: Partition, lam: Partition) -> AlphaRationalFunction:
    """α^{ℓ(λ)} z_λ Σ_{θ⊢n} θ_π(θ) θ_σ(θ) θ_λ(θ) / ⟨J_θ, J_θ⟩_α."""
    total = ALPHA_FIELD.zero
    for shape in all_partitions(lam.size):
        product = theta(pi, shape) * theta(sigma, shape) * theta(lam, shape)
        if product:
            total += product / jack_norm(shape)
    return total * alpha ** lam.length * z(lam)


def _solve_c(n: int, pi: Partition, sigma: Partition) -> Dict[Partition, AlphaRationalFunction]:
    partitions = all_partitions(n)
    inverse = theta_inverse(n)
    pointwise = [theta(pi, shape) * theta(sigma, shape) for shape in partitions]
    solved = {}
    for i, mu in enumerate(partitions):
        value = ALPHA_FIELD.zero
        for j in range(len(partitions)):
            if inverse[i][j] and pointwise[j]:
                value += inverse[i][j] * pointwise[j]
        solved[mu] = value
    return solved


@lru_cache(maxsize=None)
def _c_alpha(n: int) -> TripleTable:
    table = TripleTable(n, ALPHA)
    partitions = all_partitions(n)
    for a, pi in enumerate(partitions):
        for sigma in partitions[a:]:
            for mu, value in _solve_c(n, pi, sigma).items():
                oracle = cauchy_c(pi, sigma, mu)
                if value != oracle:
                    raise OracleMismatchError(
                        f"c^{mu}_{pi},{sigma}: linear solve {value} != Cauchy sum {oracle}"
                    )
                if value:
                    table.entries[(pi, sigma, mu)] = value
                    table.entries[(sigma, pi, mu)] = value
    logger.debug(f"connection coefficients cached for n={n}")
    return table


def connection_c_alpha(n: int) -> TripleTable:
    """c^λ_{π,σ} for all triples of partitions of n, as rational functions of α."""
    return _c_alpha(n)


@lru_cache(maxsize=None)
def connection_c(n: int) -> TripleTable:
    """
    c^λ_{π,σ} for all triples of partitions of n, as polynomials in β = α − 1.

    Raises:
        OracleMismatchError: if the linear solve disagrees with the Cauchy sum
        ConversionError: if some coefficient is not a polynomial in β
    """
    source = _c_alpha(n)
    return TripleTable(n, BETA, {key: alpha_to_beta(v) for key, v in source.entries.items()})


# ---------------------------------------------------------------------------
# h: logarithm of the triple generating series
# ---------------------------------------------------------------------------

def _series_ring(n_max: int):
    names = ["t"]
    for slot in ("x", "y", "z"):
        names.extend(f"{slot}{k}" for k in range(1, n_max + 1))
    R, *gens = ring(",".join(names), ALPHA_DOMAIN)
    return R, gens[0]


def _exponents(n_max: int, n: int, pi: Partition, sigma: Partition, lam: Partition) -> Tuple[int, ...]:
    monomial = [n]
    for p in (pi, sigma, lam):
        monomial.extend(p.multiplicity(k) for k in range(1, n_max + 1))
    return tuple(monomial)


def _partition_of(multiplicities: Tuple[int, ...]) -> Partition:
    return Partition.from_parts(k + 1 for k, m in enumerate(multiplicities) for _ in range(m))


@lru_cache(maxsize=None)
def _h_tables(n_max: int) -> Dict[int, TripleTable]:
    R, t = _series_ring(n_max)
    terms = {R.zero_monom: ALPHA_DOMAIN.one}
    for n in range(1, n_max + 1):
        for (pi, sigma, lam), c in _c_alpha(n).entries.items():
            weight = c / (alpha ** lam.length * z(lam))
            terms[_exponents(n_max, n, pi, sigma, lam)] = weight
    series = R.from_dict(terms)
    log_series = rs_log(series, t, n_max + 1)

    tables = {n: TripleTable(n, ALPHA) for n in range(1, n_max + 1)}
    for monomial, coefficient in log_series.items():
        n = monomial[0]
        if not 1 <= n <= n_max or not coefficient:
            continue
        blocks = [monomial[1 + k * n_max: 1 + (k + 1) * n_max] for k in range(3)]
        pi, sigma, lam = (_partition_of(b) for b in blocks)
        tables[n].entries[(pi, sigma, lam)] = coefficient * alpha * n
    logger.debug(f"h series expanded up to t^{n_max}")
    return tables


def connection_h(n_max: int) -> Dict[int, TripleTable]:
    """
    h^λ_{π,σ} for every n <= n_max, as rational functions of α.

    The series 1 + Σ_n t^n Σ c^λ_{π,σ}/(α^{ℓ(λ)} z_λ) p_π(x) p_σ(y) p_λ(z)
    lives in a polynomial ring where p_k of each alphabet is a variable, so
    the product of power sums concatenates partitions. h is the coefficient
    of α t ∂_t log of that series.
    """
    return _h_tables(n_max)


def h_as_beta(table: TripleTable) -> Dict[Triple, Optional[BetaPolynomial]]:
    """Convert h to β where possible; entries with a pole at β become None."""
    converted: Dict[Triple, Optional[BetaPolynomial]] = {}
    for key, value in table.items():
        try:
            converted[key] = alpha_to_beta(value)
        except ConversionError:
            logger.warning(f"h^{key[2]}_{key[0]},{key[1]} is not a polynomial in beta")
            converted[key] = None
    return converted


# ---------------------------------------------------------------------------
# Leading-coefficient identity through single-part h
# ---------------------------------------------------------------------------

def _top_beta(value: AlphaRationalFunction, degree: int) -> Fraction:
    if degree < 0 or not value:
        return Fraction(0)
    return poly_coefficient(alpha_to_beta(value), degree)


def leading_factorization_sides(pi: Partition, sigma: Partition, lam: Partition) -> Tuple[Fraction, Fraction]:
    """
    ([β^d] c^λ_{π,σ}, Σ ∏_i [β^{λ_i+1−ℓ(π^i)−ℓ(σ^i)}] h^{(λ_i)}_{π^i,σ^i}) with
    d = d(π,σ;λ); the sum runs over ordered splittings of π and σ into
    pieces of sizes λ_1, λ_2, ...
    """
    d = degree_d(pi, sigma, lam)
    lhs = _top_beta(connection_c_alpha(lam.size).get(pi, sigma, lam), d)

    tables = connection_h(lam[0]) if lam.parts else {}
    sizes = list(lam.parts)
    rhs = Fraction(0)
    for pieces_pi in ordered_splittings(pi, sizes):
        for pieces_sigma in ordered_splittings(sigma, sizes):
            rhs += prod(
                (
                    _top_beta(
                        tables[part].get(p, s, Partition((part,))),
                        part + 1 - p.length - s.length,
                    )
                    for part, p, s in zip(sizes, pieces_pi, pieces_sigma)
                ),
                start=Fraction(1),
            )
    return lhs, rhs


def check_leading_factorization(pi: Partition, sigma: Partition, lam: Partition) -> bool:
    """Whether the leading coefficient of c^λ_{π,σ} factors through single-part h."""
    lhs, rhs = leading_factorization_sides(pi, sigma, lam)
    return lhs == rhs
