"""
Normalized Jack characters, their structure constants and the bridge to
connection coefficients.

Characters take values in Laurent polynomials of A with α = A²; structure
constants are returned as polynomials in δ = A − 1/A.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterator, Optional, Tuple

from jacklab.algebra.jack import theta, theta_inverse
from jacklab.algebra.partitions import (
    Partition,
    all_partitions,
    degree_d,
    subpartition_leq,
    z,
)
from jacklab.algebra.scalars import (
    A,
    A_FIELD,
    DELTA_RING,
    BetaPolynomial,
    DeltaPolynomial,
    LaurentA,
    a_top_coefficient,
    alpha_to_laurent,
    delta_to_laurent,
    laurent_to_beta,
    laurent_to_delta,
    poly_coefficient,
    poly_degree,
    qq,
)
from jacklab.core.exceptions import CountingIdentityError, DegreeBoundError

logger = logging.getLogger(__name__)

# Values of Ch_π(λ) live in Laurent polynomials of degree <= |π| − ℓ(π).
CharacterValue = LaurentA


@dataclass
class StructureConstantTable:
    """g^μ_{π,σ} for every μ with |μ| <= |π| + |σ|; absent entries are zero."""

    pi: Partition
    sigma: Partition
    entries: Dict[Partition, DeltaPolynomial] = field(default_factory=dict)

    def get(self, mu: Partition) -> DeltaPolynomial:
        return self.entries.get(mu, DELTA_RING.zero)

    def items(self) -> Iterator[Tuple[Partition, DeltaPolynomial]]:
        return iter(sorted(self.entries.items(), key=lambda kv: (kv[0].size, kv[0])))

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, mu: Partition) -> bool:
        return mu in self.entries


@lru_cache(maxsize=None)
def ch(pi: Partition, lam: Partition) -> CharacterValue:
    """
    Normalized Jack character Ch_π(λ).

    Args:
        pi: Index partition
        lam: Young diagram the character is evaluated on

    Returns:
        Laurent polynomial in A; 0 when |λ| < |π|, 1 when π is empty
    """
    if not pi.parts:
        return A_FIELD.one
    if lam.size < pi.size:
        return A_FIELD.zero
    units = pi.multiplicity(1)
    padding = lam.size - pi.size
    value = alpha_to_laurent(theta(pi.with_ones(padding), lam))
    scale = comb(padding + units, units) * z(pi)
    return value * scale / A ** (pi.size - pi.length)


def a_top_ch(pi: Partition, lam: Partition) -> int:
    """
    Coefficient of A^{|π|−ℓ(π)} in Ch_π(λ).

    Raises:
        DegreeBoundError: if Ch_π(λ) has a higher power of A
        CountingIdentityError: if the coefficient is not a nonnegative integer
    """
    top = a_top_coefficient(ch(pi, lam), pi.size - pi.length)
    if top.denominator != 1 or top < 0:
        raise CountingIdentityError(f"AtopCh violated: {pi} on {lam} gives {top}")
    return int(top)


@lru_cache(maxsize=None)
def _theta_inverse_laurent(n: int) -> Tuple[Tuple[LaurentA, ...], ...]:
    return tuple(tuple(alpha_to_laurent(entry) for entry in row) for row in theta_inverse(n))


def _solve_block(
    m: int, residual: Dict[Partition, LaurentA]
) -> Dict[Partition, DeltaPolynomial]:
    partitions = all_partitions(m)
    inverse = _theta_inverse_laurent(m)
    solved = {}
    for i, mu in enumerate(partitions):
        y = A_FIELD.zero
        for j, lam in enumerate(partitions):
            if residual[lam] and inverse[i][j]:
                y += inverse[i][j] * residual[lam]
        if y:
            g = y * A ** (m - mu.length) / z(mu)
            solved[mu] = laurent_to_delta(g)
    return solved


def _structure_constants(pi: Partition, sigma: Partition, top: int) -> StructureConstantTable:
    table = StructureConstantTable(pi, sigma)
    for m in range(top + 1):
        residual = {}
        for lam in all_partitions(m):
            value = ch(pi, lam) * ch(sigma, lam)
            for mu, g in table.entries.items():
                value -= delta_to_laurent(g) * ch(mu, lam)
            residual[lam] = value
        table.entries.update(_solve_block(m, residual))
    return table


@lru_cache(maxsize=None)
def _cached_structure_constants(pi: Partition, sigma: Partition, top: int) -> StructureConstantTable:
    logger.debug(f"solving structure constants for {pi} x {sigma} up to size {top}")
    return _structure_constants(pi, sigma, top)


def structure_constants(
    pi: Partition, sigma: Partition, max_size: Optional[int] = None
) -> StructureConstantTable:
    """
    The table g^μ_{π,σ} with Ch_π · Ch_σ = Σ_μ g^μ_{π,σ}(δ) Ch_μ.

    The product is evaluated on every Young diagram of size m = 0..|π|+|σ|;
    Ch_μ(λ) vanishes for |μ| > |λ|, so each size block is solved against the
    θ-matrix of that size after subtracting the contributions already found.

    Args:
        pi, sigma: Index partitions
        max_size: Only solve the blocks with |μ| <= max_size; entries of
            those sizes are the same as in the full table

    Raises:
        DegenerateBasisError: if a θ-matrix is singular
        ConversionError: if an entry is not a polynomial in δ
    """
    top = pi.size + sigma.size
    if max_size is not None:
        top = min(top, max_size)
    # Ch_π Ch_σ is symmetric in (π, σ); share one cache entry.
    first, second = sorted((pi, sigma))
    cached = _cached_structure_constants(first, second, top)
    return StructureConstantTable(pi, sigma, dict(cached.entries))


def _n_statistics(p: Partition) -> Tuple[int, int, int]:
    return (
        p.size + p.length,
        p.size - p.length,
        p.size - p.length + p.multiplicity(1),
    )


def g_degree_bound(pi: Partition, sigma: Partition, mu: Partition) -> int:
    """min over i of n_i(π) + n_i(σ) − n_i(μ)."""
    return min(
        a + b - c for a, b, c in zip(_n_statistics(pi), _n_statistics(sigma), _n_statistics(mu))
    )


def check_degree_bounds(table: StructureConstantTable) -> None:
    """
    Raises:
        DegreeBoundError: if some g^μ exceeds its δ-degree bound
    """
    for mu, g in table.items():
        bound = g_degree_bound(table.pi, table.sigma, mu)
        degree = poly_degree(g)
        if degree is not None and degree > bound:
            raise DegreeBoundError(
                f"degree bound violated: g^{mu}_{table.pi},{table.sigma} has degree {degree} > {bound}"
            )


def top_degree_allowed(pi: Partition, sigma: Partition, mu: Partition) -> bool:
    """
    Necessary condition for [δ^{d(π,σ;μ)}] g^μ_{π,σ} to be nonzero: |μ| >= |π|, |σ|
    and both π ∪ 1^{|μ|−|π|} and σ ∪ 1^{|μ|−|σ|} are sub-partitions of μ.

    Not sufficient: for π = σ = (1) and μ = (2) both hold, but two single
    edges never join into one component.
    """
    if mu.size < pi.size or mu.size < sigma.size:
        return False
    return subpartition_leq(pi.padded_to(mu.size), mu) and subpartition_leq(
        sigma.padded_to(mu.size), mu
    )


def top_coefficient(pi: Partition, sigma: Partition, mu: Partition) -> Fraction:
    """[δ^{d(π,σ;μ)}] g^μ_{π,σ}; zero when d is negative."""
    d = degree_d(pi, sigma, mu)
    if d < 0:
        return Fraction(0)
    return poly_coefficient(structure_constants(pi, sigma, mu.size).get(mu), d)


def c_from_g(pi: Partition, sigma: Partition, mu: Partition) -> BetaPolynomial:
    """
    Connection coefficient c^μ_{π,σ} recovered from the structure constants
    of the unit-free partitions.

    Args:
        pi, sigma, mu: Partitions of the same size n

    Returns:
        Polynomial in β

    Raises:
        ConversionError: if the result is not a polynomial in β
    """
    n = mu.size
    pi_t, sigma_t, mu_t = pi.without_ones(), sigma.without_ones(), mu.without_ones()
    table = structure_constants(pi_t, sigma_t, n)

    total = A_FIELD.zero
    for i in range(mu.multiplicity(1) + 1):
        g = table.get(mu_t.with_ones(i))
        if g:
            total += delta_to_laurent(g) * (factorial(i) * comb(n - mu_t.size, i))

    d = degree_d(pi, sigma, mu)
    scale = Fraction(z(mu_t), z(pi_t) * z(sigma_t))
    return laurent_to_beta(total * A ** d * qq(scale))


def predicted_top_beta_coefficient(
    pi: Partition, sigma: Partition, lam: Partition
) -> Optional[Fraction]:
    """
    z_λ̃/(z_π̃ z_σ̃) · [δ^d] g^{λ̃}_{π̃,σ̃} with d = d(π,σ;λ), the predicted
    coefficient of β^d in c^λ_{π,σ}. ``None`` when d is negative.
    """
    d = degree_d(pi, sigma, lam)
    if d < 0:
        return None
    pi_t, sigma_t, lam_t = pi.without_ones(), sigma.without_ones(), lam.without_ones()
    g = structure_constants(pi_t, sigma_t, lam_t.size).get(lam_t)
    return Fraction(z(lam_t), z(pi_t) * z(sigma_t)) * poly_coefficient(g, d)


def character_table(pi: Partition, n: int) -> Dict[Partition, CharacterValue]:
    """Ch_π(λ) for every λ ⊢ n."""
    return {lam: ch(pi, lam) for lam in all_partitions(n)}

