"""
The hands-shaking procedure: labelled rooted white vertices of degrees π_i
and black vertices of degrees σ_j shake some of their hands (slots); every
slot left free closes into a leaf edge.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterator, List, Tuple

from jacklab.algebra.partitions import Partition, z
from jacklab.combinatorics.maps import count_oriented_lists_anyface
from jacklab.core.exceptions import PartitionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HandshakeOutcome:
    """
    One outcome of the procedure.

    Attributes:
        pairs: (white slot, black slot) handshakes; slots are numbered vertex
            by vertex starting at each vertex's root slot
        component_edges: Edge count of every component, decreasing
    """

    pi: Partition
    sigma: Partition
    pairs: Tuple[Tuple[int, int], ...]
    component_edges: Partition

    @property
    def edges(self) -> int:
        return self.pi.size + self.sigma.size - len(self.pairs)


def _owners(p: Partition) -> List[int]:
    return [vertex for vertex, part in enumerate(p) for _ in range(part)]


def _partial_injections(
    sources: int, targets: int, size: int
) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """Injections from a ``size``-subset of range(sources) into range(targets)."""

    def extend(source: int, used: Tuple[int, ...], chosen: Tuple[Tuple[int, int], ...]):
        if len(chosen) == size:
            yield chosen
            return
        if sources - source < size - len(chosen):
            return
        for target in range(targets):
            if target not in used:
                yield from extend(source + 1, used + (target,), chosen + ((source, target),))
        yield from extend(source + 1, used, chosen)

    yield from extend(0, (), ())


def _component_edges(pi: Partition, sigma: Partition, pairs) -> Partition:
    white_owner, black_owner = _owners(pi), _owners(sigma)
    offset = pi.length
    parent = list(range(pi.length + sigma.length))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for w, b in pairs:
        ra, rb = find(white_owner[w]), find(offset + black_owner[b])
        if ra != rb:
            parent[ra] = rb

    # Each vertex contributes its free slots; each handshake is one edge.
    edges: Dict[int, int] = {}
    for vertex, part in enumerate(pi):
        edges[find(vertex)] = edges.get(find(vertex), 0) + part
    for vertex, part in enumerate(sigma):
        root = find(offset + vertex)
        edges[root] = edges.get(root, 0) + part
    for w, _ in pairs:
        root = find(white_owner[w])
        edges[root] -= 1
    return Partition.from_parts(edges.values())


def handshake_outcomes(pi: Partition, sigma: Partition, mu: Partition) -> Iterator[HandshakeOutcome]:
    """Outcomes whose components have edge counts exactly μ."""
    shakes = pi.size + sigma.size - mu.size
    if shakes < 0:
        return
    for pairs in _partial_injections(pi.size, sigma.size, shakes):
        components = _component_edges(pi, sigma, pairs)
        if components == mu:
            yield HandshakeOutcome(pi, sigma, pairs, components)


def count_P(pi: Partition, sigma: Partition, mu: Partition) -> int:
    """|P^μ_{π,σ}|, the number of outcomes with component edge counts μ."""
    return sum(1 for _ in handshake_outcomes(pi, sigma, mu))


def _binomial(top: int, bottom: int) -> int:
    if top < 0 or bottom < 0:
        return 0
    return comb(top, bottom)


def c_constant(pi: Partition, sigma: Partition, mu: Partition) -> int:
    """
    C(π,σ;μ), the number of ways to pick which degree-1 vertices of a rooted
    oriented list carry the labels of the unit parts of π and σ, divided by
    z_π z_σ. Every single-edge component needs a labelled end; k counts the
    single-edge components whose white end is labelled:

        C = Σ_{k=0}^{m₁(μ)} C(m₁(μ),k) · C(m₁(π)+|μ|−|π|−m₁(μ), m₁(π)−k)
            · C(m₁(σ)+|μ|−|σ|−m₁(μ)+k, m₁(σ)−m₁(μ)+k),

    binomials with a negative argument being zero.

    Raises:
        PartitionError: unless |π| <= |μ| and |σ| <= |μ|
    """
    if pi.size > mu.size or sigma.size > mu.size:
        raise PartitionError(f"C({pi},{sigma};{mu}) needs |pi|, |sigma| <= |mu|")
    m_pi, m_sigma, m_mu = pi.multiplicity(1), sigma.multiplicity(1), mu.multiplicity(1)
    total = 0
    for k in range(m_mu + 1):
        # white ends of the other m₁(μ)−k single edges are free, so their black ends are labelled
        total += (
            comb(m_mu, k)
            * _binomial(m_pi + mu.size - pi.size - m_mu, m_pi - k)
            * _binomial(m_sigma + mu.size - sigma.size - m_mu + k, m_sigma - m_mu + k)
        )
    return total


@dataclass(frozen=True)
class HandshakeDecomposition:
    """count_P = constant · z_π z_σ / z_μ · oriented lists of any face type."""

    count: int
    constant: int
    z_ratio: Fraction
    oriented_lists: int

    @property
    def product(self) -> Fraction:
        return self.constant * self.z_ratio * self.oriented_lists

    @property
    def holds(self) -> bool:
        return self.product == self.count


def decompose(pi: Partition, sigma: Partition, mu: Partition) -> HandshakeDecomposition:
    """Both sides of the count_P decomposition through oriented μ-lists."""
    oriented = count_oriented_lists_anyface(pi.padded_to(mu.size), sigma.padded_to(mu.size), mu)
    return HandshakeDecomposition(
        count=count_P(pi, sigma, mu),
        constant=c_constant(pi, sigma, mu),
        z_ratio=Fraction(z(pi) * z(sigma), z(mu)),
        oriented_lists=oriented,
    )
