"""
Perfect matchings on {1, 1̂, ..., n, n̂}, the reference matchings ε and δ_λ,
the Λ statistics and the matching classes G.

Points are encoded as integers 0..2n−1: point 2i−2 is the label i and
point 2i−1 is the hatted label î.
"""

import logging
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from jacklab.algebra.partitions import Partition
from jacklab.core.exceptions import MatchingError, PartitionError

logger = logging.getLogger(__name__)

_LABEL = re.compile(r"(\d+)\s*(\^?)")


def point_of_label(label: str) -> int:
    """``"3"`` -> 4, ``"3^"`` -> 5."""
    match = _LABEL.fullmatch(label.strip())
    if not match or int(match.group(1)) < 1:
        raise MatchingError(f"bad point label: {label!r}")
    return 2 * int(match.group(1)) - 2 + (1 if match.group(2) else 0)


def label_of_point(point: int) -> str:
    return f"{point // 2 + 1}{'^' if point % 2 else ''}"


@dataclass(frozen=True, order=True)
class Matching:
    """A fixed-point-free involution on 2n points, stored as the partner array."""

    partner: Tuple[int, ...]

    def __post_init__(self):
        partner = tuple(self.partner)
        size = len(partner)
        if size % 2:
            raise MatchingError("a matching needs an even number of points")
        for point, other in enumerate(partner):
            if not 0 <= other < size or other == point or partner[other] != point:
                raise MatchingError(f"not a perfect matching: {partner}")
        object.__setattr__(self, "partner", partner)

    @classmethod
    def from_pairs(cls, n: int, pairs: Sequence[Tuple[int, int]]) -> "Matching":
        partner = [-1] * (2 * n)
        for a, b in pairs:
            for point in (a, b):
                if not 0 <= point < 2 * n:
                    raise MatchingError(f"label {label_of_point(point)} outside 1..{n} in {pairs}")
            if partner[a] != -1 or partner[b] != -1:
                raise MatchingError(f"point used twice in {pairs}")
            partner[a], partner[b] = b, a
        return cls(tuple(partner))

    @classmethod
    def from_labels(cls, pairs: Sequence[Sequence[str]], n: Optional[int] = None) -> "Matching":
        points = [(point_of_label(str(a)), point_of_label(str(b))) for a, b in pairs]
        if n is None:
            n = len(points)
        return cls.from_pairs(n, points)

    @classmethod
    def parse(cls, text: str) -> "Matching":
        """
        Parse ``[[1,2],[1^,2^]]`` (quotes optional) into a matching.

        Raises:
            MatchingError: on an odd number of labels or a malformed matching
        """
        tokens = [m.group(1) + m.group(2) for m in _LABEL.finditer(text)]
        if not tokens or len(tokens) % 2:
            raise MatchingError(f"cannot parse matching from {text!r}")
        pairs = list(zip(tokens[0::2], tokens[1::2]))
        return cls.from_labels(pairs)

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    def __call__(self, point: int) -> int:
        return self.partner[point]

    def pairs(self) -> List[Tuple[int, int]]:
        return [(a, b) for a, b in enumerate(self.partner) if a < b]

    def to_labels(self) -> List[List[str]]:
        return [[label_of_point(a), label_of_point(b)] for a, b in self.pairs()]

    def is_bipartite(self) -> bool:
        """Every pair joins a plain label with a hatted one."""
        return all((a + b) % 2 == 1 for a, b in self.pairs())

    def __str__(self) -> str:
        return "{" + ",".join("{" + a + "," + b + "}" for a, b in self.to_labels()) + "}"


def _pairings(points: Tuple[int, ...]) -> Iterator[List[Tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for index, other in enumerate(rest):
        for tail in _pairings(rest[:index] + rest[index + 1:]):
            yield [(first, other)] + tail


def enumerate_matchings(n: int) -> Iterator[Matching]:
    """
    Every perfect matching on 2n points exactly once.

    The smallest unpaired point is matched first, to partners in increasing
    order, so the stream order is deterministic.
    """
    if n < 0:
        raise MatchingError(f"negative matching size: {n}")
    for pairs in _pairings(tuple(range(2 * n))):
        yield Matching.from_pairs(n, pairs)


def double_factorial(k: int) -> int:
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def epsilon(n: int) -> Matching:
    """ε = {{1,1̂}, ..., {n,n̂}}."""
    return Matching.from_pairs(n, [(2 * i, 2 * i + 1) for i in range(n)])


def delta_of(lam: Partition) -> Matching:
    """δ_λ: inside each block of labels, i is paired with (i+1)̂ cyclically."""
    pairs = []
    offset = 0
    for part in lam:
        for k in range(part):
            label = offset + k
            successor = offset + (k + 1) % part
            pairs.append((2 * label, 2 * successor + 1))
        offset += part
    return Matching.from_pairs(lam.size, pairs)


def reference_matchings(lam: Partition) -> Tuple[Matching, Matching]:
    """(ε, δ_λ) for λ ⊢ n."""
    return epsilon(lam.size), delta_of(lam)


def _component_halves(matchings: Sequence[Matching]) -> Partition:
    size = 2 * matchings[0].n
    if any(2 * m.n != size for m in matchings):
        raise MatchingError("matchings on different point sets")
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in matchings:
        for a, b in m.pairs():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

    counts = {}
    for point in range(size):
        root = find(point)
        counts[root] = counts.get(root, 0) + 1
    return Partition.from_parts(c // 2 for c in counts.values())


def cycle_type(first: Matching, second: Matching) -> Partition:
    """Λ(δ₁, δ₂): halves of the cycle lengths of δ₁ ∪ δ₂."""
    return _component_halves([first, second])


def component_type(first: Matching, second: Matching, third: Matching) -> Partition:
    """Λ(δ₁, δ₂, δ₃): halves of the component sizes of δ₁ ∪ δ₂ ∪ δ₃."""
    return _component_halves([first, second, third])


def class_G(
    pi: Partition,
    sigma: Partition,
    lam: Partition,
    mu: Optional[Partition] = None,
    bipartite_only: bool = False,
) -> List[Matching]:
    """
    Matchings δ with Λ(δ,ε) = π and Λ(δ,δ_λ) = σ.

    Args:
        pi, sigma, lam: Partitions of the same n
        mu: If given, additionally require Λ(δ,ε,δ_λ) = μ
        bipartite_only: Keep only bipartite matchings

    Returns:
        Matchings in enumeration order
    """
    n = lam.size
    if pi.size != n or sigma.size != n:
        raise PartitionError("incomparable sizes")
    eps, delta_lam = reference_matchings(lam)
    selected = []
    for delta in enumerate_matchings(n):
        if bipartite_only and not delta.is_bipartite():
            continue
        if cycle_type(delta, eps) != pi or cycle_type(delta, delta_lam) != sigma:
            continue
        if mu is not None and component_type(delta, eps, delta_lam) != mu:
            continue
        selected.append(delta)
    logger.debug(f"class G^{lam}_{pi},{sigma} mu={mu} bipartite={bipartite_only}: {len(selected)}")
    return selected


@dataclass(frozen=True)
class ClassCount:
    total: int = 0
    bipartite: int = 0


@lru_cache(maxsize=None)
def class_histogram(lam: Partition) -> Dict[Tuple[Partition, Partition, Partition], ClassCount]:
    """
    Sizes of every class G^{λ;μ}_{π,σ} for one λ, from a single pass over F_n.
    The returned dict is cached and must not be mutated.

    Returns:
        (π, σ, μ) -> counts of all and of bipartite matchings
    """
    eps, delta_lam = reference_matchings(lam)
    totals: Counter = Counter()
    bipartite: Counter = Counter()
    for delta in enumerate_matchings(lam.size):
        key = (
            cycle_type(delta, eps),
            cycle_type(delta, delta_lam),
            component_type(delta, eps, delta_lam),
        )
        totals[key] += 1
        if delta.is_bipartite():
            bipartite[key] += 1
    return {key: ClassCount(count, bipartite[key]) for key, count in totals.items()}
