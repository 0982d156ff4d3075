"""
Integer partitions, their statistics and the orders used by the engine.

Partitions are immutable value objects; every function here is pure, so
results are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, zip_longest
from math import factorial, prod
from typing import Iterable, Iterator, List, Sequence, Tuple

from jacklab.core.exceptions import PartitionError


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise PartitionError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """
        Parse CLI notation such as ``3,1``, ``[3, 1]`` or an empty string.

        Raises:
            PartitionError: if a token is not a positive integer
        """
        stripped = text.strip().strip("[]()").strip()
        if not stripped:
            return cls()
        try:
            values = [int(tok) for tok in stripped.replace(" ", "").split(",") if tok]
        except ValueError as exc:
            raise PartitionError(f"cannot parse partition from {text!r}") from exc
        return cls.from_parts(values)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, part: int) -> int:
        """m_i(λ): how many parts equal ``part``."""
        return self.parts.count(part)

    def without_ones(self) -> "Partition":
        """The partition with every unit part deleted."""
        return Partition(tuple(p for p in self.parts if p > 1))

    def with_ones(self, count: int) -> "Partition":
        """λ ∪ 1^count."""
        return Partition(self.parts + (1,) * count)

    def padded_to(self, n: int) -> "Partition":
        """λ ∪ 1^{n-|λ|}; the caller guarantees n >= |λ|."""
        return self.with_ones(n - self.size)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def to_list(self) -> List[int]:
        return list(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY = Partition()


def _partitions_bounded(n: int, bound: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def all_partitions(n: int) -> Tuple[Partition, ...]:
    """
    Every partition of n exactly once, in reverse-lexicographic order.

    Args:
        n: Non-negative integer

    Returns:
        Tuple of partitions; ``(EMPTY,)`` for n = 0
    """
    if n < 0:
        raise PartitionError(f"cannot partition a negative integer: {n}")
    return tuple(Partition(parts) for parts in _partitions_bounded(n, n))


def z(lam: Partition) -> int:
    """z_λ = ∏_i i^{m_i(λ)} m_i(λ)!"""
    return prod(part ** lam.multiplicity(part) * factorial(lam.multiplicity(part))
                for part in set(lam.parts))


def concat(lam: Partition, mu: Partition) -> Partition:
    """Multiset union of parts, sorted decreasingly."""
    return Partition.from_parts(lam.parts + mu.parts)


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """
    Dominance order on partitions of the same size.

    Raises:
        PartitionError: if the sizes differ
    """
    if lam.size != mu.size:
        raise PartitionError("incomparable sizes")
    sums_lam = accumulate(lam.parts)
    sums_mu = accumulate(mu.parts)
    for a, b in zip_longest(sums_lam, sums_mu, fillvalue=lam.size):
        if a > b:
            return False
    return True


def degree_d(pi: Partition, sigma: Partition, lam: Partition) -> int:
    """d(π,σ;λ) = (|π|−ℓ(π)) + (|σ|−ℓ(σ)) − (|λ|−ℓ(λ))."""
    return (pi.size - pi.length) + (sigma.size - sigma.length) - (lam.size - lam.length)


def _sub_multisets(pieces: Tuple[int, ...], target: int) -> Iterator[Tuple[int, ...]]:
    """Distinct sub-multisets of ``pieces`` (sorted decreasingly) summing to ``target``."""
    if target == 0:
        yield ()
        return
    previous = None
    for index, piece in enumerate(pieces):
        if piece == previous:
            continue
        previous = piece
        if piece > target:
            continue
        for tail in _sub_multisets(pieces[index + 1:], target - piece):
            yield (piece,) + tail


def _remove(pieces: Tuple[int, ...], chosen: Sequence[int]) -> Tuple[int, ...]:
    remaining = list(pieces)
    for piece in chosen:
        remaining.remove(piece)
    return tuple(remaining)


@lru_cache(maxsize=None)
def _can_cover(pieces: Tuple[int, ...], targets: Tuple[int, ...]) -> bool:
    if not targets:
        return not pieces
    target, rest = targets[0], targets[1:]
    for chosen in _sub_multisets(pieces, target):
        if _can_cover(_remove(pieces, chosen), rest):
            return True
    return False


def subpartition_leq(lam: Partition, mu: Partition) -> bool:
    """
    λ ⪯ μ: the parts of λ can be grouped into blocks summing to the parts of μ.

    Returns False when the sizes differ.
    """
    if lam.size != mu.size or lam.length < mu.length:
        return False
    return _can_cover(lam.parts, mu.parts)


def subpartitions_of(mu: Partition) -> Tuple[Partition, ...]:
    """All ν with ν ⪯ μ."""
    return tuple(nu for nu in all_partitions(mu.size) if subpartition_leq(nu, mu))


def ordered_splittings(whole: Partition, sizes: Sequence[int]) -> Iterator[Tuple[Partition, ...]]:
    """
    Ordered lists (ρ¹, ..., ρᵏ) with |ρⁱ| = sizes[i] whose concatenation is ``whole``.

    Lists are distinct as tuples of partitions, not as labelled parts.
    """
    if not sizes:
        if not whole.parts:
            yield ()
        return
    for chosen in _sub_multisets(whole.parts, sizes[0]):
        head = Partition(chosen)
        rest = Partition(_remove(whole.parts, chosen))
        for tail in ordered_splittings(rest, sizes[1:]):
            yield (head,) + tail
