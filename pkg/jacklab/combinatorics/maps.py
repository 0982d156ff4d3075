"""
Flag-encoded maps on (possibly non-orientable) surfaces.

A map with E edges has 4E flags. Three fixed-point-free involutions act on
them: s0 changes the vertex, s1 changes the edge and s2 changes the face.
Vertices, edges and faces are the orbits of <s1,s2>, <s0,s2> and <s0,s1>.
Each flag also records the colour of its vertex (0 black, 1 white).

Maps are immutable; surgery returns new values.
"""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from jacklab.algebra.partitions import Partition, subpartitions_of, z
from jacklab.combinatorics.matchings import (
    ClassCount,
    Matching,
    class_G,
    class_histogram,
    delta_of,
    epsilon,
)
from jacklab.core.exceptions import (
    CountingIdentityError,
    MapStructureError,
    MatchingError,
    PartitionError,
)

logger = logging.getLogger(__name__)

BLACK = 0
WHITE = 1

CanonicalCode = Tuple[Tuple[int, int, int, int], ...]


@dataclass(frozen=True)
class FlagMap:
    """
    A map given by its flag involutions.

    Attributes:
        s0: Vertex-changing involution
        s1: Edge-changing involution
        s2: Face-changing involution
        color: Vertex colour of every flag
        root: Root flag, or None for an unrooted map
        face_roots: Root flag of each numbered face (empty if faces are unnumbered)
    """

    s0: Tuple[int, ...]
    s1: Tuple[int, ...]
    s2: Tuple[int, ...]
    color: Tuple[int, ...]
    root: Optional[int] = None
    face_roots: Tuple[int, ...] = ()

    def __post_init__(self):
        size = len(self.s0)
        if size % 4 or not len(self.s1) == len(self.s2) == len(self.color) == size:
            raise MapStructureError("flag arrays must share a length divisible by 4")
        for name, inv in (("s0", self.s0), ("s1", self.s1), ("s2", self.s2)):
            for f, g in enumerate(inv):
                if g == f or inv[g] != f:
                    raise MapStructureError(f"{name} is not a fixed-point-free involution")
        for f in range(size):
            g = self.s0[self.s2[f]]
            if g != self.s2[self.s0[f]] or g == f:
                raise MapStructureError("s0 and s2 must commute without fixed points")
        if self.root is not None and not 0 <= self.root < size:
            raise MapStructureError(f"root {self.root} outside the flag set")

    # ------------------------------------------------------------------
    # Orbits and statistics
    # ------------------------------------------------------------------

    @property
    def num_flags(self) -> int:
        return len(self.s0)

    @property
    def num_edges(self) -> int:
        return len(self.s0) // 4

    def is_empty(self) -> bool:
        return not self.s0

    def _orbits(self, *generators: Tuple[int, ...]) -> List[Tuple[int, ...]]:
        seen = [False] * self.num_flags
        orbits = []
        for start in range(self.num_flags):
            if seen[start]:
                continue
            seen[start] = True
            orbit = [start]
            queue = deque([start])
            while queue:
                f = queue.popleft()
                for gen in generators:
                    g = gen[f]
                    if not seen[g]:
                        seen[g] = True
                        orbit.append(g)
                        queue.append(g)
            orbits.append(tuple(sorted(orbit)))
        return orbits

    def vertices(self) -> List[Tuple[int, ...]]:
        return self._orbits(self.s1, self.s2)

    def edges(self) -> List[Tuple[int, ...]]:
        return self._orbits(self.s0, self.s2)

    def faces(self) -> List[Tuple[int, ...]]:
        return self._orbits(self.s0, self.s1)

    def component_flags(self) -> List[Tuple[int, ...]]:
        return self._orbits(self.s0, self.s1, self.s2)

    def edge_flags(self, flag: int) -> Tuple[int, int, int, int]:
        """The four flags of the edge containing ``flag``."""
        return (flag, self.s0[flag], self.s2[flag], self.s0[self.s2[flag]])

    def check_bipartite(self) -> None:
        """
        Raises:
            MapStructureError: unless s0 swaps colours and s1, s2 preserve them
        """
        for f in range(self.num_flags):
            if (
                self.color[self.s0[f]] == self.color[f]
                or self.color[self.s1[f]] != self.color[f]
                or self.color[self.s2[f]] != self.color[f]
            ):
                raise MapStructureError("vertex colouring is not bipartite")

    def profiles(self) -> Tuple[Partition, Partition, Partition, Partition]:
        """
        (face half-degrees, white degrees, black degrees, component edge counts).

        Raises:
            MapStructureError: if the colouring is not bipartite
        """
        self.check_bipartite()
        faces = Partition.from_parts(len(o) // 4 for o in self.faces())
        white, black = [], []
        for orbit in self.vertices():
            (black if self.color[orbit[0]] == BLACK else white).append(len(orbit) // 2)
        components = Partition.from_parts(len(o) // 4 for o in self.component_flags())
        return faces, Partition.from_parts(white), Partition.from_parts(black), components

    def is_orientable(self) -> bool:
        """True iff the flag graph of every component is bipartite."""
        side = [-1] * self.num_flags
        for start in range(self.num_flags):
            if side[start] >= 0:
                continue
            side[start] = 0
            queue = deque([start])
            while queue:
                f = queue.popleft()
                for gen in (self.s0, self.s1, self.s2):
                    g = gen[f]
                    if side[g] < 0:
                        side[g] = 1 - side[f]
                        queue.append(g)
                    elif side[g] == side[f]:
                        return False
        return True

    def euler_characteristic(self) -> int:
        """V − E + F over the whole map."""
        return len(self.vertices()) - self.num_edges + len(self.faces())

    def genus(self) -> int:
        """
        Genus of a connected orientable map, or the number of cross-caps of a
        connected non-orientable one.
        """
        if len(self.component_flags()) > 1:
            raise MapStructureError("genus needs a connected map")
        chi = self.euler_characteristic()
        return (2 - chi) // 2 if self.is_orientable() else 2 - chi

    # ------------------------------------------------------------------
    # Restriction, rooting and canonical form
    # ------------------------------------------------------------------

    def restrict(self, flags: Sequence[int], root: Optional[int] = None) -> "FlagMap":
        """
        The sub-map on an involution-closed flag set, relabelled 0..k−1 in
        increasing order of the old labels.
        """
        ordered = sorted(flags)
        index = {f: i for i, f in enumerate(ordered)}
        try:
            return FlagMap(
                tuple(index[self.s0[f]] for f in ordered),
                tuple(index[self.s1[f]] for f in ordered),
                tuple(index[self.s2[f]] for f in ordered),
                tuple(self.color[f] for f in ordered),
                None if root is None else index[root],
            )
        except KeyError as exc:
            raise MapStructureError("flag set is not closed under the involutions") from exc

    def components(self) -> List["FlagMap"]:
        """Connected components (unrooted), ordered by smallest flag."""
        return [self.restrict(flags) for flags in self.component_flags()]

    def with_root(self, root: Optional[int]) -> "FlagMap":
        return FlagMap(self.s0, self.s1, self.s2, self.color, root, self.face_roots)

    def canonical_code(self) -> CanonicalCode:
        """
        Serialization of the root component, invariant under relabelling.

        Flags are renumbered in breadth-first order from the root, visiting
        s0, s1, s2 images in turn. Two rooted connected maps are isomorphic
        iff their codes agree.
        """
        if self.is_empty():
            return ()
        if self.root is None:
            raise MapStructureError("canonical code needs a rooted map")
        order = [self.root]
        label = {self.root: 0}
        position = 0
        while position < len(order):
            f = order[position]
            position += 1
            for gen in (self.s0, self.s1, self.s2):
                g = gen[f]
                if g not in label:
                    label[g] = len(order)
                    order.append(g)
        return tuple(
            (label[self.s0[f]], label[self.s1[f]], label[self.s2[f]], self.color[f])
            for f in order
        )

    @classmethod
    def from_code(cls, code: CanonicalCode) -> "FlagMap":
        """Rebuild the rooted map (root flag 0) encoded by :meth:`canonical_code`."""
        if not code:
            return EMPTY_MAP
        s0, s1, s2, color = zip(*code)
        return cls(s0, s1, s2, color, 0)


EMPTY_MAP = FlagMap((), (), (), ())

MapList = Tuple[FlagMap, ...]


def glue(lam: Partition, delta: Matching) -> FlagMap:
    """
    Glue one 2λ_s-gon per part of λ along the matching δ.

    Each polygon carries the edge-sides of its block of labels in the cyclic
    order 1̂,1,2̂,2,...; corners between ĵ and j are black (ε pairs) and
    corners between j and (j+1)̂ are white (δ_λ pairs). Edge-sides x and δ(x)
    form one edge, glued black end to black end. Face s is numbered by its
    block and rooted at the black end of edge-side L+1, L = λ₁+…+λ_{s−1}.

    Args:
        lam: Face type, a partition of n
        delta: Matching on the 2n edge-sides

    Returns:
        Map with numbered and rooted faces

    Raises:
        MatchingError: if |λ| != δ.n
    """
    n = lam.size
    if delta.n != n:
        raise MatchingError(f"matching on {delta.n} labels cannot glue faces of size {n}")
    flag_base = {}
    for e, (x, y) in enumerate(delta.pairs()):
        flag_base[x] = 4 * e
        flag_base[y] = 4 * e + 2

    def flag(point: int, end: int) -> int:
        return flag_base[point] + end

    size = 4 * n
    s0 = tuple(f ^ 1 for f in range(size))
    s2 = tuple(f ^ 2 for f in range(size))
    s1 = [0] * size
    white_partner = delta_of(lam)
    for point in range(2 * n):
        s1[flag(point, BLACK)] = flag(point ^ 1, BLACK)
        s1[flag(point, WHITE)] = flag(white_partner(point), WHITE)
    color = tuple(f & 1 for f in range(size))

    face_roots = []
    offset = 0
    for part in lam:
        face_roots.append(flag(2 * offset, BLACK))
        offset += part
    return FlagMap(s0, tuple(s1), s2, color, None, tuple(face_roots))


def read_matching(lam: Partition, M: FlagMap) -> Matching:
    """
    Recover δ from a map with numbered rooted faces, inverting :func:`glue`.

    Face s is walked from its root alternating s0 and s1; consecutive flag
    pairs are its edge-sides, labelled L+1, (L+2)̂, L+2, ... in walking
    order. s2 joins the two sides of an edge.

    Raises:
        MapStructureError: if the faces do not match λ
    """
    if len(M.face_roots) != lam.length:
        raise MapStructureError(f"{len(M.face_roots)} numbered faces for {lam}")
    eps, white_partner = epsilon(lam.size), delta_of(lam)
    point_of_flag: Dict[int, int] = {}
    offset = 0
    for root, part in zip(M.face_roots, lam):
        flag, point = root, 2 * offset
        for _ in range(2 * part):
            point_of_flag[flag] = point
            point_of_flag[M.s0[flag]] = point
            flag = M.s1[M.s0[flag]]
            point = white_partner(point) if point % 2 == 0 else eps(point)
        if flag != root:
            raise MapStructureError(f"face {root} is not a {2 * part}-gon")
        offset += part
    if len(point_of_flag) != M.num_flags:
        raise MapStructureError("faces do not cover the map")
    pairs = {
        tuple(sorted((point_of_flag[f], point_of_flag[M.s2[f]]))) for f in range(M.num_flags)
    }
    return Matching.from_pairs(lam.size, sorted(pairs))


def component_labellings(M: FlagMap, mu: Partition) -> Iterator[MapList]:
    """
    Every way to number the components of M so that component i has μ_i
    edges and to root each at a black flag; 2^{ℓ(μ)} z_μ lists in total.

    Raises:
        MapStructureError: if the component edge counts differ from μ
    """
    components = M.components()
    sizes = Partition.from_parts(c.num_edges for c in components)
    if sizes != mu:
        raise MapStructureError(f"component profile {sizes} does not match {mu}")

    by_size: Dict[int, List[FlagMap]] = {}
    for component in components:
        by_size.setdefault(component.num_edges, []).append(component)
    positions: Dict[int, List[int]] = {}
    for i, part in enumerate(mu):
        positions.setdefault(part, []).append(i)

    numberings = [
        [(positions[size], order) for order in permutations(group)]
        for size, group in sorted(by_size.items())
    ]
    for choice in product(*numberings):
        slots: List[Optional[FlagMap]] = [None] * mu.length
        for places, order in choice:
            for place, component in zip(places, order):
                slots[place] = component
        rootings = [
            [f for f in range(c.num_flags) if c.color[f] == BLACK] for c in slots
        ]
        for roots in product(*rootings):
            yield tuple(c.with_root(r) for c, r in zip(slots, roots))


def list_code(maps: MapList) -> Tuple[CanonicalCode, ...]:
    return tuple(m.canonical_code() for m in maps)


def _same_size(*partitions: Partition) -> None:
    if len({p.size for p in partitions}) != 1:
        raise PartitionError("incomparable sizes")


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise CountingIdentityError(f"counting identity violated: {what} = {value}")
    return int(value)


def count_rooted_lists(pi: Partition, sigma: Partition, lam: Partition, mu: Partition) -> int:
    """
    |M^{λ;μ}_{π,σ}| = |G^{λ;μ}_{π,σ}| · z_μ 2^{ℓ(μ)} / (z_λ 2^{ℓ(λ)}).

    Raises:
        CountingIdentityError: if the value is not a nonnegative integer
    """
    _same_size(pi, sigma, lam, mu)
    matchings = class_histogram(lam).get((pi, sigma, mu), ClassCount()).total
    value = Fraction(matchings * z(mu) * 2 ** mu.length, z(lam) * 2 ** lam.length)
    return _integral(value, f"|M^{lam};{mu}_{pi},{sigma}|")


def count_oriented_lists_anyface(pi: Partition, sigma: Partition, mu: Partition) -> int:
    """
    |M̃^{•;μ}_{π,σ}| = Σ_{ν⪯μ} (z_μ/z_ν) · #{bipartite δ ∈ G^{ν;μ}_{π,σ}}.

    Raises:
        CountingIdentityError: if the value is not a nonnegative integer
    """
    _same_size(pi, sigma, mu)
    total = Fraction(0)
    for nu in subpartitions_of(mu):
        bipartite = class_histogram(nu).get((pi, sigma, mu), ClassCount()).bipartite
        total += Fraction(z(mu) * bipartite, z(nu))
    return _integral(total, f"|M~^{mu}_{pi},{sigma}|")


def distinct_rooted_lists(
    pi: Partition, sigma: Partition, lam: Partition, mu: Partition
) -> Set[Tuple[CanonicalCode, ...]]:
    """Rooted μ-lists reached from G^{λ;μ}_{π,σ}, deduplicated by canonical code."""
    codes = set()
    for delta in class_G(pi, sigma, lam, mu):
        for maps in component_labellings(glue(lam, delta), mu):
            codes.add(list_code(maps))
    return codes


def distinct_oriented_lists(
    pi: Partition, sigma: Partition, mu: Partition
) -> Set[Tuple[CanonicalCode, ...]]:
    """Rooted orientable μ-lists of any face type, deduplicated by canonical code."""
    codes = set()
    for nu in subpartitions_of(mu):
        for delta in class_G(pi, sigma, nu, mu, bipartite_only=True):
            for maps in component_labellings(glue(nu, delta), mu):
                codes.add(list_code(maps))
    return codes
