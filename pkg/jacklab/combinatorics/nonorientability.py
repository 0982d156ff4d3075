"""
Root-edge classification, root deletion and the measure of
non-orientability η on rooted maps and rooted lists of maps.

Maps handed to this module are connected and rooted unless stated
otherwise; roots may sit at vertices of either colour.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from jacklab.algebra.partitions import Partition, z
from jacklab.algebra.scalars import BETA_RING, BetaPolynomial, beta, qq
from jacklab.combinatorics.maps import (
    EMPTY_MAP,
    CanonicalCode,
    FlagMap,
    MapList,
    component_labellings,
    glue,
)
from jacklab.combinatorics.matchings import (
    Matching,
    class_G,
    component_type,
    reference_matchings,
)
from jacklab.core.config import settings
from jacklab.core.exceptions import CountingIdentityError, MapStructureError, MatchingError

logger = logging.getLogger(__name__)


class EdgeClass(str, Enum):
    BRIDGE = "bridge"
    BORDER = "border"
    TWISTED = "twisted"
    HANDLE = "handle"


class EtaPolicy(str, Enum):
    """
    Tie-break for handles when M and its twist are both non-orientable:
    ``lex-min`` hands η(M∖e) to the map with the smaller canonical code,
    ``lex-max`` to the larger one.
    """

    LEX_MIN = "lex-min"
    LEX_MAX = "lex-max"

    @classmethod
    def default(cls) -> "EtaPolicy":
        return cls(settings.JACKLAB_ETA_POLICY)


@dataclass(frozen=True)
class _Deletion:
    edge_class: EdgeClass
    parts: Tuple[FlagMap, ...]


def _survivor_root(M: FlagMap, removed: frozenset) -> Optional[int]:
    # Walk around the root vertex past the deleted flags.
    r = M.root
    y = M.s1[M.s2[r]]
    while y in removed:
        if y == r:
            return None
        y = M.s1[M.s2[y]]
    return y


def _delete(M: FlagMap) -> _Deletion:
    if M.is_empty():
        raise MapStructureError("no root edge")
    if M.root is None:
        raise MapStructureError("root deletion needs a rooted map")
    r = M.root
    removed = frozenset(M.edge_flags(r))
    kept = [f for f in range(M.num_flags) if f not in removed]

    s1 = list(M.s1)
    for f in kept:
        x = M.s1[f]
        while x in removed:
            x = M.s1[M.s2[x]]
        s1[f] = x

    survivor_root = _survivor_root(M, removed)
    far_root = M.s1[M.s0[r]]
    if far_root in removed:
        far_root = None

    index = {f: i for i, f in enumerate(kept)}
    remaining = FlagMap(
        tuple(index[M.s0[f]] for f in kept),
        tuple(index[s1[f]] for f in kept),
        tuple(index[M.s2[f]] for f in kept),
        tuple(M.color[f] for f in kept),
    )
    pieces = remaining.component_flags()

    def piece_of(flag: Optional[int]) -> Optional[Tuple[int, ...]]:
        if flag is None:
            return None
        return next(p for p in pieces if index[flag] in p)

    root_vertex = next(v for v in M.vertices() if r in v)
    is_loop = M.s0[r] in root_vertex
    survivor, detached = piece_of(survivor_root), piece_of(far_root)

    if not is_loop and (survivor is None or detached is None or survivor != detached):
        parts = []
        for piece, root in ((survivor, survivor_root), (detached, far_root)):
            parts.append(EMPTY_MAP if piece is None else remaining.restrict(piece, index[root]))
        if all(p.is_empty() for p in parts):
            parts = [EMPTY_MAP]
        return _Deletion(EdgeClass.BRIDGE, tuple(parts))

    after = EMPTY_MAP if survivor is None else remaining.restrict(survivor, index[survivor_root])
    # An isolated vertex still bounds one face.
    faces_after = len(after.faces()) or 1
    faces_before = len(M.faces())
    if faces_after == faces_before - 1:
        edge_class = EdgeClass.BORDER
    elif faces_after == faces_before:
        edge_class = EdgeClass.TWISTED
    elif faces_after == faces_before + 1:
        edge_class = EdgeClass.HANDLE
    else:
        raise MapStructureError(f"face count jumped from {faces_before} to {faces_after}")
    return _Deletion(edge_class, (after,))


def classify_root_edge(M: FlagMap) -> EdgeClass:
    """
    Bridge if deleting the root edge disconnects M (leaves count as
    bridges); otherwise border, twisted or handle as M∖e has f−1, f or
    f+1 faces.

    Raises:
        MapStructureError: on an edgeless map ("no root edge")
    """
    return _delete(M).edge_class


def delete_root_edge(M: FlagMap) -> Tuple[FlagMap, ...]:
    """
    Remove the root edge and re-root what is left.

    The component containing the root corner is rooted at the corner that
    absorbs it; for a bridge the other component is rooted at the first
    corner of the root face after the root corner. Components reduced to a
    single vertex come back as empty maps.

    Returns:
        ``(M∖e,)`` or ``(surviving part, detached part)`` for a bridge
    """
    return _delete(M).parts


def twist(M: FlagMap) -> FlagMap:
    """Exchange the two gluings of the root edge: s0 becomes s0∘s2 on its flags."""
    if M.is_empty() or M.root is None:
        raise MapStructureError("no root edge")
    s0 = list(M.s0)
    for f in M.edge_flags(M.root):
        s0[f] = M.s0[M.s2[f]]
    return FlagMap(tuple(s0), M.s1, M.s2, M.color, M.root)


@lru_cache(maxsize=None)
def _eta_of_code(code: CanonicalCode, policy: EtaPolicy) -> int:
    if not code:
        return 0
    M = FlagMap.from_code(code)
    deletion = _delete(M)
    below = sum(_eta_of_code(p.canonical_code(), policy) for p in deletion.parts)
    if deletion.edge_class in (EdgeClass.BRIDGE, EdgeClass.BORDER):
        return below
    if deletion.edge_class == EdgeClass.TWISTED:
        return below + 1

    twisted = twist(M)
    orientable, twisted_orientable = M.is_orientable(), twisted.is_orientable()
    if orientable != twisted_orientable:
        return below if orientable else below + 1
    twisted_code = twisted.canonical_code()
    if policy == EtaPolicy.LEX_MIN:
        keeps = code <= twisted_code
    else:
        keeps = code >= twisted_code
    return below if keeps else below + 1


def eta_map(M: FlagMap, policy: Optional[EtaPolicy] = None) -> int:
    """η of a single rooted connected map."""
    return _eta_of_code(M.canonical_code(), EtaPolicy(policy or EtaPolicy.default()))


def eta(maps: MapList, policy: Optional[EtaPolicy] = None) -> int:
    """η of a rooted list: the sum over its components."""
    return sum(eta_map(M, policy) for M in maps)


def deletion_trace(M: FlagMap) -> List[EdgeClass]:
    """Edge classes met by the root-deletion cascade, surviving parts first."""
    trace: List[EdgeClass] = []
    stack = [M]
    while stack:
        current = stack.pop()
        if current.is_empty():
            continue
        deletion = _delete(current)
        trace.append(deletion.edge_class)
        stack.extend(reversed(deletion.parts))
    return trace


@lru_cache(maxsize=None)
def _unhandled_code(code: CanonicalCode) -> bool:
    if not code:
        return True
    deletion = _delete(FlagMap.from_code(code))
    if deletion.edge_class == EdgeClass.HANDLE:
        return False
    return all(_unhandled_code(p.canonical_code()) for p in deletion.parts)


def is_unhandled(maps: MapList) -> bool:
    """True iff no handle is deleted anywhere in the root-deletion cascade."""
    return all(_unhandled_code(M.canonical_code()) for M in maps)


def face_rooted_list(lam: Partition, delta: Matching) -> MapList:
    """
    The rooted list of glue(λ, δ) for δ in a G^{λ;λ} class: component i is
    the one carrying face i, rooted at that face's root.

    Raises:
        MatchingError: if some component has more than one face
    """
    eps, delta_lam = reference_matchings(lam)
    if component_type(delta, eps, delta_lam) != lam:
        raise MatchingError(f"{delta} does not have unicellular components for {lam}")
    M = glue(lam, delta)
    pieces = M.component_flags()
    maps = []
    for root in M.face_roots:
        piece = next(p for p in pieces if root in p)
        maps.append(M.restrict(piece, root))
    return tuple(maps)


def stat_eta(lam: Partition, delta: Matching, policy: Optional[EtaPolicy] = None) -> int:
    """η of the face-rooted list of glue(λ, δ), δ ∈ G^{λ;λ}."""
    return eta(face_rooted_list(lam, delta), policy)


def poly_G_eta(
    pi: Partition, sigma: Partition, lam: Partition, policy: Optional[EtaPolicy] = None
) -> BetaPolynomial:
    """Σ_{δ ∈ G^{λ;λ}_{π,σ}} β^{stat_η(δ)}."""
    total = BETA_RING.zero
    for delta in class_G(pi, sigma, lam, lam):
        total += beta ** stat_eta(lam, delta, policy)
    return total


def poly_H_eta(
    pi: Partition,
    sigma: Partition,
    lam: Partition,
    mu: Partition,
    policy: Optional[EtaPolicy] = None,
) -> BetaPolynomial:
    """
    Σ_{δ ∈ G^{λ;μ}_{π,σ}} Σ_{labellings} β^{η} / (2^{ℓ(λ)} z_λ).

    Every rooted μ-list is reached by exactly 2^{ℓ(λ)} z_λ pairs, so this
    counts rooted lists weighted by β^η.
    """
    total = BETA_RING.zero
    for delta in class_G(pi, sigma, lam, mu):
        for maps in component_labellings(glue(lam, delta), mu):
            total += beta ** eta(maps, policy)
    return total * qq(Fraction(1, 2 ** lam.length * z(lam)))


def unhandled_matchings(pi: Partition, sigma: Partition, lam: Partition) -> List[Matching]:
    """δ ∈ G^{λ;λ}_{π,σ} whose face-rooted list is unhandled."""
    return [
        delta
        for delta in class_G(pi, sigma, lam, lam)
        if is_unhandled(face_rooted_list(lam, delta))
    ]


@dataclass(frozen=True)
class ListCensus:
    """Rooted μ-lists of M^{λ;μ}_{π,σ} counted by property."""

    rooted: int
    orientable: int
    unhandled: int
    unicellular_unhandled: int


def rooted_list_census(
    pi: Partition, sigma: Partition, lam: Partition, mu: Partition
) -> ListCensus:
    """
    Count rooted lists through every (δ, labelling) pair; each list is
    reached 2^{ℓ(λ)} z_λ times.

    Raises:
        CountingIdentityError: if a count is not integral
    """
    weight = 2 ** lam.length * z(lam)
    rooted = orientable = unhandled = unicellular = 0
    for delta in class_G(pi, sigma, lam, mu):
        M = glue(lam, delta)
        is_orientable = M.is_orientable()
        single_faces = len(M.faces()) == len(M.component_flags())
        for maps in component_labellings(M, mu):
            rooted += 1
            orientable += is_orientable
            if is_unhandled(maps):
                unhandled += 1
                unicellular += single_faces

    def exact(count: int, what: str) -> int:
        if count % weight:
            raise CountingIdentityError(
                f"counting identity violated: {what} lists of M^{lam};{mu}_{pi},{sigma} = {count}/{weight}"
            )
        return count // weight

    return ListCensus(
        exact(rooted, "rooted"),
        exact(orientable, "orientable"),
        exact(unhandled, "unhandled"),
        exact(unicellular, "unicellular unhandled"),
    )
