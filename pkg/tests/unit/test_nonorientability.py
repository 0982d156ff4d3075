"""
Unit tests for root-edge deletion, twisting and the η statistic.
"""

import pytest

from jacklab.algebra.partitions import Partition, all_partitions, degree_d
from jacklab.algebra.coeffs import connection_c
from jacklab.algebra.scalars import beta, poly_coefficient, poly_degree
from jacklab.combinatorics.maps import EMPTY_MAP
from jacklab.combinatorics.matchings import Matching, class_G, class_histogram
from jacklab.combinatorics.nonorientability import (
    EdgeClass,
    EtaPolicy,
    classify_root_edge,
    delete_root_edge,
    deletion_trace,
    eta_map,
    face_rooted_list,
    is_unhandled,
    poly_G_eta,
    poly_H_eta,
    rooted_list_census,
    stat_eta,
    twist,
    unhandled_matchings,
)
from jacklab.core.exceptions import MapStructureError, MatchingError

P = Partition.of


@pytest.fixture
def torus_root(torus_matching):
    """The torus glued from a hexagon, rooted at its face root."""
    return face_rooted_list(P(3), torus_matching)[0]


@pytest.mark.unit
class TestPolicy:
    """Test the handle tie-break policy."""

    def test_default_from_settings(self):
        """Test that the default policy is lex-min."""
        assert EtaPolicy.default() == EtaPolicy.LEX_MIN

    def test_values(self):
        """Test the shipped policies."""
        assert {p.value for p in EtaPolicy} == {"lex-min", "lex-max"}


@pytest.mark.unit
class TestRootEdge:
    """Test classification, deletion and twisting of the root edge."""

    def test_torus_root_is_handle(self, torus_root):
        """Test that every edge of the one-face torus is a handle."""
        assert classify_root_edge(torus_root) == EdgeClass.HANDLE
        assert deletion_trace(torus_root)[0] == EdgeClass.HANDLE

    def test_delete_handle(self, torus_root):
        """Test that deleting a handle keeps one connected rooted map with one more face."""
        (rest,) = delete_root_edge(torus_root)
        assert rest.num_edges == 2
        assert len(rest.faces()) == 2
        assert rest.root is not None
        assert rest.is_orientable()

    def test_delete_single_edge(self):
        """Test that a one-edge map deletes to the empty map."""
        (single,) = face_rooted_list(P(1), Matching.parse("[[1,1^]]"))
        assert classify_root_edge(single) == EdgeClass.BRIDGE
        assert all(part.is_empty() for part in delete_root_edge(single))

    def test_delete_needs_edge(self):
        """Test that an edgeless map has no root edge."""
        with pytest.raises(MapStructureError, match="no root edge"):
            delete_root_edge(EMPTY_MAP)

    def test_twist_is_involution(self, torus_root):
        """Test that twisting twice restores the map."""
        assert twist(twist(torus_root)).canonical_code() == torus_root.canonical_code()

    def test_twist_breaks_orientability(self, torus_root):
        """Test that twisting a non-bridge edge of an orientable map makes it non-orientable."""
        twisted = twist(torus_root)
        assert not twisted.is_orientable()
        assert eta_map(twisted) > 0


@pytest.mark.unit
class TestEta:
    """Test η on face-rooted lists."""

    def test_torus(self, torus_matching):
        """Test η = 0 and a deleted handle on the torus."""
        maps = face_rooted_list(P(3), torus_matching)
        assert stat_eta(P(3), torus_matching) == 0
        assert not is_unhandled(maps)

    def test_projective_plane(self):
        """Test the single matching of G^{(2);(2)}_{(2),(2)}."""
        (delta,) = class_G(P(2), P(2), P(2), P(2))
        assert stat_eta(P(2), delta) == 1
        assert unhandled_matchings(P(2), P(2), P(2)) == [delta]

    def test_needs_unicellular_components(self):
        """Test that stat_eta is only defined on G^{λ;λ} classes."""
        with pytest.raises(MatchingError):
            stat_eta(P(1, 1), Matching.parse("[[1,2],[1^,2^]]"))

    @pytest.mark.parametrize("policy", list(EtaPolicy))
    def test_poly_on_transpositions(self, policy):
        """Test Σ β^η = β = c^{(2)}_{(2),(2)}."""
        assert poly_G_eta(P(2), P(2), P(2), policy) == beta

    def test_torus_class_ground_term(self):
        """Test that the constant term counts bipartite matchings."""
        poly = poly_G_eta(P(3), P(3), P(3))
        assert poly_coefficient(poly, 0) == 1
        assert poly_degree(poly) <= degree_d(P(3), P(3), P(3))

    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("policy", list(EtaPolicy))
    def test_extremes_match_c(self, n, policy):
        """Test ground and top coefficients of Σ β^η against c."""
        table = connection_c(n)
        for lam in all_partitions(n):
            for pi, sigma, mu in class_histogram(lam):
                if mu != lam:
                    continue
                d = degree_d(pi, sigma, lam)
                poly = poly_G_eta(pi, sigma, lam, policy)
                count = class_histogram(lam)[(pi, sigma, lam)]
                assert poly_coefficient(poly, 0) == count.bipartite
                assert poly_coefficient(poly, d) == poly_coefficient(table.get(pi, sigma, lam), d)


@pytest.mark.unit
class TestCensus:
    """Test rooted-list censuses."""

    def test_projective_plane(self):
        """Test the census of M^{(2);(2)}_{(2),(2)}."""
        census = rooted_list_census(P(2), P(2), P(2), P(2))
        assert census.rooted == 1
        assert census.orientable == 0
        assert census.unhandled == 1
        assert census.unicellular_unhandled == 1

    def test_lists_polynomial(self):
        """Test Σ β^η over rooted lists of M^{(2);(2)}_{(2),(2)}."""
        assert poly_H_eta(P(2), P(2), P(2), P(2)) == beta
