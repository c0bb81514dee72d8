import itertools
import random
from fractions import Fraction

import pytest

import oracles
from helpers import load, path_graph, cycle_graph
from tmlab import (
    Biclique,
    CapExceededError,
    Graph,
    LinearInequality,
    affine_rank,
    all_ones_biclique_inequality,
    balanced_biclique_inequalities,
    basic_inequalities,
    check_complete_description,
    enumerate_total_matchings,
    face_dimension,
    hull,
    incidence,
    is_facet,
    lifted_biclique_inequalities,
    matrix_rank,
    polytope_dimension,
    vertices,
)


def family_union(g, rs=(2,), lifted_sides=None):
    qs = list(basic_inequalities(g))
    for r in rs:
        qs += balanced_biclique_inequalities(g, r)
    if lifted_sides is not None:
        b = Biclique.in_graph(g, *lifted_sides)
        qs += lifted_biclique_inequalities(g, b)
    return qs


class TestRank:
    def test_matrix_rank(self):
        assert matrix_rank([]) == 0
        assert matrix_rank([(0, 0)]) == 0
        assert matrix_rank([(1, 2), (2, 4)]) == 1
        assert matrix_rank([(1, 0), (0, 1), (1, 1)]) == 2
        assert matrix_rank([(Fraction(1, 2), 0), (0, 3)]) == 2

    def test_affine_rank(self):
        assert affine_rank([(5, 7)]) == 1
        assert affine_rank([(0, 0), (1, 1), (1, 1)]) == 2  # duplicates ignored
        assert affine_rank([(0, 0), (1, 0), (0, 1)]) == 3
        assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 2  # collinear

    def test_affine_rank_errors(self):
        with pytest.raises(ValueError):
            affine_rank([])
        with pytest.raises(ValueError):
            affine_rank([(0,), (0, 1)])


class TestHull:
    def test_simplex(self):
        rep = hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert [q.format_line() for q in rep.hrep] == [
            "-1 0 0 <= 0",
            "0 -1 0 <= 0",
            "0 0 -1 <= 0",
            "1 1 1 <= 1",
        ]
        assert rep.vrep == ((0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0))
        assert rep.dim_ambient == 3

    def test_cube(self):
        pts = list(itertools.product((0, 1), repeat=3))
        rep = hull(pts)
        assert len(rep.hrep) == 6
        assert len(rep.vrep) == 8

    def test_interior_points_dropped(self):
        pts = list(itertools.product((0, 2), repeat=2)) + [(1, 1), (0, 1)]
        rep = hull(pts)
        assert rep.vrep == ((0, 0), (0, 2), (2, 0), (2, 2))
        assert len(rep.hrep) == 4

    def test_fractional_points(self):
        rep = hull([(0, 0), (1, 0), (Fraction(1, 2), Fraction(1, 2))])
        assert len(rep.hrep) == 3
        assert (Fraction(1, 2), Fraction(1, 2)) in rep.vrep

    def test_single_point(self):
        rep = hull([(3, 4), (3, 4)])
        assert rep.vrep == ((3, 4),) and rep.hrep == ()

    def test_lower_dimensional_rejected(self):
        with pytest.raises(ValueError, match="affinely span"):
            hull([(0, 0), (1, 1)])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            hull([])

    def test_facets_are_valid_and_supporting(self):
        rng = random.Random(53)
        pts = [
            tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3))
            for _ in range(12)
        ]
        rep = hull(pts)
        for q in rep.hrep:
            assert all(q.satisfied_by(p) for p in pts)
            tight = [v for v in rep.vrep if q.tight_at(v)]
            assert affine_rank(tight) == 3  # a facet in dimension 3


class TestVertices:
    def test_simplex_round_trip(self):
        ineqs = [
            LinearInequality((-1, 0, 0), 0),
            LinearInequality((0, -1, 0), 0),
            LinearInequality((0, 0, -1), 0),
            LinearInequality((1, 1, 1), 1),
        ]
        rep = vertices(ineqs)
        assert rep.vrep == ((0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_redundant_inequalities_harmless(self):
        ineqs = [
            LinearInequality((-1, 0), 0),
            LinearInequality((0, -1), 0),
            LinearInequality((1, 1), 2),
            LinearInequality((1, 0), 5),  # redundant
            LinearInequality((2, 2), 4),  # duplicate after normalization
        ]
        rep = vertices(ineqs)
        assert rep.vrep == ((0, 0), (0, 2), (2, 0))
        assert len(rep.hrep) == 4  # the duplicate collapsed

    def test_fractional_vertex(self):
        ineqs = [
            LinearInequality((-1, 0), 0),
            LinearInequality((0, -1), 0),
            LinearInequality((2, 1), 2),
            LinearInequality((1, 2), 2),
        ]
        rep = vertices(ineqs)
        assert (Fraction(2, 3), Fraction(2, 3)) in rep.vrep

    def test_unbounded_by_missing_bound(self):
        ineqs = [LinearInequality((-1, 0), 0), LinearInequality((0, -1), 0)]
        with pytest.raises(ValueError, match="unbounded"):
            vertices(ineqs)

    def test_unbounded_by_rank_deficiency(self):
        with pytest.raises(ValueError, match="unbounded"):
            vertices([LinearInequality((1, 1), 1)])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            vertices([])

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="mismatched"):
            vertices([LinearInequality((1,), 1), LinearInequality((1, 1), 1)])


class TestRoundTrips:
    @pytest.mark.parametrize("name", ["p2", "p3", "c4"])
    def test_hull_then_vertices(self, name):
        g = load(name)
        pts = [incidence(g, t) for t in enumerate_total_matchings(g)]
        rep = hull(pts)
        back = vertices(rep.hrep)
        assert back.vrep == rep.vrep
        again = hull(back.vrep)
        assert again.hrep == rep.hrep

    def test_incidence_vectors_are_all_vertices(self):
        g = load("c4")
        pts = [incidence(g, t) for t in enumerate_total_matchings(g)]
        rep = hull(pts)
        assert set(rep.vrep) == set(pts)

    def test_vertex_tight_normals_have_full_rank(self):
        g = load("p4")
        pts = [incidence(g, t) for t in enumerate_total_matchings(g)]
        rep = hull(pts)
        d = rep.dim_ambient
        for v in rep.vrep:
            tight = [q.coeffs for q in rep.hrep if q.tight_at(v)]
            assert matrix_rank(tight) == d


class TestDimCap:
    def test_hull_cap(self):
        pts = list(itertools.product((0, 1), repeat=13))[:50]
        with pytest.raises(CapExceededError, match="13"):
            hull(pts)

    def test_vertices_cap(self):
        ineqs = [LinearInequality((1,) * 13, 1)]
        with pytest.raises(CapExceededError):
            vertices(ineqs)

    def test_raised_cap_warns(self):
        g = load("tree7")
        assert g.num_elements == 13
        pts = [incidence(g, t) for t in enumerate_total_matchings(g)]
        with pytest.warns(RuntimeWarning, match="above the default cap"):
            rep = hull(pts, dim_cap=13)
        assert rep.dim_ambient == 13


class TestPolytopeDimension:
    @pytest.mark.parametrize(
        "name", ["p2", "p3", "p4", "star3", "c4", "c5", "k22", "k23", "c4_pendant"]
    )
    def test_always_full_dimensional(self, name):
        g = load(name)
        assert polytope_dimension(g) == g.num_elements

    def test_empty_graph(self):
        assert polytope_dimension(Graph(0)) == 0

    def test_random_graphs(self):
        rng = random.Random(59)
        for _ in range(15):
            n = rng.randint(1, 6)
            g = Graph(n, oracles.random_edges(rng, n, 0.5))
            assert polytope_dimension(g) == g.num_elements


class TestFaceDimension:
    def test_p2_star_is_not_facet(self):
        g = path_graph(2)
        star = basic_inequalities(g)[0]
        assert face_dimension(g, star) == 1
        assert polytope_dimension(g) == 3
        assert not is_facet(g, star)

    def test_p2_edge_is_facet(self):
        g = path_graph(2)
        edge = basic_inequalities(g)[2]
        assert edge.label == "Basic-Edge e(0,1)"
        assert face_dimension(g, edge) == 2
        assert is_facet(g, edge)

    def test_empty_face(self):
        g = path_graph(2)
        loose = LinearInequality((1, 0, 0), 2)  # valid, never tight
        assert face_dimension(g, loose) == -1

    def test_invalid_inequality_raises(self):
        g = path_graph(2)
        with pytest.raises(ValueError, match="not valid"):
            face_dimension(g, LinearInequality((1, 1, 1), 0))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            face_dimension(path_graph(2), LinearInequality((1, 1), 1))

    def test_k23_lifted_are_facets(self):
        g = load("k23")
        b = Biclique.in_graph(g, (0, 1), (2, 3, 4))
        assert polytope_dimension(g) == 11
        for q in lifted_biclique_inequalities(g, b):
            assert face_dimension(g, q) == 10
            assert is_facet(g, q)

    def test_k23_all_ones_is_dominated(self):
        g = load("k23")
        b = Biclique.in_graph(g, (0, 1), (2, 3, 4))
        q = all_ones_biclique_inequality(g, b)
        assert face_dimension(g, q) == 6
        assert not is_facet(g, q)

    def test_k23_intermediate_split_coefficients(self):
        """A convex combination of the two lifted members stays valid but
        supports only a lower-dimensional face."""
        g = load("k23")
        q = LinearInequality(
            (Fraction(3, 2), Fraction(1, 2)) + (1,) * 9, 3
        )
        assert q.format_line() == "3 1 2 2 2 2 2 2 2 2 2 <= 6"
        assert face_dimension(g, q) == 6
        assert not is_facet(g, q)

    def test_host_graph_facets(self):
        cp = load("c4_pendant")
        q = balanced_biclique_inequalities(cp, 2)[0]
        assert q.label == "BalancedBiclique 0,2|1,3"
        assert is_facet(cp, q)
        kp = load("k23_pendant")
        b = Biclique.in_graph(kp, (0, 1), (2, 3, 4))
        for q in lifted_biclique_inequalities(kp, b):
            assert is_facet(kp, q)


class TestCompleteness:
    def test_p2_stars_redundant(self):
        g = path_graph(2)
        rep = check_complete_description(g, basic_inequalities(g))
        assert rep.complete and rep.missing_facets == ()
        assert [q.label for q in rep.redundant] == [
            "Basic-Vertex v1",
            "Basic-Vertex v0",
        ]
        assert rep.dimension == 3

    def test_p3_complete(self):
        g = path_graph(3)
        rep = check_complete_description(g, basic_inequalities(g))
        assert rep.complete
        assert [q.label for q in rep.redundant] == [
            "Basic-Vertex v2",
            "Basic-Vertex v0",
        ]

    def test_star3_leaf_stars_redundant(self):
        g = load("star3")
        rep = check_complete_description(g, basic_inequalities(g))
        assert rep.complete
        assert sorted(q.label for q in rep.redundant) == [
            "Basic-Vertex v1",
            "Basic-Vertex v2",
            "Basic-Vertex v3",
        ]

    def test_c4_needs_the_balanced_member(self):
        g = cycle_graph(4)
        rep = check_complete_description(g, basic_inequalities(g))
        assert not rep.complete
        assert [q.format_line() for q in rep.missing_facets] == [
            "1 1 1 1 1 1 1 1 <= 2"
        ]
        full = check_complete_description(g, family_union(g))
        assert full.complete and full.redundant == () and full.dimension == 8

    def test_c5_stays_incomplete(self):
        g = cycle_graph(5)
        rep = check_complete_description(g, family_union(g))
        assert not rep.complete
        assert [q.format_line() for q in rep.missing_facets] == [
            "0 0 0 0 0 1 1 1 1 1 <= 2",
            "1 1 1 1 1 0 0 0 0 0 <= 2",
            "1 1 1 1 1 1 1 1 1 1 <= 3",
        ]
        assert rep.dimension == 10

    def test_k23_complete_with_all_three_families(self):
        g = load("k23")
        qs = family_union(g, rs=(2,), lifted_sides=((0, 1), (2, 3, 4)))
        assert len(qs) == 27
        rep = check_complete_description(g, qs)
        assert rep.complete and rep.redundant == () and rep.dimension == 11

    def test_k23_basic_only_misses_balanced_and_lifted(self):
        g = load("k23")
        rep = check_complete_description(g, basic_inequalities(g))
        assert not rep.complete
        missing = {q.format_line() for q in rep.missing_facets}
        assert missing == {
            "1 1 0 1 1 0 1 1 0 1 1 <= 2",
            "1 1 1 0 1 1 0 1 1 0 1 <= 2",
            "1 1 1 1 0 1 1 0 1 1 0 <= 2",
            "1 2 1 1 1 1 1 1 1 1 1 <= 3",
            "2 1 1 1 1 1 1 1 1 1 1 <= 3",
        }

    def test_c4_pendant_complete(self):
        g = load("c4_pendant")
        qs = family_union(g)
        rep = check_complete_description(g, qs)
        assert rep.complete and len(rep.redundant) == 1

    def test_invalid_proposal_raises(self):
        g = path_graph(2)
        with pytest.raises(ValueError, match="not valid"):
            check_complete_description(g, [LinearInequality((1, 1, 1), 0)])

    def test_duplicate_proposals_collapse(self):
        g = path_graph(2)
        qs = basic_inequalities(g)
        rep = check_complete_description(g, qs + qs)
        assert rep.complete
        assert len(rep.redundant) == 2
