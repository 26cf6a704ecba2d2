import numpy as np
import pytest

from hyperfilt.filtration import (
    DEFAULT_GRID,
    FiltrationCurve,
    IncidenceMatrix,
    adjacency_at,
    degree,
    filtration_curve,
    hyperedges_at,
    make_grid,
    membership_at,
)
from hyperfilt.metrics import DistanceMatrix, MetricSpec, normalize, pairwise_matrix


def random_distance_matrix(rng, n, coincident=False):
    """Random symmetric protometric matrix (no triangle inequality implied)."""
    a = rng.uniform(0.02, 1.5, size=(n, n))
    d = (a + a.T) / 2.0
    np.fill_diagonal(d, 0.0)
    if coincident and n >= 2:
        d[0, 1] = d[1, 0] = 0.0
    return DistanceMatrix(d)


def oracle_edge_count(entries, r):
    """Quadratic all-pairs row comparison, the brute-force dedup count."""
    n = entries.shape[0]
    rows = entries < r
    np.fill_diagonal(rows, True)
    count = 0
    for i in range(n):
        duplicate = False
        for j in range(i):
            if np.array_equal(rows[i], rows[j]):
                duplicate = True
                break
        if not duplicate:
            count += 1
    return count


def collinear_matrix():
    """Three collinear points at 0, 1, 2: normalized distances 0.5, 0.5, 1."""
    pts = np.array([[0.0], [1.0], [2.0]])
    return normalize(pairwise_matrix(pts, MetricSpec("euclidean")))


class TestMakeGrid:
    def test_default_grid(self):
        assert DEFAULT_GRID.size == 100
        assert DEFAULT_GRID[0] == 0.01
        assert DEFAULT_GRID[-1] == 1.0
        assert (np.diff(DEFAULT_GRID) > 0).all()

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            make_grid(0.0, 0.01, 1.0)
        with pytest.raises(ValueError):
            make_grid(0.5, 0.01, 0.4)


class TestHyperedgesAt:
    def test_collinear_intermediate_radius(self):
        inc = hyperedges_at(collinear_matrix(), 0.6)
        expected = {(True, True, False), (True, True, True), (False, True, True)}
        assert degree(inc) == 3
        assert {tuple(row) for row in inc.memberships} == expected

    def test_collinear_small_radius_gives_singletons(self):
        inc = hyperedges_at(collinear_matrix(), 0.4)
        assert degree(inc) == 3
        assert np.array_equal(inc.memberships, np.eye(3, dtype=bool))

    def test_collinear_large_radius_gives_full_edge(self):
        inc = hyperedges_at(collinear_matrix(), 1.01)
        assert degree(inc) == 1
        assert inc.memberships.all()

    def test_strict_inequality_at_boundary(self):
        # a pair exactly at distance r stays outside the ball
        inc = hyperedges_at(collinear_matrix(), 1.0)
        assert degree(inc) == 3

    def test_rejects_nonpositive_radius(self):
        with pytest.raises(ValueError):
            hyperedges_at(collinear_matrix(), 0.0)
        with pytest.raises(ValueError):
            membership_at(collinear_matrix(), -0.5)

    def test_center_always_member(self):
        rng = np.random.default_rng(21)
        dm = random_distance_matrix(rng, 17)
        for r in (0.01, 0.3, 2.0):
            rows = membership_at(dm, r)
            assert np.diagonal(rows).all()

    def test_matches_quadratic_oracle(self):
        rng = np.random.default_rng(22)
        for _ in range(50):
            n = int(rng.integers(2, 24))
            dm = random_distance_matrix(rng, n)
            r = float(rng.uniform(0.01, 1.6))
            assert degree(hyperedges_at(dm, r)) == oracle_edge_count(dm.entries, r)


class TestDegree:
    def test_six_vertices_four_hyperedges(self):
        memberships = np.array([
            [1, 1, 0, 0, 0, 0],
            [0, 1, 1, 1, 0, 0],
            [0, 0, 0, 1, 1, 0],
            [0, 0, 0, 0, 1, 1],
        ], dtype=bool)
        assert degree(IncidenceMatrix(memberships=memberships, r=0.5)) == 4

    def test_single_vertex(self):
        assert degree(hyperedges_at(DistanceMatrix(np.zeros((1, 1))), 0.2)) == 1

    def test_n_distinct_singletons(self):
        rng = np.random.default_rng(23)
        dm = random_distance_matrix(rng, 15)
        tiny = dm.entries[dm.entries > 0].min() / 2.0
        assert degree(hyperedges_at(dm, tiny)) == 15


class TestAdjacency:
    def test_two_points_small_radius_identity(self):
        dm = DistanceMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.array_equal(adjacency_at(dm, 0.5), np.eye(2, dtype=np.int8))

    def test_two_points_large_radius_all_ones(self):
        dm = DistanceMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.array_equal(adjacency_at(dm, 1.5), np.ones((2, 2), dtype=np.int8))

    def test_symmetric_matrix_gives_symmetric_adjacency(self):
        rng = np.random.default_rng(24)
        for _ in range(20):
            dm = random_distance_matrix(rng, int(rng.integers(2, 20)))
            a = adjacency_at(dm, float(rng.uniform(0.05, 1.5)))
            assert np.array_equal(a, a.T)

    def test_asymmetric_matrix_transposed_threshold(self):
        entries = np.array([[0.0, 0.2], [0.9, 0.0]])
        dm = DistanceMatrix(entries)
        a = adjacency_at(dm, 0.5)
        # x_1 in e_2 requires delta(x_2, x_1) = 0.9 < r: false;
        # x_2 in e_1 requires delta(x_1, x_2) = 0.2 < r: true
        assert a[0, 1] == 0 and a[1, 0] == 1

    def test_rejects_nonpositive_radius(self):
        with pytest.raises(ValueError):
            adjacency_at(DistanceMatrix(np.zeros((1, 1))), 0.0)


class TestFiltrationCurve:
    def test_two_point_boundary_case(self):
        dm = DistanceMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]), normalized=True)
        curve = filtration_curve(dm, [0.5, 1.0, 1.01])
        assert curve.values.tolist() == [2, 2, 1]

    def test_collinear_example(self):
        curve = filtration_curve(collinear_matrix(), [0.4, 0.6, 1.01])
        assert curve.values.tolist() == [3, 3, 1]

    def test_coincident_points_collapse_immediately(self):
        dm = DistanceMatrix(np.zeros((7, 7)))
        curve = filtration_curve(dm, [0.01, 0.5, 1.0])
        assert curve.values.tolist() == [1, 1, 1]

    def test_rejects_bad_grids(self):
        dm = collinear_matrix()
        with pytest.raises(ValueError):
            filtration_curve(dm, [])
        with pytest.raises(ValueError):
            filtration_curve(dm, [0.2, 0.2, 0.3])
        with pytest.raises(ValueError):
            filtration_curve(dm, [-0.1, 0.5])

    def test_methods_agree_on_random_instances(self):
        rng = np.random.default_rng(25)
        for _ in range(100):
            n = int(rng.integers(2, 28))
            dm = random_distance_matrix(rng, n, coincident=bool(rng.integers(2)))
            grid = np.sort(rng.uniform(0.01, 1.7, size=12))
            grid = np.unique(grid)
            direct = filtration_curve(dm, grid, method="direct")
            incremental = filtration_curve(dm, grid, method="incremental")
            assert np.array_equal(direct.values, incremental.values)

    def test_methods_agree_on_asymmetric_matrix(self):
        rng = np.random.default_rng(26)
        a = rng.uniform(0.02, 1.4, size=(15, 15))
        np.fill_diagonal(a, 0.0)
        dm = DistanceMatrix(a)
        grid = np.linspace(0.05, 1.5, 20)
        direct = filtration_curve(dm, grid, method="direct")
        incremental = filtration_curve(dm, grid, method="incremental")
        assert np.array_equal(direct.values, incremental.values)
        per_radius = [degree(hyperedges_at(dm, r)) for r in grid]
        assert direct.values.tolist() == per_radius

    def test_equals_per_radius_definition(self):
        rng = np.random.default_rng(27)
        dm = random_distance_matrix(rng, 20)
        grid = np.linspace(0.05, 1.6, 25)
        curve = filtration_curve(dm, grid)
        assert curve.values.tolist() == [degree(hyperedges_at(dm, r)) for r in grid]

    def test_unknown_method_rejected(self):
        with pytest.raises(ValueError):
            filtration_curve(collinear_matrix(), [0.5], method="magic")

    def test_default_grid_used_when_none(self):
        curve = filtration_curve(collinear_matrix())
        assert curve.grid.size == 100
        assert np.array_equal(curve.grid, DEFAULT_GRID)


class TestFiltrationProperties:
    def test_monotone_hyperedge_growth(self):
        rng = np.random.default_rng(28)
        for _ in range(50):
            dm = random_distance_matrix(rng, int(rng.integers(2, 25)))
            r1, r2 = np.sort(rng.uniform(0.01, 1.6, size=2))
            m1 = membership_at(dm, r1)
            m2 = membership_at(dm, r2)
            assert (~m1 | m2).all()

    def test_endpoint_values(self):
        rng = np.random.default_rng(29)
        for _ in range(20):
            n = int(rng.integers(2, 20))
            dm = random_distance_matrix(rng, n)
            positive = dm.entries[dm.entries > 0]
            below = filtration_curve(dm, [positive.min() * 0.99]).values[0]
            above = filtration_curve(dm, [positive.max() * 1.01]).values[0]
            assert below == n  # all rows distinct singletons
            assert above == 1

    def test_coincident_points_count_distinct_locations(self):
        pts = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [5.0, 0.0, 0.0], [0.0, 7.0, 0.0]])
        dm = pairwise_matrix(pts, MetricSpec("euclidean"))
        assert filtration_curve(dm, [1e-6]).values[0] == 3

    def test_grid_refinement_consistency(self):
        rng = np.random.default_rng(30)
        dm = random_distance_matrix(rng, 18)
        coarse = np.linspace(0.1, 1.5, 8)
        fine = np.unique(np.concatenate([coarse, rng.uniform(0.05, 1.6, 40)]))
        coarse_curve = filtration_curve(dm, coarse)
        fine_curve = filtration_curve(dm, fine)
        idx = np.searchsorted(fine, coarse)
        assert np.array_equal(coarse_curve.values, fine_curve.values[idx])

    def test_values_bounded_by_vertex_count(self):
        rng = np.random.default_rng(31)
        dm = random_distance_matrix(rng, 23)
        curve = filtration_curve(dm, np.linspace(0.01, 2.0, 30))
        assert (curve.values >= 1).all() and (curve.values <= 23).all()


class TestFiltrationCurveType:
    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            FiltrationCurve(grid=np.array([0.1, 0.2]), values=np.array([3]))

    def test_len(self):
        assert len(FiltrationCurve(grid=np.array([0.1, 0.2]), values=np.array([2, 1]))) == 2
