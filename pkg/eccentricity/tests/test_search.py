from django.test import SimpleTestCase
from hypothesis import given

from eccentricity.exceptions import CapExceededError, PreconditionError
from eccentricity.generators import gen_fig1, gen_fig3, gen_gk, gen_random_connected
from eccentricity.graph_core import build_graph, make_path
from eccentricity.laminarity import graph_diameter
from eccentricity.mesp import exact_mesp
from eccentricity.search import (
    check_lemma1,
    enumerate_spread_outcomes,
    pair_interval,
    path_projection,
    spread_pair,
    spread_path,
)

from .utils import DENSITY, PROPERTY_SETTINGS, SEEDS, SMALL_N, cycle_edges, path_edges


class SpreadTests(SimpleTestCase):
    def test_spread_pair_tie_break(self):
        self.assertEqual(spread_pair(build_graph(3, path_edges(3)), 1), (0, 2))

    def test_spread_pair_single_vertex(self):
        self.assertEqual(spread_pair(build_graph(1, []), 0), (0, 0))

    def test_path_graph_has_zero_eccentricity(self):
        g = build_graph(7, path_edges(7))
        for r in range(7):
            self.assertEqual(spread_path(g, r).ecc.value, 0)

    def test_spur_tip_of_g1(self):
        g1 = gen_gk(1)
        result = spread_path(g1.graph, g1.labels["z"])
        self.assertEqual((result.x, result.y), (0, 4))
        self.assertEqual(result.ecc.value, 1)
        self.assertEqual(result.first_sweep, 3)

    def test_fig1_every_root_within_five(self):
        g = gen_fig1().graph
        for r in range(g.n):
            result = spread_path(g, r)
            self.assertTrue(result.path.shortest)
            self.assertLessEqual(result.ecc.value, 5)

    def test_deterministic(self):
        g = gen_fig3().graph
        self.assertEqual(spread_path(g, 4), spread_path(g, 4))

    @PROPERTY_SETTINGS
    @given(seed=SEEDS, n=SMALL_N, p=DENSITY)
    def test_spread_distance_half_diameter(self, seed, n, p):
        g = gen_random_connected(n, p, seed)
        diam, _ = graph_diameter(g)
        for r in range(n):
            self.assertGreaterEqual(2 * spread_path(g, r).spread_distance, diam)


class SpreadOutcomeTests(SimpleTestCase):
    def test_path_graph_single_outcome(self):
        outcomes = enumerate_spread_outcomes(build_graph(4, path_edges(4)), 0)
        self.assertEqual(len(outcomes), 1)
        self.assertEqual((outcomes[0].x, outcomes[0].y, outcomes[0].max_ecc), (3, 0, 0))

    def test_fig1_worst_outcome_is_five(self):
        fig1 = gen_fig1()
        outcomes = enumerate_spread_outcomes(fig1.graph, fig1.labels["r"])
        self.assertEqual(max(outcome.max_ecc for outcome in outcomes), 5)
        self.assertIn(
            (fig1.labels["x"], fig1.labels["y"]),
            [(outcome.x, outcome.y) for outcome in outcomes],
        )
        self.assertEqual(outcomes, sorted(outcomes, key=lambda outcome: (outcome.x, outcome.y)))
        for outcome in outcomes:
            self.assertLessEqual(outcome.min_ecc, outcome.max_ecc)

    def test_cap_exceeded_names_pair(self):
        with self.assertRaises(CapExceededError) as ctx:
            enumerate_spread_outcomes(build_graph(4, cycle_edges(4)), 0, cap=1)
        self.assertEqual(ctx.exception.pair, (2, 0))
        self.assertEqual(ctx.exception.count, 1)


class ProjectionTests(SimpleTestCase):
    def test_projection_onto_itself(self):
        g = build_graph(5, path_edges(5))
        reference = make_path(g, range(5))
        projection = path_projection(g, reference, 0, reference)
        self.assertEqual((projection.i_min, projection.i_max), (0, 4))

    def test_fig1_single_vertex_query(self):
        fig1 = gen_fig1()
        reference = make_path(fig1.graph, fig1.paths["mesp"])
        projection = path_projection(fig1.graph, reference, 1, make_path(fig1.graph, [fig1.labels["r"]]))
        self.assertLessEqual(projection.i_min, 4)
        self.assertGreaterEqual(projection.i_max, 4)

    def test_fig3_top_path(self):
        fig3 = gen_fig3()
        reference = make_path(fig3.graph, fig3.paths["mesp"])
        projection = path_projection(fig3.graph, reference, 1, make_path(fig3.graph, fig3.paths["top"]))
        self.assertEqual((projection.i_min, projection.i_max), (0, 6))

    def test_rejects_non_shortest_inputs(self):
        g = build_graph(4, cycle_edges(4))
        detour = make_path(g, [0, 1, 2, 3])
        direct = make_path(g, [0, 1])
        with self.assertRaises(PreconditionError):
            path_projection(g, detour, 2, direct)
        with self.assertRaises(PreconditionError):
            path_projection(g, direct, 2, detour)

    def test_no_reference_vertex_in_reach(self):
        g = build_graph(7, path_edges(7))
        with self.assertRaises(PreconditionError):
            path_projection(g, make_path(g, [0, 1]), 1, make_path(g, [5, 6]))


class IntervalPropertyTests(SimpleTestCase):
    def test_query_equal_to_reference(self):
        fig3 = gen_fig3()
        reference = make_path(fig3.graph, fig3.paths["mesp"])
        self.assertTrue(check_lemma1(fig3.graph, reference, 1, reference))

    def test_fig1_thick_path(self):
        fig1 = gen_fig1()
        reference = make_path(fig1.graph, fig1.paths["mesp"])
        self.assertTrue(check_lemma1(fig1.graph, reference, 1, make_path(fig1.graph, fig1.paths["thick"])))

    def test_rejects_k_below_reference_eccentricity(self):
        fig1 = gen_fig1()
        thick = make_path(fig1.graph, fig1.paths["thick"])
        with self.assertRaises(PreconditionError):
            check_lemma1(fig1.graph, thick, 4, thick)

    @PROPERTY_SETTINGS
    @given(seed=SEEDS, n=SMALL_N, p=DENSITY)
    def test_spread_pair_lands_near_reference_ends(self, seed, n, p):
        g = gen_random_connected(n, p, seed)
        mesp = exact_mesp(g)
        k, t = mesp.k, mesp.path.length
        for r in range(n):
            result = spread_path(g, r)
            interval = pair_interval(g, mesp.path, k, result.x, result.y)
            self.assertLessEqual(interval.i_min, 5 * k)
            self.assertGreaterEqual(interval.i_max, t - 5 * k)
