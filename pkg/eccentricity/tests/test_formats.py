import re

from django.test import SimpleTestCase
from hypothesis import given

from eccentricity.exceptions import GraphValidationError, PreconditionError
from eccentricity.formats import (
    parse_edge_list,
    parse_edge_list_document,
    parse_highlight,
    parse_path_spec,
    serialize_edge_list,
    write_dot,
)
from eccentricity.generators import gen_fig1, gen_hk, gen_random_connected
from eccentricity.graph_core import build_graph, make_path

from .utils import DENSITY, PROPERTY_SETTINGS, SEEDS, SMALL_N

STYLED_EDGE = re.compile(r"^\s+(\d+) -- (\d+) \[(.*)\];$")


class ParseEdgeListTests(SimpleTestCase):
    def test_minimal_document(self):
        g = parse_edge_list("2 1\n0 1\n")
        self.assertEqual((g.n, g.m), (2, 1))

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# triangle\n\n3 3\n0 1\n\n1 2\n2 0\n")
        self.assertEqual(g, build_graph(3, [(0, 1), (1, 2), (0, 2)]))

    def test_labels(self):
        g, labels = parse_edge_list_document("# label a 0\n# label b 1\n2 1\n0 1\n")
        self.assertEqual(labels, {"a": 0, "b": 1})
        self.assertEqual(g.n, 2)

    def test_errors_carry_line_numbers(self):
        cases = [
            ("2 1\n0 x\n", 2),
            ("2 1\n0 1 2\n", 2),
            ("3 2\n0 1\n1 3\n", 3),
            ("2 1\n1 1\n", 2),
            ("two one\n0 1\n", 1),
            ("# label a 5\n2 1\n0 1\n", 1),
        ]
        for text, line in cases:
            with self.subTest(text=text):
                with self.assertRaises(GraphValidationError) as ctx:
                    parse_edge_list(text)
                self.assertEqual(ctx.exception.line_number, line)
                self.assertIn(f"line {line}", str(ctx.exception))

    def test_edge_count_mismatch(self):
        with self.assertRaises(GraphValidationError) as ctx:
            parse_edge_list("3 3\n0 1\n1 2\n")
        self.assertIn("3 edges", str(ctx.exception))

    def test_missing_header(self):
        with self.assertRaises(GraphValidationError):
            parse_edge_list("# nothing here\n")

    def test_disconnected(self):
        with self.assertRaises(GraphValidationError):
            parse_edge_list("4 2\n0 1\n2 3\n")


class SerializeTests(SimpleTestCase):
    def test_canonical_form(self):
        g = build_graph(3, [(2, 1), (1, 0)])
        self.assertEqual(serialize_edge_list(g), "3 2\n0 1\n1 2\n")

    def test_labels_survive(self):
        fig1 = gen_fig1()
        text = serialize_edge_list(fig1.graph, fig1.labels, comments=["fig1"])
        self.assertTrue(text.startswith("# fig1\n"))
        g, labels = parse_edge_list_document(text)
        self.assertEqual(g, fig1.graph)
        self.assertEqual(labels, fig1.labels)

    @PROPERTY_SETTINGS
    @given(seed=SEEDS, n=SMALL_N, p=DENSITY)
    def test_parse_inverts_serialize(self, seed, n, p):
        g = gen_random_connected(n, p, seed)
        self.assertEqual(parse_edge_list(serialize_edge_list(g)), g)


class PathSpecTests(SimpleTestCase):
    def test_ids(self):
        self.assertEqual(parse_path_spec("0,1, 2"), [0, 1, 2])
        self.assertEqual(parse_path_spec("3 4"), [3, 4])

    def test_labels(self):
        self.assertEqual(parse_path_spec("a,1,b", {"a": 0, "b": 2}), [0, 1, 2])

    def test_unknown_label(self):
        with self.assertRaises(PreconditionError):
            parse_path_spec("0,q")

    def test_empty(self):
        with self.assertRaises(PreconditionError):
            parse_path_spec(" , ")

    def test_highlight_color(self):
        self.assertEqual(parse_highlight("0,1"), ([0, 1], "red"))
        self.assertEqual(parse_highlight("0,1:green"), ([0, 1], "green"))
        self.assertEqual(parse_highlight("0,1:thick"), ([0, 1], "thick"))


class DotTests(SimpleTestCase):
    def test_single_edge(self):
        dot = write_dot(build_graph(2, [(0, 1)]))
        self.assertTrue(dot.startswith("graph G {\n"))
        self.assertTrue(dot.endswith("}\n"))
        self.assertIn("  0 -- 1;\n", dot)
        self.assertNotIn("->", dot)

    def test_labels_become_node_names(self):
        dot = write_dot(build_graph(2, [(0, 1)]), labels={"a": 0})
        self.assertIn('  0 [label="a"];', dot)
        self.assertIn("  1;", dot)

    def test_fig1_thick_path(self):
        fig1 = gen_fig1()
        dot = write_dot(fig1.graph, [(fig1.paths["thick"], "thick")], fig1.labels)
        styled = {}
        for line in dot.splitlines():
            match = STYLED_EDGE.match(line)
            if match:
                styled[(int(match[1]), int(match[2]))] = match[3]
        self.assertEqual(set(styled), {(11, 14), (11, 13), (5, 13), (5, 6), (6, 15)})
        self.assertTrue(all("penwidth=3" in attributes for attributes in styled.values()))

    def test_colors_stack(self):
        h1 = gen_hk(1)
        dot = write_dot(h1.graph, [(h1.paths["red"], "red"), (make_path(h1.graph, h1.paths["green"]), "green")])
        self.assertIn("  2 -- 3 [color=green, penwidth=2];", dot)
        self.assertIn("  0 -- 1 [color=red, penwidth=2];", dot)

    def test_deterministic(self):
        fig1 = gen_fig1()
        highlights = [(fig1.paths["mesp"], "red"), (fig1.paths["thick"], "thick")]
        self.assertEqual(write_dot(fig1.graph, highlights), write_dot(fig1.graph, highlights))

    def test_path_must_use_edges(self):
        with self.assertRaises(PreconditionError):
            write_dot(build_graph(3, [(0, 1), (1, 2)]), [([0, 2], "red")])
