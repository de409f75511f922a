#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Tests for the weighted graph module
"""
import unittest
from fractions import Fraction

from tests.utils import two_triangles
from treegrade.graph.weighted import (
    Edge,
    EdgeLoop,
    EdgePath,
    Traversal,
    make_graph,
    unit_graph,
)
from treegrade.utils.misc import TreeGradeInputError


class TestWeightedGraph(unittest.TestCase):
    def test_construction(self):
        graph = make_graph([1, 2, 3], [(1, 1, 2, "1/2"), (2, 2, 3, 3)])
        self.assertEqual(graph.vertices, (1, 2, 3))
        self.assertEqual(graph.edge_ids, (1, 2))
        self.assertEqual(graph.edge(1).length, Fraction(1, 2))
        self.assertEqual(graph.n_vertices, 3)
        self.assertEqual(graph.n_edges, 2)

    def test_invalid_graphs(self):
        self.assertRaises(TreeGradeInputError, make_graph, [], [])
        # non-positive length
        self.assertRaises(TreeGradeInputError, make_graph, [1, 2], [(1, 1, 2, 0)])
        # undeclared endpoint
        self.assertRaises(TreeGradeInputError, make_graph, [1], [(1, 1, 2, 1)])
        # duplicate id
        self.assertRaises(
            TreeGradeInputError, make_graph, [1, 2], [(1, 1, 2, 1), (1, 2, 1, 1)]
        )
        # disconnected
        self.assertRaises(TreeGradeInputError, make_graph, [1, 2], [])
        graph = make_graph([1, 2], [], connected=False)
        self.assertFalse(graph.is_connected())

    def test_multi_edges_and_self_loops(self):
        graph = make_graph([1, 2], [(1, 1, 2, 1), (2, 1, 2, 2), (3, 2, 2, 1)])
        self.assertEqual(len(graph.incident(2)), 4)
        self.assertTrue(graph.edge(3).is_loop)
        self.assertEqual(graph.distance(1, 2), 1)

    def test_distance(self):
        graph, _ = two_triangles()
        self.assertEqual(graph.distance(1, 6), 3)
        self.assertEqual(graph.distance(2, 5), 3)
        self.assertEqual(graph.distance(4, 4), 0)
        self.assertRaises(TreeGradeInputError, graph.distance, 1, 99)

    def test_subgraph(self):
        graph, _ = two_triangles()
        sub = graph.subgraph([1, 2, 3], vertices=[4])
        self.assertEqual(sub.vertices, (1, 2, 3, 4))
        self.assertFalse(sub.is_connected())
        self.assertRaises(TreeGradeInputError, graph.subgraph, [99])

    def test_contract(self):
        graph, _ = two_triangles()
        contracted, vertex_map = graph.contract({"y2": [4, 5, 6]})
        self.assertEqual(contracted.vertices, (1, 2, 3, "y2"))
        self.assertEqual(contracted.edge_ids, (1, 2, 3, 4))
        self.assertEqual(contracted.edge(4).v, "y2")
        self.assertEqual(vertex_map[5], "y2")
        self.assertEqual(vertex_map[1], 1)
        self.assertRaises(TreeGradeInputError, graph.contract, {"a": [1], "b": [1, 2]})
        self.assertRaises(TreeGradeInputError, graph.contract, {1: [2, 3]})

    def test_equality(self):
        first, _ = two_triangles()
        second, _ = two_triangles()
        self.assertEqual(first, second)
        self.assertEqual(hash(first), hash(second))
        self.assertNotEqual(first, unit_graph([(1, 2)]))


class TestEdgePath(unittest.TestCase):
    def setUp(self):
        self.graph, _ = two_triangles()

    def test_from_tokens(self):
        path = EdgePath.from_tokens(self.graph, 1, [1, 2, 4])
        self.assertEqual(path.steps, (Traversal(1), Traversal(2), Traversal(4)))
        self.assertEqual(path.vertices(self.graph), [1, 2, 3, 4])
        self.assertEqual(path.end(self.graph), 4)
        self.assertEqual(path.tokens(), [1, 2, 4])

    def test_backward_tokens(self):
        path = EdgePath.from_tokens(self.graph, 1, [3, "~2"])
        self.assertEqual(path.vertices(self.graph), [1, 3, 2])
        self.assertEqual(path.tokens(), ["~3", "~2"])
        self.assertRaises(
            TreeGradeInputError, EdgePath.from_tokens, self.graph, 1, ["~1"]
        )

    def test_invalid_tokens(self):
        self.assertRaises(TreeGradeInputError, EdgePath.from_tokens, self.graph, 1, [5])
        self.assertRaises(TreeGradeInputError, EdgePath.from_tokens, self.graph, 1, ["x"])
        self.assertRaises(TreeGradeInputError, EdgePath.from_tokens, self.graph, 99, [])

    def test_reverse_and_concat(self):
        path = EdgePath.from_tokens(self.graph, 1, [1, 2])
        back = path.reversed(self.graph)
        self.assertEqual(back.start, 3)
        self.assertEqual(back.vertices(self.graph), [3, 2, 1])
        both = path.concat(back)
        self.assertEqual(len(both), 4)
        self.assertEqual(both.end(self.graph), 1)

    def test_loop(self):
        loop = EdgeLoop.from_tokens(self.graph, 1, [1, 2, 3])
        self.assertIsInstance(loop, EdgeLoop)
        self.assertRaises(TreeGradeInputError, EdgeLoop.from_tokens, self.graph, 1, [1])
        self.assertTrue(EdgeLoop.constant(4).is_constant)

    def test_edge_other(self):
        edge = Edge(1, 1, 2, Fraction(1))
        self.assertEqual(edge.other(1), 2)
        self.assertRaises(TreeGradeInputError, edge.other, 3)


if __name__ == "__main__":
    unittest.main()
