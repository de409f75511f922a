#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Tests for metric and cycle-structure algorithms
"""
import unittest
from fractions import Fraction

from tests.utils import loop, path_graph, square, theta, two_triangles
from treegrade.graph.algorithms import (
    bridges,
    cycle_rank,
    diameter,
    distance,
    path_diameter,
    two_edge_connected_blocks,
)
from treegrade.graph.enumeration import injective_paths, simple_cycles, simple_paths
from treegrade.graph.weighted import make_graph
from treegrade.utils.misc import TreeGradeInputError


class TestAlgorithms(unittest.TestCase):
    def test_bridges(self):
        graph, _ = two_triangles()
        self.assertEqual(bridges(graph), frozenset({4}))
        graph, _ = theta()
        self.assertEqual(bridges(graph), frozenset())
        graph, _ = path_graph(4)
        self.assertEqual(bridges(graph), frozenset({1, 2, 3}))

    def test_self_loops_are_not_bridges(self):
        graph = make_graph([1, 2], [(1, 1, 2, 1), (2, 2, 2, 1)])
        self.assertEqual(bridges(graph), frozenset({1}))
        self.assertEqual(two_edge_connected_blocks(graph), [frozenset({2})])

    def test_cycle_rank(self):
        self.assertEqual(cycle_rank(two_triangles()[0]), 2)
        self.assertEqual(cycle_rank(theta()[0]), 2)
        self.assertEqual(cycle_rank(path_graph(5)[0]), 0)
        disconnected = make_graph([1, 2], [], connected=False)
        self.assertRaises(TreeGradeInputError, cycle_rank, disconnected)

    def test_blocks(self):
        graph, _ = two_triangles()
        self.assertEqual(
            two_edge_connected_blocks(graph),
            [frozenset({1, 2, 3}), frozenset({5, 6, 7})],
        )

    def test_diameters(self):
        graph, _ = two_triangles()
        self.assertEqual(distance(graph, 1, 5), 3)
        self.assertEqual(diameter(graph, [1, 2, 3]), 1)
        self.assertEqual(diameter(graph, [2]), 0)
        self.assertEqual(path_diameter(graph, loop(graph, 1, [1, 2, 4, 5])), 3)

        graph, _ = square()
        self.assertEqual(diameter(graph, graph.vertices), 2)

    def test_rational_lengths(self):
        graph = make_graph([1, 2, 3], [(1, 1, 2, "1/3"), (2, 2, 3, "1/6"), (3, 1, 3, 1)])
        self.assertEqual(distance(graph, 1, 3), Fraction(1, 2))


class TestEnumeration(unittest.TestCase):
    def test_simple_cycles(self):
        graph, _ = two_triangles()
        self.assertEqual(simple_cycles(graph), [frozenset({1, 2, 3}), frozenset({5, 6, 7})])
        graph, _ = theta()
        self.assertEqual(
            simple_cycles(graph),
            [frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3})],
        )

    def test_self_loop_cycle(self):
        graph = make_graph([1], [(1, 1, 1, 1)])
        self.assertEqual(simple_cycles(graph), [frozenset({1})])

    def test_injective_paths(self):
        graph, _ = path_graph(3)
        paths = list(injective_paths(graph, start=1))
        self.assertEqual([p.tokens() for p in paths], [[], [1], [1, 2]])
        self.assertEqual(len(list(injective_paths(graph, max_length=1))), 3 + 4)

    def test_simple_paths(self):
        graph, _ = two_triangles()
        ends = sorted(len(p) for p in simple_paths(graph, 1, 3))
        self.assertEqual(ends, [1, 2])
        for path in simple_paths(graph, 1, 6):
            vertices = path.vertices(graph)
            self.assertEqual(len(vertices), len(set(vertices)))


if __name__ == "__main__":
    unittest.main()
