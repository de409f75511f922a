#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Tests for balls in universal covers
"""
import unittest
from fractions import Fraction
from unittest import mock

from tests.utils import RNG, loop, square, theta, two_triangles
from treegrade.covers.ball import (
    ball_pairs,
    cover_ball,
    format_cover_vertex,
    lift_path,
    lifted_distance,
)
from treegrade.graph.algorithms import path_diameter
from treegrade.graph.weighted import EdgePath
from treegrade.homotopy.spanning import SpanningStructure
from treegrade.utils.misc import TreeGradeBallTooSmallError, TreeGradeInputError

AROUND = (1, ((4, 1),))


class TestCoverBall(unittest.TestCase):
    def setUp(self):
        self.graph, self.grading = square()
        self.structure = SpanningStructure(self.graph, self.grading)

    def test_cycle_cover_is_a_line(self):
        ball = cover_ball(self.graph, self.structure, 1, radius=2)
        self.assertEqual(len(ball.vertices()), 5)
        self.assertEqual(len(ball.edges()), 4)
        self.assertTrue(ball.is_tree())
        self.assertTrue(ball.has_unique_lifting())
        self.assertEqual(len(list(ball_pairs(ball))), 10)
        self.assertIn((4, ((4, -1),)), ball.vertices())

    def test_depth_and_membership(self):
        ball = cover_ball(self.graph, self.structure, 1, radius=3)
        self.assertEqual(ball.root, (1, ()))
        self.assertEqual(ball.depth((3, ())), 2)
        self.assertEqual(ball.depth(AROUND), 4)
        self.assertTrue(ball.contains((4, ())))
        self.assertFalse(ball.contains(AROUND))
        with self.assertRaises(TreeGradeBallTooSmallError) as context:
            ball.check(AROUND)
        self.assertEqual(context.exception.radius, 3)
        self.assertRaises(TreeGradeInputError, ball.path_from_root, (1, ((1, 1),)))
        self.assertRaises(TreeGradeInputError, cover_ball, self.graph, self.structure, 1, -1)

    def test_format(self):
        self.assertEqual(format_cover_vertex((1, ())), "1|1")
        self.assertEqual(format_cover_vertex((1, ((4, 1), (7, -1)))), "1|g4 g7^-1")

    def test_two_triangles(self):
        graph, grading = two_triangles()
        ball = cover_ball(graph, SpanningStructure(graph, grading), 3, radius=3)
        self.assertTrue(ball.is_tree())
        self.assertTrue(ball.has_unique_lifting())

    def test_lifting_needs_generators(self):
        graph, grading = theta()
        with mock.patch.object(SpanningStructure, "is_generator", return_value=False):
            ball = cover_ball(graph, SpanningStructure(graph, grading), 1, radius=1)
            self.assertFalse(ball.has_unique_lifting())
        ball = cover_ball(graph, SpanningStructure(graph, grading), 1, radius=1)
        self.assertTrue(ball.has_unique_lifting())


class TestLifting(unittest.TestCase):
    def setUp(self):
        self.graph, self.grading = square()
        self.structure = SpanningStructure(self.graph, self.grading)
        self.ball = cover_ball(self.graph, self.structure, 1)

    def test_essential_loop_does_not_close(self):
        lift = lift_path(self.ball, loop(self.graph, 1, [1, 2, 3, 4]))
        self.assertFalse(lift.closes)
        self.assertEqual(lift.end, AROUND)
        self.assertEqual(lift.projection(), [1, 2, 3, 4, 1])

    def test_backtracking_closes(self):
        lift = lift_path(self.ball, loop(self.graph, 1, [1, 2, "~2", "~1"]))
        self.assertTrue(lift.closes)
        lift = lift_path(self.ball, loop(self.graph, 1, [1, 2, 3, 4, "~4", "~3", "~2", "~1"]))
        self.assertTrue(lift.closes)

    def test_lift_leaves_small_ball(self):
        ball = cover_ball(self.graph, self.structure, 1, radius=3)
        path = loop(self.graph, 1, [1, 2, 3, 4])
        self.assertRaises(TreeGradeBallTooSmallError, lift_path, ball, path)
        self.assertRaises(
            TreeGradeInputError, lift_path, self.ball, loop(self.graph, 1, [1]), (2, ())
        )

    def test_lifted_distance(self):
        root = self.ball.root
        self.assertEqual(lifted_distance(self.ball, root, root), 0)
        self.assertEqual(lifted_distance(self.ball, root, (2, ())), 1)
        # the lifts project to the same vertex but sit a full turn apart
        self.assertEqual(lifted_distance(self.ball, root, AROUND), Fraction(2))
        self.assertEqual(self.graph.distance(1, 1), 0)
        self.assertEqual(lifted_distance(self.ball, (2, ()), (4, ())), 2)

    def test_lifted_distance_is_the_best_walk(self):
        graph, grading = two_triangles()
        ball = cover_ball(graph, SpanningStructure(graph, grading), 3, radius=2)
        inside = ball.vertices()
        vertices = sorted(inside, key=format_cover_vertex)
        for _ in range(6):
            a = vertices[RNG.randint(len(vertices))]
            best = {}
            stack = [(a, EdgePath(a[0]))]
            while stack:
                vertex, walk = stack.pop()
                diameter = path_diameter(graph, walk)
                best[vertex] = min(best.get(vertex, diameter), diameter)
                if len(walk) < 2 * ball.radius:
                    for traversal, nxt in ball.neighbors(vertex):
                        if nxt in inside:
                            step = EdgePath(vertex[0], (traversal,))
                            stack.append((nxt, walk.concat(step)))
            self.assertEqual(set(best), inside)
            for b, value in best.items():
                self.assertEqual(lifted_distance(ball, a, b), value)


if __name__ == "__main__":
    unittest.main()
