#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Tests for the oracle-equivalence suites
"""
import unittest

from tests.utils import two_triangles
from treegrade.base import GradedSpace
from treegrade.maps.graded import check_grade_preserving
from treegrade.selftest import (
    SuiteResult,
    attach_triangle,
    inclusion_map,
    selftest,
    wrapping_map,
)


class TestHelpers(unittest.TestCase):
    def test_suite_result(self):
        result = SuiteResult("demo")
        result.check(True, "fine")
        result.check(False, "broken")
        self.assertFalse(result.passed)
        self.assertEqual(
            result.to_json(),
            {"name": "demo", "checked": 2, "passed": False, "n_failures": 1, "failures": ["broken"]},
        )

    def test_attach_triangle(self):
        graph, grading = two_triangles()
        extended, extended_grading = attach_triangle(graph, grading, 2)
        self.assertEqual(extended.n_vertices, 9)
        self.assertEqual(extended.n_edges, 11)
        self.assertEqual(extended_grading.piece_ids, (1, 2, 3))
        self.assertEqual(extended_grading.piece(3).vertices, frozenset({7, 8, 9}))

    def test_inclusion_map(self):
        space = GradedSpace(*two_triangles())
        report = check_grade_preserving(inclusion_map(space, 5))
        self.assertTrue(report.ok)
        self.assertTrue(report.injective)

    def test_wrapping_map(self):
        f = wrapping_map(1)
        report = check_grade_preserving(f)
        self.assertTrue(report.ok)
        self.assertEqual(report.assignment, {1: 2})
        self.assertEqual(f.edge_map[1].tokens(), [5, 6, 7, 5])
        self.assertEqual(f(1), 4)


class TestSelfTest(unittest.TestCase):
    def test_small_run(self):
        summary = selftest(seed=3, n_graphs=2, n_loops=5)
        self.assertEqual(summary["seed"], 3)
        self.assertEqual(summary["graphs"], 2)
        names = [suite["name"] for suite in summary["suites"]]
        self.assertEqual(names[0], "distance")
        self.assertEqual(names[-2:], ["injectivity", "wedge_arc"])
        self.assertTrue(summary["passed"], summary["suites"])


if __name__ == "__main__":
    unittest.main()
