#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Tests for metric quotients and retractions
"""
import itertools
import unittest

from tests.utils import RNG, loop, lollipop, path_graph, square, two_triangles
from treegrade.gen.spaces import random_space, triangle_chain
from treegrade.grading.pieces import TreeGrading
from treegrade.graph.enumeration import simple_paths
from treegrade.homotopy.sampling import LoopSampler
from treegrade.quotient.metric import (
    bonding_map,
    chain_pseudometric_oracle,
    compose_vertex_maps,
    metric_quotient,
)
from treegrade.quotient.retraction import (
    piece_retraction,
    piece_subgraph,
    retraction,
    separation_points,
)
from treegrade.utils.misc import TreeGradeInputError, TreeGradePreconditionError


class TestMetricQuotient(unittest.TestCase):
    def setUp(self):
        self.graph, self.grading = two_triangles()

    def test_collapse_one_piece(self):
        q = metric_quotient(self.graph, self.grading, [1])
        self.assertEqual(q.target.vertices, (1, 2, 3, "y2"))
        self.assertEqual(q.registry, {2: "y2"})
        self.assertEqual(q(5), "y2")
        self.assertEqual(q.collapsed_edges, frozenset({5, 6, 7}))
        self.assertEqual(q.target.distance(1, "y2"), 2)
        self.assertTrue(q.target_grading.piece(2).degenerate)
        self.assertEqual(q.fibers(), [{1}, {2}, {3}, {4, 5, 6}])
        self.assertTrue(q.is_non_expansive())

    def test_collapse_everything(self):
        q = metric_quotient(self.graph, self.grading, [])
        self.assertEqual(q.target.vertices, ("y1", "y2"))
        self.assertEqual(q.target.distance("y1", "y2"), 1)

    def test_unknown_piece(self):
        self.assertRaises(TreeGradeInputError, metric_quotient, self.graph, self.grading, [3])

    def test_project_path(self):
        q = metric_quotient(self.graph, self.grading, [1])
        projected = q.project_path(loop(self.graph, 3, [4, 5, 6, 7]))
        self.assertEqual(projected.start, 3)
        self.assertEqual(projected.tokens(), [4])
        self.assertEqual(projected.end(q.target), "y2")

    def test_factor(self):
        q = metric_quotient(self.graph, self.grading, [1])
        identity = q.factor(q.gamma)
        self.assertEqual(identity, {v: v for v in q.target.vertices})
        self.assertRaises(TreeGradeInputError, q.factor, {v: v for v in self.graph.vertices})

    def test_bonding_map_composes(self):
        first = metric_quotient(self.graph, self.grading, [1, 2])
        bond = bonding_map(first, [1])
        direct = metric_quotient(self.graph, self.grading, [1])
        self.assertEqual(bond.target, direct.target)
        self.assertEqual(compose_vertex_maps(first.gamma, bond.gamma), direct.gamma)
        self.assertRaises(TreeGradeInputError, bonding_map, direct, [2])

    def test_factor_through_a_further_collapse(self):
        spaces = [two_triangles(), triangle_chain(3), triangle_chain(3, layout="comb")]
        spaces += [
            random_space(seed, n_vertices=7, n_edges=10, length_bound=2) for seed in range(3)
        ]
        for graph, grading in spaces:
            ids = list(grading.piece_ids)
            for _ in range(5):
                keep = [p for p in ids if RNG.rand() < 0.6]
                smaller = [p for p in keep if RNG.rand() < 0.5]
                q = metric_quotient(graph, grading, keep)
                further = metric_quotient(graph, grading, smaller)
                h = q.factor(further.gamma)
                self.assertEqual(h, bonding_map(q, smaller).gamma)
                for y, z in itertools.combinations(q.target.vertices, 2):
                    self.assertLessEqual(
                        further.target.distance(h[y], h[z]), q.target.distance(y, z)
                    )

    def test_oracle_chain_bound(self):
        graph, _ = path_graph(5)
        self.assertEqual(chain_pseudometric_oracle(graph, [{2, 5}], 1, 4), 2)
        self.assertEqual(chain_pseudometric_oracle(graph, [{2, 5}], 1, 4, max_chain=1), 3)

    def test_matches_chain_oracle(self):
        spaces = [two_triangles(), lollipop(), random_space(3, n_vertices=6, n_edges=8)]
        for graph, grading in spaces:
            ids = grading.piece_ids
            for size in range(len(ids) + 1):
                for keep in itertools.combinations(ids, size):
                    q = metric_quotient(graph, grading, keep)
                    partition = [grading.piece(p).vertices for p in q.collapsed]
                    for u, v in itertools.combinations(graph.vertices, 2):
                        self.assertEqual(
                            q.target.distance(q(u), q(v)),
                            chain_pseudometric_oracle(graph, partition, u, v),
                        )

    def test_oracle(self):
        graph, _ = square()
        self.assertEqual(chain_pseudometric_oracle(graph, [{1, 3}], 2, 4), 2)
        self.assertEqual(chain_pseudometric_oracle(graph, [{1, 3}], 1, 3), 0)
        self.assertEqual(chain_pseudometric_oracle(graph, [{1, 2}, {3, 4}], 1, 4), 1)
        self.assertRaises(
            TreeGradeInputError, chain_pseudometric_oracle, graph, [{1, 2}, {2, 3}], 1, 4
        )


class TestRetraction(unittest.TestCase):
    def setUp(self):
        self.graph, self.grading = two_triangles()

    def test_piece_retraction(self):
        r = piece_retraction(self.graph, self.grading, 1)
        self.assertEqual(r.components, (frozenset({4, 5, 6}),))
        self.assertEqual([r(v) for v in self.graph.vertices], [1, 2, 3, 3, 3, 3])
        self.assertTrue(r.is_idempotent())
        self.assertTrue(r.is_non_expansive())
        image = r.apply_path(loop(self.graph, 1, [1, 2, 4, 5]))
        self.assertEqual(image.tokens(), [1, 2])

    def test_retraction_onto_the_bridge(self):
        sub = self.graph.subgraph([4], connected=True)
        r = retraction(self.graph, self.grading, sub)
        self.assertEqual(r(1), 3)
        self.assertEqual(r(6), 4)
        self.assertEqual(len(r.components), 2)
        self.assertTrue(r.is_non_expansive())

    def test_bad_subgraphs(self):
        sub = self.graph.subgraph([2, 4], connected=True)
        with self.assertRaises(TreeGradePreconditionError) as context:
            retraction(self.graph, self.grading, sub)
        self.assertEqual(context.exception.witness, 1)

        graph, grading = square()
        arc = graph.subgraph([1, 2], connected=True)
        self.assertRaises(TreeGradePreconditionError, retraction, graph, grading, arc)
        # without pieces the square is attached to the arc at both ends
        self.assertRaises(TreeGradePreconditionError, retraction, graph, TreeGrading(), arc)

        disconnected = self.graph.subgraph([1, 5])
        self.assertRaises(
            TreeGradeInputError, retraction, self.graph, self.grading, disconnected
        )

    def test_separation_points(self):
        first = piece_subgraph(self.graph, self.grading, 1)
        second = piece_subgraph(self.graph, self.grading, 2)
        self.assertEqual(separation_points(self.graph, self.grading, first, second), (3, 4))
        self.assertRaises(
            TreeGradeInputError, separation_points, self.graph, self.grading, first, first
        )

    def test_paths_between_pieces_pass_the_separation_points(self):
        spaces = [triangle_chain(3), triangle_chain(3, layout="comb")]
        spaces += [random_space(seed, n_vertices=7, n_edges=10) for seed in range(4)]
        for graph, grading in spaces:
            for one, two in itertools.combinations(grading.nondegenerate, 2):
                if one.vertices & two.vertices:
                    continue
                first = piece_subgraph(graph, grading, one.id)
                second = piece_subgraph(graph, grading, two.id)
                points = separation_points(graph, grading, first, second)
                for u, v in itertools.product(one.vertices, two.vertices):
                    for path in simple_paths(graph, u, v):
                        visited = graph.path_vertices(path)
                        self.assertIn(points[0], visited)
                        self.assertIn(points[1], visited)

    def test_image_of_a_loop_stays_on_the_loop(self):
        for seed in range(5):
            graph, grading = random_space(seed, n_vertices=7, n_edges=10)
            for piece in grading.nondegenerate:
                r = piece_retraction(graph, grading, piece.id)
                sampler = LoopSampler(graph, base=piece.smallest_vertex, max_length=10, seed=RNG)
                for path in sampler.sample_many(10):
                    image = r.apply_path(path)
                    self.assertLessEqual(
                        set(r.sub.path_vertices(image)), set(graph.path_vertices(path))
                    )

    def test_retraction_onto_a_union_of_blocks(self):
        for seed in range(5):
            graph, grading = random_space(seed, n_vertices=8, n_edges=11)
            blocks = [(set(p.edges), set(p.vertices)) for p in grading.nondegenerate]
            blocks += [
                ({e.id}, {e.u, e.v}) for e in graph.edges if grading.piece_of_edge(e.id) is None
            ]
            edges, vertices = blocks.pop(RNG.randint(len(blocks)))
            edges, vertices = set(edges), set(vertices)
            for _ in range(3):
                touching = [i for i, (_, vs) in enumerate(blocks) if vs & vertices]
                if not touching:
                    break
                more_edges, more_vertices = blocks.pop(touching[RNG.randint(len(touching))])
                edges |= more_edges
                vertices |= more_vertices
            sub = graph.subgraph(sorted(edges), sorted(vertices), connected=True)
            r = retraction(graph, grading, sub)
            self.assertTrue(r.is_idempotent())
            self.assertTrue(r.is_non_expansive())
            self.assertTrue(all(r(v) == v for v in vertices))
            for component in r.components:
                self.assertEqual(len({r(v) for v in component}), 1)

    def test_retraction_onto_two_triangles_and_their_bridge(self):
        graph, grading = triangle_chain(3)
        sub = graph.subgraph(list(range(1, 8)), connected=True)
        r = retraction(graph, grading, sub)
        self.assertEqual([r(v) for v in (7, 8, 9)], [6, 6, 6])
        self.assertEqual(r.components, (frozenset({7, 8, 9}),))
        self.assertEqual(r.apply_path(loop(graph, 6, [8, 9, 10, 11, "~8"])).tokens(), [])


if __name__ == "__main__":
    unittest.main()
