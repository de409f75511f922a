#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Tests for the JSON documents
"""
import io
import json
import os
import tempfile
import unittest

from tests.utils import loop, lollipop, two_triangles
from treegrade.gen.spaces import triangle_chain
from treegrade.grading.pieces import canonical_grading
from treegrade.io.serialization import (
    dumps,
    filtration_from_json,
    filtration_to_json,
    grading_from_json,
    grading_to_json,
    graph_from_json,
    graph_to_json,
    load_json,
    loop_from_json,
    loop_to_json,
    map_from_json,
    map_to_json,
    space_from_json,
    space_to_json,
    vertex_map_to_json,
)
from treegrade.maps.graded import GradedMap
from treegrade.utils.misc import TreeGradeInputError, TreeGradeSchemaError


class TestGraphDocuments(unittest.TestCase):
    def test_graph_to_json(self):
        graph, _ = triangle_chain(1, circumference="3/2")
        document = graph_to_json(graph)
        self.assertEqual(document["vertices"], [1, 2, 3])
        self.assertEqual(document["edges"][0], {"id": 1, "u": 1, "v": 2, "len": "1/2"})

    def test_dumps_is_canonical(self):
        text = dumps({"b": 1, "a": 2})
        self.assertLess(text.index('"a"'), text.index('"b"'))
        graph, grading = two_triangles()
        self.assertEqual(
            dumps(space_to_json(graph, grading)),
            dumps(space_to_json(*two_triangles())),
        )

    def test_space_from_json(self):
        graph, grading = two_triangles()
        parsed = space_from_json(json.loads(dumps(space_to_json(graph, grading))))
        self.assertEqual(parsed, (graph, grading))

    def test_bare_graph_gets_canonical_grading(self):
        graph, _ = two_triangles()
        with self.assertLogs("treegrade.io.serialization", level="INFO"):
            parsed_graph, grading = space_from_json(graph_to_json(graph))
        self.assertEqual(parsed_graph, graph)
        self.assertEqual(grading, canonical_grading(graph))

    def test_degenerate_piece(self):
        graph, grading = lollipop()
        document = grading_to_json(grading)
        self.assertEqual(document["pieces"][1], {"id": 2, "edges": [], "vertex": 6})
        self.assertEqual(grading_from_json(document, graph), grading)

    def test_schema_errors(self):
        cases = [
            ({"vertices": [1, 2]}, "$.edges"),
            ({"vertices": [True], "edges": []}, "$.vertices[0]"),
            (
                {"vertices": [1, 2], "edges": [{"id": 1, "u": 1, "v": 2, "len": "abc"}]},
                "$.edges[0].len",
            ),
            (
                {"vertices": [1, 2], "edges": [{"id": 1, "u": 1, "v": 2, "len": 0.5}]},
                "$.edges[0].len",
            ),
            ({"vertices": [1, 2], "edges": [{"id": 1, "u": 1, "len": "1"}]}, "$.edges[0].v"),
            ([], "$"),
        ]
        for document, path in cases:
            with self.assertRaises(TreeGradeSchemaError) as context:
                graph_from_json(document)
            self.assertEqual(context.exception.path, path)

    def test_grading_errors(self):
        graph, _ = two_triangles()
        with self.assertRaises(TreeGradeSchemaError) as context:
            grading_from_json({"pieces": [{"id": 1, "edges": [99]}]}, graph)
        self.assertEqual(context.exception.path, "$.pieces[0].edges[0]")
        with self.assertRaises(TreeGradeSchemaError) as context:
            grading_from_json({"pieces": [{"id": 1, "edges": []}]}, graph)
        self.assertEqual(context.exception.path, "$.pieces[0].vertex")


class TestLoading(unittest.TestCase):
    def test_load_json(self):
        self.assertEqual(load_json(io.StringIO('{"a": 1}')), {"a": 1})
        with self.assertRaises(TreeGradeSchemaError) as context:
            load_json(io.StringIO("{"))
        self.assertEqual(context.exception.path, "$")

    def test_load_from_file(self):
        graph, grading = two_triangles()
        with tempfile.TemporaryDirectory() as tmpdir:
            filename = os.path.join(tmpdir, "space.json")
            with open(filename, "w") as f:
                f.write(dumps(space_to_json(graph, grading)))
            self.assertEqual(space_from_json(load_json(filename)), (graph, grading))
            self.assertRaises(
                TreeGradeInputError, load_json, os.path.join(tmpdir, "missing.json")
            )


class TestLoopDocuments(unittest.TestCase):
    def setUp(self):
        self.graph, _ = two_triangles()

    def test_loop_from_json(self):
        path, base = loop_from_json({"base": 1, "edges": ["~3", "~2", "~1"]}, self.graph)
        self.assertEqual(base, 1)
        self.assertEqual(path.tokens(), ["~3", "~2", "~1"])
        path, base = loop_from_json({"base": 1, "start": 4, "edges": [5, 6, 7]}, self.graph)
        self.assertEqual(path.start, 4)
        self.assertEqual(base, 1)

    def test_loop_to_json(self):
        path = loop(self.graph, 4, [5, 6, 7])
        self.assertEqual(loop_to_json(path), {"base": 4, "edges": [5, 6, 7]})
        self.assertEqual(loop_to_json(path, base=1)["start"], 4)

    def test_loop_errors(self):
        cases = [
            ({"base": 1, "edges": [1.5]}, "$.edges[0]"),
            ({"base": 1, "edges": [5]}, "$.edges"),
            ({"base": 9, "edges": []}, "$.base"),
            ({"edges": []}, "$.base"),
        ]
        for document, path in cases:
            with self.assertRaises(TreeGradeSchemaError) as context:
                loop_from_json(document, self.graph)
            self.assertEqual(context.exception.path, path)


class TestMapDocuments(unittest.TestCase):
    def test_identity_map(self):
        graph, grading = two_triangles()
        f = GradedMap.identity(graph, grading)
        document = json.loads(dumps(map_to_json(f)))
        self.assertEqual(document["edge_map"]["4"], [4])
        parsed = map_from_json(document)
        self.assertEqual(parsed.vertex_map, f.vertex_map)
        self.assertEqual(parsed.edge_map, f.edge_map)

    def test_missing_image(self):
        graph, grading = two_triangles()
        document = map_to_json(GradedMap.identity(graph, grading))
        del document["vertex_map"]["1"]
        with self.assertRaises(TreeGradeSchemaError) as context:
            map_from_json(document)
        self.assertEqual(context.exception.path, "$.vertex_map")

    def test_unknown_edge(self):
        graph, grading = two_triangles()
        document = map_to_json(GradedMap.identity(graph, grading))
        document["edge_map"]["x"] = []
        with self.assertRaises(TreeGradeSchemaError) as context:
            map_from_json(document)
        self.assertEqual(context.exception.path, "$.edge_map.x")


class TestFiltrations(unittest.TestCase):
    def test_filtration(self):
        levels = filtration_from_json([[1], [2, 1]])
        self.assertEqual(levels, [frozenset({1}), frozenset({1, 2})])
        self.assertEqual(filtration_to_json(levels), [[1], [1, 2]])
        self.assertRaises(TreeGradeSchemaError, filtration_from_json, "x")
        with self.assertRaises(TreeGradeSchemaError) as context:
            filtration_from_json([[True]])
        self.assertEqual(context.exception.path, "$[0][0]")

    def test_vertex_map(self):
        document = vertex_map_to_json({2: "y1", 1: "y1"})
        self.assertEqual(list(document), ["1", "2"])


if __name__ == "__main__":
    unittest.main()
