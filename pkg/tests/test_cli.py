#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Tests for the command line interface
"""
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr
from unittest import mock

from tests.utils import square, two_triangles
from treegrade.cli import (
    EXIT_INPUT,
    EXIT_OK,
    SEED_VARIABLE,
    default_seed,
    parse_ids,
    run,
)
from treegrade.gen.spaces import DEFAULT_SEED, triangle_chain
from treegrade.io.serialization import dumps, graph_to_json, map_to_json, space_to_json
from treegrade.maps.graded import GradedMap
from treegrade.utils.misc import TreeGradeInputError


class TestHelpers(unittest.TestCase):
    def test_parse_ids(self):
        self.assertEqual(parse_ids("1, 2"), [1, 2])
        self.assertEqual(parse_ids(""), [])
        self.assertEqual(parse_ids(None), [])
        self.assertRaises(TreeGradeInputError, parse_ids, "a")

    def test_default_seed(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(default_seed(), DEFAULT_SEED)
        with mock.patch.dict(os.environ, {SEED_VARIABLE: "42"}):
            self.assertEqual(default_seed(), 42)
        with mock.patch.dict(os.environ, {SEED_VARIABLE: "x"}):
            self.assertRaises(TreeGradeInputError, default_seed)


class TestCommands(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.space = self.write("space.json", space_to_json(*two_triangles()))

    def tearDown(self):
        self.tmpdir.cleanup()

    def write(self, name, document):
        filename = os.path.join(self.tmpdir.name, name)
        with open(filename, "w") as f:
            f.write(dumps(document))
        return filename

    def run_command(self, *argv):
        out = io.StringIO()
        with redirect_stderr(io.StringIO()):
            code = run(list(argv), out=out)
        return code, out.getvalue()

    def run_json(self, *argv):
        code, text = self.run_command(*argv)
        self.assertEqual(code, EXIT_OK, text)
        return json.loads(text)

    def test_gen(self):
        document = self.run_json("gen", "triangle-chain", "--k", "2")
        self.assertEqual(document, json.loads(dumps(space_to_json(*triangle_chain(2)))))
        document = self.run_json("gen", "wedge-arc")
        self.assertEqual(document["cover"]["degree"], 2)
        self.assertEqual(len(document["cover"]["grading"]["pieces"]), 1)
        code, text = self.run_command("gen", "random", "--n", "5", "--m", "7", "--dot")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(text.startswith('graph "X" {'))

    def test_decompose(self):
        graph, _ = two_triangles()
        filename = self.write("graph.json", graph_to_json(graph))
        document = self.run_json("decompose", filename)
        self.assertEqual(len(document["grading"]["pieces"]), 2)
        self.assertEqual(document["bridges"], [4])

    def test_validate(self):
        self.assertTrue(self.run_json("validate", self.space)["ok"])
        graph, _ = two_triangles()
        filename = self.write(
            "bad.json", {"graph": graph_to_json(graph), "grading": {"pieces": []}}
        )
        code, text = self.run_command("validate", filename)
        self.assertEqual(code, EXIT_INPUT)
        self.assertFalse(json.loads(text)["ok"])

    def test_parameterize_and_quotient(self):
        document = self.run_json("parameterize", self.space)
        self.assertEqual(document["q"]["5"], "y2")
        document = self.run_json("quotient", self.space, "--keep", "1")
        self.assertEqual(document["graph"]["vertices"], [1, 2, 3, "y2"])
        self.assertEqual(document["gamma"]["5"], "y2")
        self.assertEqual(document["keep"], [1])
        document = self.run_json("quotient", self.space, "--keep", "1,2", "--bond", "1")
        self.assertEqual(document["keep"], [1])

    def test_retract(self):
        document = self.run_json("retract", self.space, "--piece", "1")
        self.assertEqual(document["r"]["6"], 3)
        self.assertTrue(document["idempotent"])
        document = self.run_json("retract", self.space, "--edges", "4")
        self.assertEqual(document["r"]["1"], 3)
        code, _ = self.run_command("retract", self.space)
        self.assertEqual(code, EXIT_INPUT)

    def test_loop_files(self):
        loop = self.write("loop.json", {"base": 4, "edges": [5, 6, 7]})
        document = self.run_json("essential", self.space, "--loop-file", loop, "--oracle")
        self.assertTrue(document["essential"])
        self.assertTrue(document["oracle"])
        self.assertEqual(document["witness"], [2])

        filtration = self.write("filtration.json", [[1], [1, 2]])
        document = self.run_json(
            "phi", self.space, "--loop-file", loop, "--filtration-file", filtration
        )
        self.assertTrue(document["coherent"])
        self.assertEqual([level["keep"] for level in document["levels"]], [[1], [1, 2]])

        backtrack = self.write("backtrack.json", {"base": 3, "edges": [4, "~4"]})
        document = self.run_json("reduce", self.space, "--loop-file", backtrack)
        self.assertEqual(document["loop"]["edges"], [])
        self.assertEqual(document["word"], [])

    def test_inline_loops(self):
        document = self.run_json(
            "essential", self.space, "--loop", "5,6,7", "--base", "4", "--oracle"
        )
        self.assertTrue(document["essential"])
        self.assertEqual(document["witness"], [2])
        # without --base the loop starts at the tail of its first token
        document = self.run_json("essential", self.space, "--loop", "~3,~2,~1")
        self.assertTrue(document["essential"])
        self.assertEqual(document["witness"], [1])
        document = self.run_json("essential", self.space, "--loop", "4,~4", "--base", "3")
        self.assertFalse(document["essential"])

        document = self.run_json(
            "phi", self.space, "--loop", "5,6,7", "--base", "4", "--filtration", "1;1,2"
        )
        self.assertTrue(document["coherent"])
        self.assertEqual([level["keep"] for level in document["levels"]], [[1], [1, 2]])
        self.assertEqual(document["levels"][0]["word"], [])
        self.assertNotEqual(document["levels"][1]["word"], [])

        document = self.run_json("reduce", self.space, "--loop", "4,~4", "--base", "3")
        self.assertEqual(document["loop"]["edges"], [])
        self.assertEqual(document["word"], [])

    def test_inline_loop_errors(self):
        loop = self.write("loop.json", {"base": 4, "edges": [5, 6, 7]})
        for argv in (
            ("essential", self.space),
            ("essential", self.space, "--loop", "5,6,7", "--loop-file", loop),
            ("essential", self.space, "--loop", "5,6"),
            ("essential", self.space, "--loop", "9"),
            ("essential", self.space, "--loop", "x"),
            ("essential", self.space, "--loop", ""),
            ("essential", self.space, "--loop", "5,6,7", "--base", "99"),
            ("phi", self.space, "--loop", "5,6,7"),
            ("phi", self.space, "--loop", "5,6,7", "--filtration", "1,2;1"),
        ):
            code, _ = self.run_command(*argv)
            self.assertEqual(code, EXIT_INPUT, argv)

    def test_lift(self):
        space = self.write("square.json", space_to_json(*square()))
        loop = self.write("loop.json", {"base": 1, "edges": [1, 2, 3, 4]})
        document = self.run_json("lift", space, "--loop-file", loop)
        self.assertFalse(document["closes"])
        self.assertEqual(document["vertices"][-1], "1|g4")
        document = self.run_json(
            "lift", space, "--loop", "1,2,3,4", "--base", "1", "--radius", "12"
        )
        self.assertEqual(document["vertices"][-1], "1|g4")
        code, _ = self.run_command("lift", space, "--loop-file", loop, "--radius", "2")
        self.assertEqual(code, EXIT_INPUT)

    def test_lift_uses_the_base_point(self):
        space = self.write("square.json", space_to_json(*square()))
        loop = self.write("loop.json", {"base": 1, "start": 2, "edges": [2, 3, 4, 1]})
        document = self.run_json("lift", space, "--loop-file", loop, "--radius", "5")
        self.assertEqual(document["base"], 1)
        self.assertEqual(document["vertices"][0], "2|1")
        self.assertEqual(document["vertices"][-1], "2|g4")
        # the lift ends at depth 5 from the root over the base point
        code, _ = self.run_command("lift", space, "--loop-file", loop, "--radius", "4")
        self.assertEqual(code, EXIT_INPUT)

    def test_checkmap(self):
        graph, grading = two_triangles()
        filename = self.write("map.json", map_to_json(GradedMap.identity(graph, grading)))
        document = self.run_json("checkmap", filename, "--samples", "5")
        self.assertTrue(document["grade_preserving"]["ok"])
        self.assertTrue(document["tree_portion"]["injective"])
        self.assertTrue(document["injectivity"]["ok"])

    def test_collapse_wire(self):
        document = self.run_json("collapse-wire", self.space, "--samples", "5")
        self.assertEqual(document["wire_edges"], [4])
        self.assertEqual(document["attachments"], {"1": 3, "2": 4})

    def test_errors(self):
        code, _ = self.run_command("validate", os.path.join(self.tmpdir.name, "missing.json"))
        self.assertEqual(code, EXIT_INPUT)
        code, _ = self.run_command("frobnicate")
        self.assertEqual(code, EXIT_INPUT)
        code, _ = self.run_command("quotient", self.space, "--keep", "9")
        self.assertEqual(code, EXIT_INPUT)
        with mock.patch.dict(os.environ, {SEED_VARIABLE: "x"}):
            code, _ = self.run_command("gen", "wedge-arc")
        self.assertEqual(code, EXIT_INPUT)


if __name__ == "__main__":
    unittest.main()
