#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
JSON documents for graphs, gradings, loops, maps and filtrations.

Rationals are written as "p/q" strings and every document is dumped with
sorted keys, so equal objects give byte-identical text.
"""
from __future__ import annotations

import json
import logging
import os
from typing import Any, Dict, FrozenSet, List, Optional, TextIO, Tuple, Union

from treegrade.grading.pieces import Piece, TreeGrading, canonical_grading
from treegrade.graph.weighted import Edge, EdgePath, WeightedGraph
from treegrade.maps.graded import GradedMap
from treegrade.utils.misc import (
    TreeGradeInputError,
    TreeGradeSchemaError,
    format_rational,
    parse_rational,
    sorted_vertices,
)
from treegrade.utils.typing import PieceId, Vertex

logger = logging.getLogger(__name__)


def dumps(document: Any) -> str:
    return json.dumps(document, sort_keys=True, indent=2)


def load_json(source: Union[str, os.PathLike, TextIO]) -> Any:
    """
    Read a JSON document from a path or an open file.

    Raises
    ------
    TreeGradeSchemaError
        If the text is not valid JSON.
    """
    try:
        if hasattr(source, "read"):
            return json.load(source)
        with open(source, "r") as f:
            return json.load(f)
    except json.JSONDecodeError as exc:
        raise TreeGradeSchemaError("$", f"invalid JSON ({exc.msg} at line {exc.lineno})")
    except OSError as exc:
        raise TreeGradeInputError(f"cannot read {source}: {exc}")


def _require(document: Any, key: str, path: str, kind: Optional[type] = None) -> Any:
    if not isinstance(document, dict):
        raise TreeGradeSchemaError(path, "expected an object")
    if key not in document:
        raise TreeGradeSchemaError(f"{path}.{key}", "missing")
    value = document[key]
    if kind is not None and not isinstance(value, kind):
        raise TreeGradeSchemaError(f"{path}.{key}", f"expected {kind.__name__}")
    return value


def _vertex(value: Any, path: str) -> Vertex:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TreeGradeSchemaError(path, "a vertex id is an integer or a string")
    return value


def _integer(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TreeGradeSchemaError(path, "expected an integer")
    return value


def _resolve_vertex(key: str, graph: WeightedGraph, path: str) -> Vertex:
    # object keys are strings; match them against the graph's vertex ids
    for vertex in graph.vertices:
        if str(vertex) == key:
            return vertex
    raise TreeGradeSchemaError(path, f"unknown vertex {key!r}")


def graph_to_json(graph: WeightedGraph) -> Dict[str, Any]:
    return {
        "vertices": list(graph.vertices),
        "edges": [
            {"id": e.id, "u": e.u, "v": e.v, "len": format_rational(e.length)}
            for e in graph.edges
        ],
    }


def graph_from_json(document: Any, path: str = "$") -> WeightedGraph:
    """
    Parse `{"vertices": [v], "edges": [{"id", "u", "v", "len"}]}`.
    """
    vertices = [
        _vertex(v, f"{path}.vertices[{i}]")
        for i, v in enumerate(_require(document, "vertices", path, list))
    ]
    edges = []
    for i, item in enumerate(_require(document, "edges", path, list)):
        where = f"{path}.edges[{i}]"
        edge_id = _integer(_require(item, "id", where), f"{where}.id")
        u = _vertex(_require(item, "u", where), f"{where}.u")
        v = _vertex(_require(item, "v", where), f"{where}.v")
        raw = _require(item, "len", where)
        try:
            length = parse_rational(raw)
        except TreeGradeInputError as exc:
            raise TreeGradeSchemaError(f"{where}.len", str(exc))
        edges.append(Edge(edge_id, u, v, length))
    try:
        return WeightedGraph(vertices, edges)
    except TreeGradeInputError as exc:
        raise TreeGradeSchemaError(path, str(exc))


def grading_to_json(grading: TreeGrading) -> Dict[str, Any]:
    pieces = []
    for piece in grading.pieces:
        item: Dict[str, Any] = {"id": piece.id, "edges": sorted(piece.edges)}
        if piece.degenerate:
            item["vertex"] = piece.smallest_vertex
        pieces.append(item)
    return {"pieces": pieces}


def grading_from_json(document: Any, graph: WeightedGraph, path: str = "$") -> TreeGrading:
    """
    Parse `{"pieces": [{"id", "edges", "vertex"?}]}` against `graph`.

    A piece with no edges must name its single vertex.
    """
    pieces = []
    for i, item in enumerate(_require(document, "pieces", path, list)):
        where = f"{path}.pieces[{i}]"
        piece_id = _integer(_require(item, "id", where), f"{where}.id")
        edge_ids = [
            _integer(e, f"{where}.edges[{j}]")
            for j, e in enumerate(_require(item, "edges", where, list))
        ]
        for j, edge_id in enumerate(edge_ids):
            if not graph.has_edge(edge_id):
                raise TreeGradeSchemaError(f"{where}.edges[{j}]", f"unknown edge {edge_id}")
        if edge_ids:
            pieces.append(Piece.from_edges(graph, piece_id, edge_ids))
            continue
        vertex = _vertex(_require(item, "vertex", where), f"{where}.vertex")
        if not graph.has_vertex(vertex):
            raise TreeGradeSchemaError(f"{where}.vertex", f"unknown vertex {vertex!r}")
        pieces.append(Piece.point(piece_id, vertex))
    try:
        return TreeGrading(pieces)
    except TreeGradeInputError as exc:
        raise TreeGradeSchemaError(f"{path}.pieces", str(exc))


def space_to_json(graph: WeightedGraph, grading: TreeGrading) -> Dict[str, Any]:
    return {"graph": graph_to_json(graph), "grading": grading_to_json(grading)}


def space_from_json(document: Any, path: str = "$") -> Tuple[WeightedGraph, TreeGrading]:
    """
    Parse `{"graph": ..., "grading": ...}`.

    A bare graph document, or a space without a grading, gets the canonical
    grading.
    """
    if isinstance(document, dict) and "graph" not in document and "vertices" in document:
        graph = graph_from_json(document, path)
    else:
        graph = graph_from_json(_require(document, "graph", path), f"{path}.graph")
    if isinstance(document, dict) and "grading" in document:
        grading = grading_from_json(document["grading"], graph, f"{path}.grading")
    else:
        logger.info("no grading given, using the canonical grading")
        grading = canonical_grading(graph)
    return graph, grading


def loop_to_json(path: EdgePath, base: Optional[Vertex] = None) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "base": path.start if base is None else base,
        "edges": path.tokens(),
    }
    if base is not None and base != path.start:
        document["start"] = path.start
    return document


def loop_from_json(
    document: Any, graph: WeightedGraph, path: str = "$"
) -> Tuple[EdgePath, Vertex]:
    """
    Parse `{"base": v, "start": v?, "edges": [token]}`.

    Returns
    -------
    loop : EdgePath
        The path, starting at "start" (default: the base point).
    base : Vertex
        The base point.
    """
    base = _vertex(_require(document, "base", path), f"{path}.base")
    start = _vertex(document.get("start", base), f"{path}.start")
    tokens = _require(document, "edges", path, list)
    for i, token in enumerate(tokens):
        if isinstance(token, bool) or not isinstance(token, (int, str)):
            raise TreeGradeSchemaError(f"{path}.edges[{i}]", "a token is an edge id or '~id'")
    if not graph.has_vertex(base):
        raise TreeGradeSchemaError(f"{path}.base", f"unknown vertex {base!r}")
    try:
        loop = EdgePath.from_tokens(graph, start, tokens)
    except TreeGradeInputError as exc:
        raise TreeGradeSchemaError(f"{path}.edges", str(exc))
    return loop, base


def map_to_json(f: GradedMap) -> Dict[str, Any]:
    return {
        "source": space_to_json(f.source, f.source_grading),
        "target": space_to_json(f.target, f.target_grading),
        "vertex_map": {str(v): f(v) for v in f.source.vertices},
        "edge_map": {str(e): f.edge_map[e].tokens() for e in f.source.edge_ids},
    }


def map_from_json(document: Any, path: str = "$") -> GradedMap:
    """
    Parse `{"source", "target", "vertex_map", "edge_map"}`.

    Edge images are token lists starting at the image of the edge's tail.
    """
    source, source_grading = space_from_json(_require(document, "source", path), f"{path}.source")
    target, target_grading = space_from_json(_require(document, "target", path), f"{path}.target")

    vertex_map = {}
    raw_vertices = _require(document, "vertex_map", path, dict)
    for key, value in raw_vertices.items():
        where = f"{path}.vertex_map.{key}"
        vertex = _resolve_vertex(key, source, where)
        image = _resolve_vertex(str(_vertex(value, where)), target, where)
        vertex_map[vertex] = image

    edge_map = {}
    raw_edges = _require(document, "edge_map", path, dict)
    for key, tokens in raw_edges.items():
        where = f"{path}.edge_map.{key}"
        try:
            edge = source.edge(int(key))
        except (ValueError, TreeGradeInputError):
            raise TreeGradeSchemaError(where, f"unknown edge {key!r}")
        if not isinstance(tokens, list):
            raise TreeGradeSchemaError(where, "expected a list of tokens")
        if edge.u not in vertex_map:
            raise TreeGradeSchemaError(f"{path}.vertex_map", f"vertex {edge.u!r} has no image")
        try:
            edge_map[edge.id] = EdgePath.from_tokens(target, vertex_map[edge.u], tokens)
        except TreeGradeInputError as exc:
            raise TreeGradeSchemaError(where, str(exc))

    try:
        return GradedMap(source, source_grading, target, target_grading, vertex_map, edge_map)
    except TreeGradeInputError as exc:
        raise TreeGradeSchemaError(path, str(exc))


def filtration_from_json(document: Any, path: str = "$") -> List[FrozenSet[PieceId]]:
    if not isinstance(document, list):
        raise TreeGradeSchemaError(path, "a filtration is a list of piece-id lists")
    levels = []
    for i, level in enumerate(document):
        if not isinstance(level, list):
            raise TreeGradeSchemaError(f"{path}[{i}]", "expected a list of piece ids")
        levels.append(frozenset(_integer(p, f"{path}[{i}][{j}]") for j, p in enumerate(level)))
    return levels


def filtration_to_json(levels: List[FrozenSet[PieceId]]) -> List[List[PieceId]]:
    return [sorted(level) for level in levels]


def vertex_map_to_json(vertex_map: Dict[Vertex, Vertex]) -> Dict[str, Vertex]:
    return {str(v): vertex_map[v] for v in sorted_vertices(vertex_map)}


if __name__ == "__main__":  # pragma: no cover
    pass
