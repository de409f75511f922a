#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Graphviz DOT export.
"""
from typing import Dict, List, Optional

from treegrade.covers.ball import CoverBall, format_cover_vertex
from treegrade.grading.parameterization import Parameterization
from treegrade.grading.pieces import TreeGrading
from treegrade.graph.weighted import WeightedGraph
from treegrade.utils.misc import format_rational
from treegrade.utils.typing import PieceId

PALETTE = (
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan",
)


def _quote(value) -> str:
    return '"' + str(value).replace('"', '\\"') + '"'


def graph_to_dot(
    graph: WeightedGraph,
    grading: Optional[TreeGrading] = None,
    name: str = "X",
) -> str:
    """
    DOT text of a graph; with a grading, piece edges and vertices are
    coloured by piece.
    """
    colour: Dict[PieceId, str] = {}
    if grading is not None:
        for i, piece in enumerate(grading.pieces):
            colour[piece.id] = PALETTE[i % len(PALETTE)]

    lines = [f"graph {_quote(name)} {{"]
    for vertex in graph.vertices:
        attributes = ""
        owner = grading.piece_of_vertex(vertex) if grading is not None else None
        if owner is not None:
            attributes = f' [color={colour[owner]}, xlabel="P{owner}"]'
        lines.append(f"    {_quote(vertex)}{attributes};")
    for edge in graph.edges:
        label = f"e{edge.id} ({format_rational(edge.length)})"
        attributes = [f"label={_quote(label)}"]
        owner = grading.piece_of_edge(edge.id) if grading is not None else None
        if owner is not None:
            attributes.append(f"color={colour[owner]}")
        lines.append(f"    {_quote(edge.u)} -- {_quote(edge.v)} [{', '.join(attributes)}];")
    lines.append("}")
    return "\n".join(lines)


def parameterization_to_dot(parameterization: Parameterization, name: str = "T") -> str:
    """
    DOT text of a parameterization tree; piece vertices are drawn as boxes.
    """
    tree = parameterization.tree
    lines = [f"graph {_quote(name)} {{"]
    for vertex in tree.vertices:
        shape = "box" if vertex in parameterization.piece_vertices else "circle"
        lines.append(f"    {_quote(vertex)} [shape={shape}];")
    for edge in tree.edges:
        lines.append(f"    {_quote(edge.u)} -- {_quote(edge.v)} [label={_quote(f'e{edge.id}')}];")
    lines.append("}")
    return "\n".join(lines)


def cover_ball_to_dot(ball: CoverBall, name: str = "ball") -> str:
    """
    DOT text of a cover ball; the root is drawn double.
    """
    lines: List[str] = [f"digraph {_quote(name)} {{"]
    for vertex in sorted(ball.vertices(), key=format_cover_vertex):
        shape = "doublecircle" if vertex == ball.root else "ellipse"
        lines.append(f"    {_quote(format_cover_vertex(vertex))} [shape={shape}];")
    lifted = sorted(
        ball.edges(), key=lambda item: (format_cover_vertex(item[0]), item[1])
    )
    for tail, edge_id, head in lifted:
        lines.append(
            f"    {_quote(format_cover_vertex(tail))} -> {_quote(format_cover_vertex(head))}"
            f" [label={_quote(f'e{edge_id}')}];"
        )
    lines.append("}")
    return "\n".join(lines)


if __name__ == "__main__":  # pragma: no cover
    pass
