#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Deterministic example spaces and seeded random graded graphs.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Tuple, Union

import networkx as nx
import numpy as np

from treegrade.grading.pieces import Piece, TreeGrading, canonical_grading
from treegrade.graph.weighted import Edge, EdgePath, Traversal, WeightedGraph, make_graph
from treegrade.maps.graded import GradedMap
from treegrade.utils.misc import (
    TreeGradeInputError,
    TreeGradeInvalidOptionError,
    ensure_rng,
    parse_rational,
)
from treegrade.utils.typing import EdgeId, Vertex

logger = logging.getLogger(__name__)

DEFAULT_SEED: int = 7

# Number of sides of the polygon standing in for a circle. With four equal
# sides the vertex diameter is half the circumference.
CIRCLE_SIDES: int = 4

LAYOUTS = ("chain", "comb")

Space = Tuple[WeightedGraph, TreeGrading]


def triangle_chain(
    k: int,
    circumference: Union[str, int, Fraction] = 3,
    bridge: Union[str, int, Fraction] = 1,
    layout: str = "chain",
) -> Space:
    """
    Triangles joined by bridges.

    Triangle i (counting from 0) has vertices 3i+1, 3i+2, 3i+3 and edges of
    length `circumference / 3`. In the "chain" layout vertex 3i+3 is joined
    to 3i+4 by a bridge. In the "comb" layout a spine path on the vertices
    3k+1, ..., 4k carries a spoke to vertex 3i+1 of every triangle.

    Parameters
    ----------
    k : int
        Number of triangles (k >= 1).
    circumference : rational
        Circumference of every triangle.
    bridge : rational
        Length of bridges, spine edges and spokes.
    layout : {"chain", "comb"}
        How the triangles are attached.

    Returns
    -------
    graph : WeightedGraph
        The graph. `triangle_chain(2)` is the two-triangle graph G2.
    grading : TreeGrading
        The canonical grading (one piece per triangle).
    """
    if k < 1:
        raise TreeGradeInputError("a triangle chain needs at least one triangle")
    if layout not in LAYOUTS:
        raise TreeGradeInvalidOptionError("layout", LAYOUTS, layout)
    side = parse_rational(circumference) / 3
    bridge_length = parse_rational(bridge)
    if side <= 0 or bridge_length <= 0:
        raise TreeGradeInputError("lengths must be positive")

    vertices: List[Vertex] = list(range(1, 3 * k + 1))
    edges: List[Tuple[EdgeId, Vertex, Vertex, Fraction]] = []

    def add(u: Vertex, v: Vertex, length: Fraction) -> None:
        edges.append((len(edges) + 1, u, v, length))

    for i in range(k):
        a, b, c = 3 * i + 1, 3 * i + 2, 3 * i + 3
        add(a, b, side)
        add(b, c, side)
        add(c, a, side)
        if layout == "chain" and i < k - 1:
            add(c, c + 1, bridge_length)

    if layout == "comb":
        spine = list(range(3 * k + 1, 4 * k + 1))
        vertices.extend(spine)
        for u, v in zip(spine, spine[1:]):
            add(u, v, bridge_length)
        for i, anchor in enumerate(spine):
            add(anchor, 3 * i + 1, bridge_length)

    graph = make_graph(vertices, edges)
    return graph, canonical_grading(graph)


def shrinking_circles(k: int, shrinking: bool = False) -> Space:
    """
    A segment with a circle hung at each of the points 1, 1/2, ..., 1/k.

    Vertex n (1 <= n <= k) is the point 1/n of the segment and vertex 0 is
    its end 0. Circle n is a square attached at vertex n; its circumference
    is 1, or 1/n in the shrinking variant. Segment edges have ids 1..k,
    circle n has ids k + 4(n-1) + 1 .. k + 4n.

    Returns
    -------
    graph : WeightedGraph
        The graph.
    grading : TreeGrading
        The canonical grading plus the degenerate piece {0}, numbered by
        ascending smallest vertex (so {0} is piece 1 and circle n is
        piece n + 1).
    """
    if k < 1:
        raise TreeGradeInputError("at least one circle is needed")

    vertices: List[Vertex] = list(range(0, k + 1))
    edges: List[Tuple[EdgeId, Vertex, Vertex, Fraction]] = []
    for n in range(1, k + 1):
        if n < k:
            edges.append((n, n, n + 1, Fraction(1, n) - Fraction(1, n + 1)))
        else:
            edges.append((n, n, 0, Fraction(1, k)))

    next_vertex = k + 1
    for n in range(1, k + 1):
        circumference = Fraction(1, n) if shrinking else Fraction(1)
        side = circumference / CIRCLE_SIDES
        ring = [n] + list(range(next_vertex, next_vertex + CIRCLE_SIDES - 1))
        next_vertex += CIRCLE_SIDES - 1
        vertices.extend(ring[1:])
        for j in range(CIRCLE_SIDES):
            edge_id = k + CIRCLE_SIDES * (n - 1) + j + 1
            edges.append((edge_id, ring[j], ring[(j + 1) % CIRCLE_SIDES], side))

    graph = make_graph(vertices, edges)
    grading = canonical_grading(graph).with_pieces([Piece.point(0, 0)]).renumbered()
    return graph, grading


def shrinking_circles_bijection(k: int) -> GradedMap:
    """
    The grade-preserving bijection from the fixed-circumference space onto
    the shrinking one, identity on vertex and edge ids.
    """
    source, source_grading = shrinking_circles(k, shrinking=False)
    target, target_grading = shrinking_circles(k, shrinking=True)
    return GradedMap(
        source,
        source_grading,
        target,
        target_grading,
        {v: v for v in source.vertices},
        {e.id: EdgePath(e.u, (Traversal(e.id, True),)) for e in source.edges},
    )


@dataclass(frozen=True)
class CyclicCover(object):
    """
    A cyclic cover given by a voltage assignment.

    Edge e from u to v with voltage a lifts on sheet i to an edge from
    (u, i) to (v, i + a mod degree).

    Attributes
    ----------
    graph : WeightedGraph
        The covering graph.
    degree : int
        Number of sheets.
    voltages : dict
        Base edge id -> voltage.
    vertex_projection : dict
        Cover vertex -> base vertex.
    edge_projection : dict
        Cover edge id -> base edge id.
    """

    graph: WeightedGraph
    degree: int
    voltages: Dict[EdgeId, int]
    vertex_projection: Dict[Vertex, Vertex]
    edge_projection: Dict[EdgeId, EdgeId]

    def voltage(self, path: EdgePath) -> int:
        """
        Net voltage of a base path. A base loop lifts to a closed loop
        exactly when this is 0.
        """
        total = 0
        for step in path.steps:
            value = self.voltages.get(step.edge, 0)
            total += value if step.forward else -value
        return total % self.degree

    def fiber(self, vertex: Vertex) -> List[Vertex]:
        return [v for v, base in self.vertex_projection.items() if base == vertex]

    def preimage_edges(self, edge_ids) -> List[EdgeId]:
        wanted = set(edge_ids)
        return sorted(e for e, base in self.edge_projection.items() if base in wanted)


def cyclic_cover(
    graph: WeightedGraph, voltages: Mapping[EdgeId, int], degree: int
) -> CyclicCover:
    """
    The `degree`-sheeted cyclic cover of `graph` for the given voltages.

    Integer vertices (v, i) are numbered v + i * (max(v) - min(v) + 1),
    other vertices are named "v.i". Edge (e, i) gets the id e + i * max(e).
    """
    if degree < 1:
        raise TreeGradeInputError("degree must be positive")
    for edge_id in voltages:
        graph.edge(edge_id)

    integer_vertices = all(isinstance(v, int) for v in graph.vertices)
    vertex_offset = max(graph.vertices) - min(graph.vertices) + 1 if integer_vertices else 0
    edge_offset = max(graph.edge_ids) if graph.n_edges else 0

    def lift(vertex: Vertex, sheet: int) -> Vertex:
        if integer_vertices:
            return vertex + sheet * vertex_offset
        return f"{vertex}.{sheet}"

    vertex_projection = {
        lift(v, i): v for i in range(degree) for v in graph.vertices
    }
    if len(vertex_projection) != degree * graph.n_vertices:
        raise TreeGradeInputError("vertex ids do not admit sheet numbering")
    edges = []
    edge_projection = {}
    for i in range(degree):
        for edge in graph.edges:
            shift = voltages.get(edge.id, 0)
            lifted_id = edge.id + i * edge_offset
            edges.append(
                Edge(lifted_id, lift(edge.u, i), lift(edge.v, (i + shift) % degree), edge.length)
            )
            edge_projection[lifted_id] = edge.id
    cover = WeightedGraph(vertex_projection.keys(), edges, connected=False)
    logger.debug("%d-sheeted cover with %d vertices", degree, cover.n_vertices)
    return CyclicCover(
        graph=cover,
        degree=degree,
        voltages={e: int(a) % degree for e, a in voltages.items()},
        vertex_projection=vertex_projection,
        edge_projection=edge_projection,
    )


def wedge_arc() -> Tuple[WeightedGraph, TreeGrading, CyclicCover]:
    """
    Two unit triangles joined by an arc, with its double cover in which
    each triangle is covered by a single hexagon.

    The base is `triangle_chain(2)`. Both generators (edges 3 and 7) carry
    voltage 1, so the cover corresponds to the index-2 subgroup of words of
    even length. The cover is 2-edge-connected: its canonical grading has a
    single piece.
    """
    graph, grading = triangle_chain(2)
    cover = cyclic_cover(graph, {3: 1, 7: 1}, 2)
    return graph, grading, cover


def random_space(
    seed: Union[int, np.random.RandomState] = DEFAULT_SEED,
    n_vertices: int = 8,
    n_edges: int = 10,
    length_bound: int = 1,
) -> Space:
    """
    A random connected multigraph with its canonical grading.

    A uniform random labelled spanning tree (decoded from a Prüfer
    sequence) is completed by uniform extra edges between distinct
    vertices. Lengths are uniform over 1..`length_bound`. Vertices are
    1..n; tree edges come first in sorted order.

    Parameters
    ----------
    seed : int or np.random.RandomState
        Seed; equal seeds give equal spaces.
    n_vertices, n_edges : int
        Size of the graph (`n_edges >= n_vertices - 1`).
    length_bound : int
        Largest edge length.

    Returns
    -------
    graph : WeightedGraph
        The graph (no self-loops).
    grading : TreeGrading
        Its canonical grading.
    """
    if n_vertices < 1:
        raise TreeGradeInputError("at least one vertex is needed")
    if n_edges < n_vertices - 1:
        raise TreeGradeInputError(
            f"{n_edges} edges cannot connect {n_vertices} vertices"
        )
    if n_vertices == 1 and n_edges > 0:
        raise TreeGradeInputError("a single vertex admits no edge without self-loops")
    if length_bound < 1:
        raise TreeGradeInputError("length bound must be at least 1")
    rng = ensure_rng(seed)

    if n_vertices == 1:
        pairs: List[Tuple[int, int]] = []
    elif n_vertices == 2:
        pairs = [(0, 1)]
    else:
        sequence = rng.randint(0, n_vertices, size=n_vertices - 2).tolist()
        tree = nx.from_prufer_sequence(sequence)
        pairs = sorted(tuple(sorted(pair)) for pair in tree.edges())
    for _ in range(n_edges - len(pairs)):
        u, v = sorted(rng.choice(n_vertices, size=2, replace=False).tolist())
        pairs.append((u, v))

    lengths = rng.randint(1, length_bound + 1, size=len(pairs)).tolist()
    edges = [
        (i + 1, u + 1, v + 1, length)
        for i, ((u, v), length) in enumerate(zip(pairs, lengths))
    ]
    graph = make_graph(list(range(1, n_vertices + 1)), edges)
    return graph, canonical_grading(graph)


GENERATORS: Dict[str, Callable[..., Any]] = {
    "triangle-chain": triangle_chain,
    "shrinking-circles": shrinking_circles,
    "wedge-arc": wedge_arc,
    "random": random_space,
}


@dataclass
class SpaceSpec(object):
    """
    A named generator with its parameters.

    Parameters
    ----------
    name : str
        One of `GENERATORS`.
    params : dict
        Keyword arguments of the generator.
    """

    name: str
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.name not in GENERATORS:
            raise TreeGradeInvalidOptionError("generator", list(GENERATORS), self.name)

    def build(self) -> Space:
        """
        Run the generator; the wedge-arc cover data is dropped.
        """
        try:
            result = GENERATORS[self.name](**self.params)
        except TypeError as exc:
            raise TreeGradeInputError(f"bad parameters for {self.name}: {exc}")
        return result[0], result[1]


if __name__ == "__main__":  # pragma: no cover
    pass
