#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Metric and cycle-structure algorithms on weighted graphs.
"""
import itertools
import logging
from collections import Counter
from fractions import Fraction
from typing import FrozenSet, List

import networkx as nx

from treegrade.graph.weighted import EdgePath, WeightedGraph
from treegrade.utils.misc import TreeGradeInputError, vertex_sort_key
from treegrade.utils.typing import EdgeId, Vertex

logger = logging.getLogger(__name__)


def distance(graph: WeightedGraph, u: Vertex, v: Vertex) -> Fraction:
    """
    Exact shortest-path distance between two vertices.

    Parameters
    ----------
    graph : WeightedGraph
        A connected graph.
    u, v : Vertex
        Vertices of `graph`.

    Returns
    -------
    d : Fraction
        The length metric d(u, v).
    """
    return graph.distance(u, v)


def diameter(graph: WeightedGraph, vertices) -> Fraction:
    """
    Diameter of a vertex set under the length metric of `graph`.
    """
    vertex_list = list(dict.fromkeys(vertices))
    best = Fraction(0)
    for a, b in itertools.combinations(vertex_list, 2):
        d = graph.distance(a, b)
        if d > best:
            best = d
    return best


def path_diameter(graph: WeightedGraph, path: EdgePath) -> Fraction:
    """
    Diameter of the set of vertices visited by `path`.

    Parameters
    ----------
    graph : WeightedGraph
        The ambient graph.
    path : EdgePath
        A path valid in `graph`.

    Returns
    -------
    diam : Fraction
        Maximum pairwise distance over the visited vertices (0 for a
        constant path).
    """
    return diameter(graph, graph.path_vertices(path))


def bridges(graph: WeightedGraph) -> FrozenSet[EdgeId]:
    """
    Edges whose removal disconnects the graph.

    Self-loops and parallel edges are never bridges. networkx only finds
    bridges of simple graphs, so parallel classes are collapsed first and
    any class with more than one edge is discarded.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.

    Returns
    -------
    bridge_ids : frozenset of int
        Ids of the bridge edges.
    """
    multiplicity = Counter()
    simple = nx.Graph()
    simple.add_nodes_from(graph.vertices)
    for edge in graph.edges:
        if edge.is_loop:
            continue
        multiplicity[frozenset((edge.u, edge.v))] += 1
        simple.add_edge(edge.u, edge.v)

    bridge_pairs = {frozenset(pair) for pair in nx.bridges(simple)}
    return frozenset(
        edge.id
        for edge in graph.edges
        if not edge.is_loop
        and multiplicity[frozenset((edge.u, edge.v))] == 1
        and frozenset((edge.u, edge.v)) in bridge_pairs
    )


def cycle_rank(graph: WeightedGraph) -> int:
    """
    Rank of the free fundamental group of a connected graph,
    |E| - |V| + 1.
    """
    if not graph.is_connected():
        raise TreeGradeInputError("cycle rank requires a connected graph")
    return graph.n_edges - graph.n_vertices + 1


def two_edge_connected_blocks(graph: WeightedGraph) -> List[FrozenSet[EdgeId]]:
    """
    Edge sets of the connected components of the non-bridge subgraph.

    Components without edges are omitted. Blocks are ordered by their
    smallest vertex id.
    """
    bridge_ids = bridges(graph)
    cyclic = nx.MultiGraph()
    for edge in graph.edges:
        if edge.id not in bridge_ids:
            cyclic.add_edge(edge.u, edge.v, key=edge.id)

    blocks = []
    for component in nx.connected_components(cyclic):
        edge_ids = frozenset(
            key for _, _, key in cyclic.subgraph(component).edges(keys=True)
        )
        smallest = min(component, key=vertex_sort_key)
        blocks.append((vertex_sort_key(smallest), edge_ids))
    blocks.sort(key=lambda item: item[0])
    logger.debug("found %d two-edge-connected blocks", len(blocks))
    return [edge_ids for _, edge_ids in blocks]


if __name__ == "__main__":  # pragma: no cover
    pass
