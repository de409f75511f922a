#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Exhaustive enumeration of injective paths and simple cycles.

These routines are exponential and meant for small graphs: they serve as
brute-force oracles for the metric, bridge and grading computations.
"""
from typing import FrozenSet, Iterator, List, Optional, Set

from treegrade.graph.weighted import EdgePath, Traversal, WeightedGraph
from treegrade.utils.typing import EdgeId, Vertex


def _extend(
    graph: WeightedGraph,
    current: Vertex,
    visited: Set[Vertex],
    steps: List[Traversal],
    max_length: Optional[int],
) -> Iterator[List[Traversal]]:
    yield steps
    if max_length is not None and len(steps) >= max_length:
        return
    for step in graph.incident(current):
        nxt = graph.traverse(current, step)
        if nxt in visited:
            continue
        visited.add(nxt)
        steps.append(step)
        yield from _extend(graph, nxt, visited, steps, max_length)
        steps.pop()
        visited.remove(nxt)


def injective_paths(
    graph: WeightedGraph,
    start: Optional[Vertex] = None,
    max_length: Optional[int] = None,
) -> Iterator[EdgePath]:
    """
    All paths visiting pairwise distinct vertices (constant paths included).

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    start : Vertex, optional
        Restrict to paths starting here.
    max_length : int, optional
        Maximal number of traversals.
    """
    starts = graph.vertices if start is None else (start,)
    for s in starts:
        for steps in _extend(graph, s, {s}, [], max_length):
            yield EdgePath(start=s, steps=tuple(steps))


def simple_paths(graph: WeightedGraph, u: Vertex, v: Vertex) -> Iterator[EdgePath]:
    """
    All injective paths from `u` to `v`.
    """
    for path in injective_paths(graph, start=u):
        if path.end(graph) == v:
            yield path


def simple_cycles(graph: WeightedGraph) -> List[FrozenSet[EdgeId]]:
    """
    Edge sets of all simple cycles (self-loops and parallel pairs included).

    A cycle is found once from its smallest vertex, walking only through
    larger vertices; duplicates (the two orientations) are removed by
    keying on the edge set.

    Returns
    -------
    cycles : list of frozenset of int
        Cycles sorted by size, then by sorted edge ids.
    """
    order = {vertex: i for i, vertex in enumerate(graph.vertices)}
    found: Set[FrozenSet[EdgeId]] = set()

    for edge in graph.edges:
        if edge.is_loop:
            found.add(frozenset((edge.id,)))

    def walk(start: Vertex, current: Vertex, visited: Set[Vertex], used: List[EdgeId]):
        for step in graph.incident(current):
            if step.edge in used:
                continue
            edge = graph.edge(step.edge)
            if edge.is_loop:
                continue
            nxt = graph.traverse(current, step)
            if nxt == start and used:
                found.add(frozenset(used + [step.edge]))
                continue
            if nxt in visited or order[nxt] < order[start]:
                continue
            visited.add(nxt)
            used.append(step.edge)
            walk(start, nxt, visited, used)
            used.pop()
            visited.remove(nxt)

    for start in graph.vertices:
        walk(start, start, {start}, [])

    return sorted(found, key=lambda cycle: (len(cycle), sorted(cycle)))


if __name__ == "__main__":  # pragma: no cover
    pass
