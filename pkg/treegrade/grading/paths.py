#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
How paths meet the pieces and the tree-portion of a graded graph.
"""
from typing import Dict, List

from treegrade.grading.pieces import TreeGrading
from treegrade.graph.weighted import EdgePath, WeightedGraph
from treegrade.utils.typing import PieceId


def piece_visits(
    graph: WeightedGraph, grading: TreeGrading, path: EdgePath
) -> Dict[PieceId, List[int]]:
    """
    Indices of the visited vertex sequence lying in each piece.
    """
    visits: Dict[PieceId, List[int]] = {}
    for index, vertex in enumerate(graph.path_vertices(path)):
        piece_id = grading.piece_of_vertex(vertex)
        if piece_id is not None:
            visits.setdefault(piece_id, []).append(index)
    return visits


def piece_visits_contiguous(
    graph: WeightedGraph, grading: TreeGrading, path: EdgePath
) -> bool:
    """
    Whether the visits of `path` to every piece form one block of
    consecutive indices.

    Injective paths always satisfy this for a valid grading.
    """
    for indices in piece_visits(graph, grading, path).values():
        if indices[-1] - indices[0] + 1 != len(indices):
            return False
    return True


def tree_runs(
    graph: WeightedGraph, grading: TreeGrading, path: EdgePath
) -> List[List[int]]:
    """
    Split a path into its tree-portion excursions.

    A run is a maximal block of consecutive tree-portion steps whose
    interior vertices avoid the piece-portion. Runs are returned as lists of
    step indices.
    """
    visited = graph.path_vertices(path)
    pieces = grading.piece_vertices
    runs: List[List[int]] = []
    current: List[int] = []
    for index, step in enumerate(path.steps):
        if grading.piece_of_edge(step.edge) is not None:
            if current:
                runs.append(current)
            current = []
            continue
        if current and visited[index] in pieces:
            runs.append(current)
            current = []
        current.append(index)
    if current:
        runs.append(current)
    return runs


def is_tree_efficient(
    graph: WeightedGraph, grading: TreeGrading, path: EdgePath
) -> bool:
    """
    Whether every tree-portion excursion of `path` is an injective arc.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    grading : TreeGrading
        Its grading.
    path : EdgePath
        The path to test.

    Returns
    -------
    efficient : bool
        True if the visited vertices of each run (endpoints included) are
        pairwise distinct.
    """
    visited = graph.path_vertices(path)
    for run in tree_runs(graph, grading, path):
        arc = visited[run[0] : run[-1] + 2]
        if len(set(arc)) != len(arc):
            return False
    return True


if __name__ == "__main__":  # pragma: no cover
    pass
