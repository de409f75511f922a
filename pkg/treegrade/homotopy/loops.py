#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Loop reduction, fundamental group words and the essential-loop decision.

A loop is essential exactly when its image in some quotient keeping
finitely many pieces is essential. The witness returned here is the set of
pieces carrying a syllable of the normal form, and every positive answer is
re-checked by reading the loop again in the quotients keeping the witness
and keeping its complement.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from sympy.combinatorics.free_groups import free_group

from treegrade.grading.pieces import TreeGrading
from treegrade.graph.weighted import EdgeLoop, EdgePath, Traversal, WeightedGraph
from treegrade.homotopy.spanning import SpanningStructure
from treegrade.homotopy.words import FreeProductWord
from treegrade.quotient.metric import metric_quotient
from treegrade.utils.misc import TreeGradeInputError, TreeGradeInternalError
from treegrade.utils.typing import PieceId, Vertex

logger = logging.getLogger(__name__)


def as_loop(graph: WeightedGraph, loop: EdgePath) -> EdgeLoop:
    if isinstance(loop, EdgeLoop):
        graph.path_vertices(loop)
        return loop
    return EdgeLoop.close(graph, loop)


def _cancel(steps: Sequence[Traversal]) -> List[Traversal]:
    stack: List[Traversal] = []
    for step in steps:
        if stack and stack[-1] == step.reversed():
            stack.pop()
        else:
            stack.append(step)
    return stack


def tree_efficient_reduce(
    graph: WeightedGraph, grading: TreeGrading, loop: EdgePath
) -> EdgeLoop:
    """
    Cancel backtracking inside every maximal run of tree-portion edges.

    Piece edges are kept verbatim, so the result is homotopic to the loop
    rel the piece-portion.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    grading : TreeGrading
        Its grading.
    loop : EdgePath
        A closed path.

    Returns
    -------
    reduced : EdgeLoop
        A tree-efficient loop with the same base vertex.
    """
    loop = as_loop(graph, loop)
    steps: List[Traversal] = []
    run: List[Traversal] = []
    for step in loop.steps:
        if grading.piece_of_edge(step.edge) is None:
            run.append(step)
            continue
        steps.extend(_cancel(run))
        run = []
        steps.append(step)
    steps.extend(_cancel(run))
    reduced = EdgeLoop(start=loop.start, steps=tuple(steps))
    graph.path_vertices(reduced)
    return reduced


def loop_word(
    graph: WeightedGraph,
    grading: TreeGrading,
    structure: SpanningStructure,
    loop: EdgePath,
    base: Optional[Vertex] = None,
) -> FreeProductWord:
    """
    Read a loop against the spanning structure.

    Every crossing of a generator edge contributes one letter. A loop not
    based at `base` is conjugated by the in-tree path from `base` to its
    start, which adds no letters.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    grading : TreeGrading
        Its grading.
    structure : SpanningStructure
        Spanning structure of `(graph, grading)`.
    loop : EdgePath
        A closed path.
    base : Vertex, optional
        Base point (defaults to the start of the loop).

    Returns
    -------
    word : FreeProductWord
        The normal form of the loop's class.
    """
    loop = as_loop(graph, loop)
    if base is not None:
        graph.check_vertex(base)
    tagged = []
    for step in loop.steps:
        generator = structure.generators.get(step.edge)
        if generator is not None:
            tagged.append((generator.piece, step.edge, 1 if step.forward else -1))
    return FreeProductWord.from_tagged(tagged)


def project_word(
    graph: WeightedGraph,
    grading: TreeGrading,
    loop: EdgePath,
    keep: Iterable[PieceId],
    base: Optional[Vertex] = None,
) -> FreeProductWord:
    """
    The word of the loop's image in the quotient keeping `keep`, read
    against the spanning structure of the quotient.
    """
    loop = as_loop(graph, loop)
    quotient = metric_quotient(graph, grading, keep)
    projected = quotient.project_path(loop)
    structure = SpanningStructure(quotient.target, quotient.target_grading)
    projected_base = None if base is None else quotient(base)
    return loop_word(
        quotient.target, quotient.target_grading, structure, projected, projected_base
    )


@dataclass(frozen=True)
class EssentialResult(object):
    """
    Outcome of `is_essential`.

    Attributes
    ----------
    essential : bool
        Whether the loop is not null-homotopic.
    witness : frozenset or None
        Pieces whose quotient already sees the loop as essential.
    word : FreeProductWord
        Normal form of the loop.
    conjugated : bool
        True when the loop was moved to the base point along the tree.
    """

    essential: bool
    witness: Optional[FrozenSet[PieceId]]
    word: FreeProductWord
    conjugated: bool = False

    def to_json(self) -> Dict[str, Any]:
        return {
            "essential": self.essential,
            "witness": None if self.witness is None else sorted(self.witness),
            "word": self.word.to_json(),
            "conjugated": self.conjugated,
        }


def is_essential(
    graph: WeightedGraph,
    grading: TreeGrading,
    loop: EdgePath,
    base: Optional[Vertex] = None,
    structure: Optional[SpanningStructure] = None,
    verify: bool = True,
) -> EssentialResult:
    """
    Decide whether a loop is essential, with a finite witness.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    grading : TreeGrading
        A valid grading.
    loop : EdgePath
        A closed path.
    base : Vertex, optional
        Base point (defaults to the start of the loop).
    structure : SpanningStructure, optional
        Reused spanning structure.
    verify : bool
        Re-read the loop in the quotients keeping the witness and its
        complement.

    Returns
    -------
    result : EssentialResult
        Verdict, witness piece set and normal form.
    """
    loop = as_loop(graph, loop)
    if structure is None:
        structure = SpanningStructure(graph, grading)
    word = loop_word(graph, grading, structure, loop, base)
    conjugated = base is not None and base != loop.start
    if word.is_identity:
        return EssentialResult(False, None, word, conjugated)

    witness = word.pieces
    if verify:
        kept = project_word(graph, grading, loop, witness, base)
        if kept != word:
            raise TreeGradeInternalError(
                f"projection keeping {sorted(witness)} gives {kept}, expected {word}"
            )
        others = frozenset(grading.piece_ids) - witness
        killed = project_word(graph, grading, loop, others, base)
        if not killed.is_identity:
            raise TreeGradeInternalError(
                f"projection keeping {sorted(others)} gives {killed}, expected identity"
            )
    return EssentialResult(True, witness, word, conjugated)


def _oracle_tree(graph: WeightedGraph, base: Vertex) -> FrozenSet[int]:
    # depth-first tree, independent of any grading
    nx_graph = graph.nx_graph
    tree = set()
    for u, v in nx.dfs_edges(nx_graph, source=base):
        tree.add(min(nx_graph[u][v]))
    return frozenset(tree)


def oracle_is_essential(
    graph: WeightedGraph, loop: EdgePath, base: Optional[Vertex] = None
) -> bool:
    """
    Structure-blind essential-loop test.

    The loop is read over all edges outside a depth-first spanning tree
    into a free group of `sympy` and compared with the identity.
    """
    loop = as_loop(graph, loop)
    root = loop.start if base is None else base
    graph.check_vertex(root)
    tree = _oracle_tree(graph, root)
    chords = [e for e in graph.edge_ids if e not in tree]
    if not chords:
        return False
    group, *symbols = free_group(", ".join(f"x{e}" for e in chords))
    symbol_of = dict(zip(chords, symbols))
    element = group.identity
    for step in loop.steps:
        if step.edge in symbol_of:
            element = element * (symbol_of[step.edge] ** (1 if step.forward else -1))
    return element != group.identity


@dataclass(frozen=True)
class PhiSequence(object):
    """
    Words of a loop in the quotients along an ascending chain of piece
    sets.

    Attributes
    ----------
    levels : tuple of frozenset
        The chain `F_1, F_2, ...`.
    words : tuple of FreeProductWord
        The word of the loop's image in each quotient.
    """

    levels: Tuple[FrozenSet[PieceId], ...]
    words: Tuple[FreeProductWord, ...]

    def bonding(self, level: int) -> FreeProductWord:
        """
        The word at `level + 1` pushed down to `level`.
        """
        return self.words[level + 1].project(self.levels[level])

    def is_coherent(self) -> bool:
        return all(
            self.bonding(k) == self.words[k] for k in range(len(self.levels) - 1)
        )

    def to_json(self) -> List[Dict[str, Any]]:
        return [
            {"keep": sorted(level), "word": word.to_json()}
            for level, word in zip(self.levels, self.words)
        ]


def check_filtration(
    grading: TreeGrading, filtration: Iterable[Iterable[PieceId]]
) -> Tuple[FrozenSet[PieceId], ...]:
    levels = tuple(grading.check_piece_ids(level) for level in filtration)
    for lower, upper in zip(levels, levels[1:]):
        if not lower <= upper:
            raise TreeGradeInputError(
                f"filtration is not ascending: {sorted(lower)} is not inside {sorted(upper)}"
            )
    return levels


def phi(
    graph: WeightedGraph,
    grading: TreeGrading,
    loop: EdgePath,
    filtration: Iterable[Iterable[PieceId]],
    base: Optional[Vertex] = None,
) -> PhiSequence:
    """
    The coherent sequence of quotient words of a loop.

    Parameters
    ----------
    graph : WeightedGraph
        The graph.
    grading : TreeGrading
        A valid grading.
    loop : EdgePath
        A closed path.
    filtration : iterable of piece id sets
        An ascending chain of piece sets.
    base : Vertex, optional
        Base point.

    Returns
    -------
    sequence : PhiSequence
        Level sets and words, coherent under the bonding maps.
    """
    levels = check_filtration(grading, filtration)
    loop = as_loop(graph, loop)
    words = tuple(project_word(graph, grading, loop, level, base) for level in levels)
    sequence = PhiSequence(levels=levels, words=words)
    if not sequence.is_coherent():
        raise TreeGradeInternalError("quotient words are not coherent under bonding maps")
    return sequence


if __name__ == "__main__":  # pragma: no cover
    pass
