#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Injectivity of homomorphisms between free groups.

The subgroup generated by the images is read off the Stallings graph
obtained by folding a bouquet of image loops. The homomorphism from the
free group of rank r is injective exactly when that subgroup has rank r.
"""
from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Set, Tuple, Union

from sympy import Matrix
from sympy.combinatorics.free_groups import free_group

from treegrade.homotopy.words import free_reduce
from treegrade.utils.misc import TreeGradeInputError
from treegrade.utils.typing import Letter

logger = logging.getLogger(__name__)

WORD_PATTERN = re.compile(r"^[A-Za-z]*$")

# A labelled directed edge (tail, label, head).
LabelledEdge = Tuple[int, Hashable, int]

WordLike = Union[str, Sequence[Letter], Sequence[Sequence]]


def parse_word(word: WordLike) -> List[Letter]:
    """
    Parse a free-group word.

    Strings use one letter per generator, a lower-case letter for the
    generator and the upper-case letter for its inverse (`"aB"` is
    `a b^-1`); `""` and `"1"` are the identity. Sequences of
    `(generator, exponent)` pairs are accepted as they are.
    """
    if isinstance(word, str):
        text = word.strip()
        if text == "1":
            return []
        if not WORD_PATTERN.match(text):
            raise TreeGradeInputError(f"malformed word {word!r}")
        return [(c.lower(), 1 if c.islower() else -1) for c in text]
    letters = []
    for item in word:
        try:
            generator, exponent = item
        except (TypeError, ValueError):
            raise TreeGradeInputError(f"malformed letter {item!r}")
        if exponent not in (1, -1):
            raise TreeGradeInputError(f"malformed letter {item!r}")
        letters.append((generator, int(exponent)))
    return letters


class FoldedGraph(object):
    """
    A folded graph labelled by generators.

    Parameters
    ----------
    words : sequence of words
        Loops at the base point, one per word.

    Attributes
    ----------
    basepoint : int
        Base vertex.
    vertices : frozenset of int
        Vertices after folding.
    edges : frozenset of (tail, label, head)
        Labelled edges after folding.
    n_folds : int
        Number of identifications performed.
    """

    basepoint: int
    vertices: FrozenSet[int]
    edges: FrozenSet[LabelledEdge]
    n_folds: int

    def __init__(self, words: Iterable[Sequence[Letter]]) -> None:
        self.basepoint = 0
        counter = itertools.count(1)
        vertices: Set[int] = {self.basepoint}
        edges: Set[LabelledEdge] = set()
        for letters in words:
            letters = free_reduce(letters)
            if not letters:
                continue
            current = self.basepoint
            for position, (label, exponent) in enumerate(letters):
                nxt = self.basepoint if position == len(letters) - 1 else next(counter)
                vertices.add(nxt)
                edges.add((current, label, nxt) if exponent == 1 else (nxt, label, current))
                current = nxt

        self._parent: Dict[int, int] = {v: v for v in vertices}
        self.n_folds = 0
        self.vertices, self.edges = self._fold(vertices, edges)
        logger.debug(
            "folded graph: %d vertices, %d edges after %d folds",
            len(self.vertices),
            len(self.edges),
            self.n_folds,
        )

    def _find(self, v: int) -> int:
        while self._parent[v] != v:
            self._parent[v] = self._parent[self._parent[v]]
            v = self._parent[v]
        return v

    def _union(self, a: int, b: int) -> bool:
        a, b = self._find(a), self._find(b)
        if a == b:
            return False
        # keep the base point as representative
        if b == self.basepoint or (a != self.basepoint and b < a):
            a, b = b, a
        self._parent[b] = a
        self.n_folds += 1
        return True

    def _fold(
        self, vertices: Set[int], edges: Set[LabelledEdge]
    ) -> Tuple[FrozenSet[int], FrozenSet[LabelledEdge]]:
        changed = True
        while changed:
            changed = False
            edges = {(self._find(s), label, self._find(t)) for s, label, t in edges}
            outgoing: Dict[Tuple[int, Hashable], int] = {}
            incoming: Dict[Tuple[int, Hashable], int] = {}
            for s, label, t in sorted(edges, key=repr):
                if (s, label) in outgoing and self._union(outgoing[(s, label)], t):
                    changed = True
                    break
                outgoing.setdefault((s, label), t)
                if (t, label) in incoming and self._union(incoming[(t, label)], s):
                    changed = True
                    break
                incoming.setdefault((t, label), s)
        return frozenset(self._find(v) for v in vertices), frozenset(edges)

    @property
    def rank(self) -> int:
        """
        Rank of the subgroup carried by the graph.
        """
        return len(self.edges) - len(self.vertices) + 1

    def is_folded(self) -> bool:
        outgoing = {(s, label) for s, label, _ in self.edges}
        incoming = {(t, label) for _, label, t in self.edges}
        return len(outgoing) == len(self.edges) and len(incoming) == len(self.edges)

    def accepts(self, word: WordLike) -> bool:
        """
        Whether the reduced word labels a closed path at the base point,
        i.e. lies in the subgroup.
        """
        current = self.basepoint
        step: Dict[Tuple[int, Hashable, int], int] = {}
        for s, label, t in self.edges:
            step[(s, label, 1)] = t
            step[(t, label, -1)] = s
        for label, exponent in free_reduce(parse_word(word)):
            key = (current, label, exponent)
            if key not in step:
                return False
            current = step[key]
        return current == self.basepoint


def free_hom_injective(rank: int, images: Sequence[WordLike]) -> bool:
    """
    Decide whether the homomorphism sending the i-th free generator to the
    i-th image is injective.

    Parameters
    ----------
    rank : int
        Rank r of the source free group.
    images : sequence of words
        The images of the r generators.

    Returns
    -------
    injective : bool
        True when the folded graph of the images has rank r.
    """
    if rank < 0:
        raise TreeGradeInputError("rank must be non-negative")
    if len(images) != rank:
        raise TreeGradeInputError(f"expected {rank} images, got {len(images)}")
    words = [parse_word(image) for image in images]
    return FoldedGraph(words).rank == rank


def abelianization_rank(images: Sequence[WordLike]) -> int:
    """
    Rank of the images in the abelianization of the target.

    When this equals the number of images the homomorphism is injective;
    a smaller value is inconclusive.
    """
    words = [parse_word(image) for image in images]
    generators = sorted({g for word in words for g, _ in word}, key=repr)
    if not words or not generators:
        return 0
    column = {g: i for i, g in enumerate(generators)}
    rows = []
    for word in words:
        row = [0] * len(generators)
        for generator, exponent in word:
            row[column[generator]] += exponent
        rows.append(row)
    return int(Matrix(rows).rank())


def find_kernel_element(
    rank: int, images: Sequence[WordLike], max_length: int = 6
) -> Optional[List[Letter]]:
    """
    Search for a non-trivial reduced word of the source mapped to the
    identity, by brute force in free groups of `sympy`.

    Returns
    -------
    word : list of (int, int) or None
        A kernel element over the source generators `0 .. rank - 1`, or None
        if there is none up to `max_length`.
    """
    words = [parse_word(image) for image in images]
    if len(words) != rank:
        raise TreeGradeInputError(f"expected {rank} images, got {len(words)}")
    generators = sorted({g for word in words for g, _ in word}, key=repr)
    if not generators:
        return [(0, 1)] if rank > 0 else None
    group, *symbols = free_group(", ".join(f"t{i}" for i in range(len(generators))))
    symbol_of = dict(zip(generators, symbols))
    image_elements = []
    for word in words:
        element = group.identity
        for generator, exponent in word:
            element = element * symbol_of[generator] ** exponent
        image_elements.append(element)

    letters = [(i, e) for i in range(rank) for e in (1, -1)]
    frontier: List[Tuple[List[Letter], object]] = [([], group.identity)]
    for _ in range(max_length):
        extended = []
        for word, element in frontier:
            for generator, exponent in letters:
                if word and word[-1] == (generator, -exponent):
                    continue
                value = element * image_elements[generator] ** exponent
                candidate = word + [(generator, exponent)]
                if value == group.identity:
                    return candidate
                extended.append((candidate, value))
        frontier = extended
    return None


@dataclass(frozen=True)
class InjectivityEvidence(object):
    """
    The three injectivity criteria for one homomorphism.
    """

    rank: int
    folded_rank: int
    abelian_rank: int
    kernel_element: Optional[Tuple[Letter, ...]]

    @property
    def injective(self) -> bool:
        return self.folded_rank == self.rank

    @property
    def consistent(self) -> bool:
        if self.abelian_rank == self.rank and not self.injective:
            return False
        if self.kernel_element is not None and self.injective:
            return False
        return True


def injectivity_evidence(
    rank: int, images: Sequence[WordLike], max_length: int = 6
) -> InjectivityEvidence:
    words = [parse_word(image) for image in images]
    kernel = find_kernel_element(rank, words, max_length)
    return InjectivityEvidence(
        rank=rank,
        folded_rank=FoldedGraph(words).rank,
        abelian_rank=abelianization_rank(words),
        kernel_element=None if kernel is None else tuple(kernel),
    )


if __name__ == "__main__":  # pragma: no cover
    pass
