#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Reduced words in free groups and normal forms in free products.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Tuple

from treegrade.utils.misc import TreeGradeInputError
from treegrade.utils.typing import EdgeId, Letter, PieceId

# A letter tagged with the free factor it belongs to.
TaggedLetter = Tuple[PieceId, EdgeId, int]


def invert_letter(letter: Letter) -> Letter:
    generator, exponent = letter
    return generator, -exponent


def free_reduce(letters: Iterable[Letter]) -> List[Letter]:
    """
    Freely reduce a word given as `(generator, exponent)` letters.
    """
    stack: List[Letter] = []
    for generator, exponent in letters:
        if exponent not in (1, -1):
            raise TreeGradeInputError(f"exponent {exponent} of {generator!r} is not +1 or -1")
        if stack and stack[-1] == (generator, -exponent):
            stack.pop()
        else:
            stack.append((generator, exponent))
    return stack


def invert_word(letters: Sequence[Letter]) -> List[Letter]:
    return [invert_letter(letter) for letter in reversed(letters)]


def format_letter(letter: Letter) -> str:
    generator, exponent = letter
    name = f"g{generator}" if isinstance(generator, int) else str(generator)
    return name if exponent == 1 else f"{name}^-1"


@dataclass(frozen=True)
class Syllable(object):
    """
    A maximal block of letters from one free factor.

    Attributes
    ----------
    piece : int
        Id of the piece whose fundamental group is the factor.
    letters : tuple
        A non-empty freely reduced word over that piece's generators.
    """

    piece: PieceId
    letters: Tuple[Letter, ...]

    def __str__(self) -> str:
        return f"(P{self.piece}: {' '.join(format_letter(l) for l in self.letters)})"


@dataclass(frozen=True)
class FreeProductWord(object):
    """
    Normal form of an element of the free product of the pieces'
    fundamental groups.

    Adjacent syllables belong to distinct pieces; the empty word is the
    identity.
    """

    syllables: Tuple[Syllable, ...] = ()

    @classmethod
    def from_tagged(cls, tagged: Iterable[TaggedLetter]) -> FreeProductWord:
        """
        Normal form of a product of tagged letters.

        Generators are global (each belongs to one piece), so free reduction
        of the flat word followed by grouping yields the normal form.
        """
        owner: Dict[EdgeId, PieceId] = {}
        letters = []
        for piece, generator, exponent in tagged:
            if owner.setdefault(generator, piece) != piece:
                raise TreeGradeInputError(
                    f"generator {generator!r} is tagged with pieces {owner[generator]} and {piece}"
                )
            letters.append((generator, exponent))
        reduced = free_reduce(letters)

        syllables: List[Syllable] = []
        block: List[Letter] = []
        current = None
        for generator, exponent in reduced:
            piece = owner[generator]
            if block and piece != current:
                syllables.append(Syllable(current, tuple(block)))
                block = []
            current = piece
            block.append((generator, exponent))
        if block:
            syllables.append(Syllable(current, tuple(block)))
        return cls(tuple(syllables))

    @classmethod
    def identity(cls) -> FreeProductWord:
        return cls(())

    def tagged(self) -> List[TaggedLetter]:
        return [(s.piece, g, e) for s in self.syllables for g, e in s.letters]

    def letters(self) -> List[Letter]:
        return [letter for s in self.syllables for letter in s.letters]

    @property
    def is_identity(self) -> bool:
        return len(self.syllables) == 0

    @property
    def pieces(self) -> FrozenSet[PieceId]:
        return frozenset(s.piece for s in self.syllables)

    @property
    def length(self) -> int:
        return sum(len(s.letters) for s in self.syllables)

    def inverse(self) -> FreeProductWord:
        return FreeProductWord.from_tagged(
            (piece, g, -e) for piece, g, e in reversed(self.tagged())
        )

    def __mul__(self, other: FreeProductWord) -> FreeProductWord:
        return FreeProductWord.from_tagged(self.tagged() + other.tagged())

    def project(self, keep: Iterable[PieceId]) -> FreeProductWord:
        """
        Image under the homomorphism killing every factor outside `keep`.
        """
        keep_ids = frozenset(keep)
        return FreeProductWord.from_tagged(t for t in self.tagged() if t[0] in keep_ids)

    def to_json(self) -> List[Dict[str, Any]]:
        return [
            {"piece": s.piece, "letters": [[g, e] for g, e in s.letters]}
            for s in self.syllables
        ]

    def __str__(self) -> str:
        if self.is_identity:
            return "1"
        return "".join(str(s) for s in self.syllables)


if __name__ == "__main__":  # pragma: no cover
    pass
