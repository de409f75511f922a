#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
This module contains aliases for typing
"""
from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, Tuple, Union

# Vertex ids are integers in user input; contraction and wedge
# vertices are named with strings (e.g. "y3", "w0").
Vertex = Union[int, str]

EdgeId = int

PieceId = int

Rational = Fraction

# A letter of a free-group word: (generator, exponent) with
# exponent in {+1, -1}. Generators are the edge ids of the
# non-tree edges of a spanning structure.
Letter = Tuple[Hashable, int]

VertexMap = Dict[Vertex, Vertex]

PieceSet = FrozenSet[PieceId]
