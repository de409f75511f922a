#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Treegrade is a library for tree-graded finite weighted graphs.
"""
from importlib.metadata import PackageNotFoundError, version

from . import covers, gen, grading, graph, homotopy, io, maps, quotient, utils
from .base import GradedSpace

# define a version variable
try:
    __version__ = version("treegrade")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"
