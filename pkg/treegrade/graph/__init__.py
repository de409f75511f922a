#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Weighted multigraphs, paths, exact distances and cycle structure.
"""
from .algorithms import (
    bridges,
    cycle_rank,
    diameter,
    distance,
    path_diameter,
    two_edge_connected_blocks,
)
from .enumeration import injective_paths, simple_cycles, simple_paths
from .weighted import (
    Edge,
    EdgeLoop,
    EdgePath,
    Traversal,
    WeightedGraph,
    make_graph,
    unit_graph,
)
