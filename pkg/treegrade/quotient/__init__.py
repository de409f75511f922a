#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Metric quotients, the chain pseudometric and canonical retractions.
"""
from .metric import (
    MetricQuotient,
    bonding_map,
    chain_pseudometric_oracle,
    compose_vertex_maps,
    metric_quotient,
)
from .retraction import (
    Retraction,
    check_retraction_hypothesis,
    complement_components,
    piece_retraction,
    piece_subgraph,
    retraction,
    separation_points,
)
