#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from .vertex import (
    ReducedVertex,
    TreeVertex,
    canonical_part,
    down_neighbors,
    neighbors,
    random_vertex,
    reduce_vertex,
    up_neighbor,
    vertex_of_matrix,
)
from .quotient import (
    OrbitMatch,
    QuotientGraph,
    Subgroup,
    build_quotient,
    orbit_equal,
    orbit_key,
    orbit_search,
    stabiliser,
    write_adjacency,
    write_manifest,
)
from .spectrum import (
    SpectrumReport,
    adjacency_spectrum,
    symmetrised_adjacency,
)
