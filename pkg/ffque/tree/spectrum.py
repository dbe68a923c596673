#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Dict,
    List,
)

import logging
import math
from dataclasses import dataclass

import numpy as np

from .quotient import QuotientGraph

log = logging.getLogger(__name__)

# eigenvalues this close to a band edge count as inside
_EDGE_TOL = 1e-9


@dataclass(frozen=True)
class SpectrumReport(object):
    """
    Adjacency spectrum of a truncated quotient, partitioned against the Ramanujan band [-2 sqrt(q), 2 sqrt(q)]

    Attributes:
        q: field size
        eigenvalues: sorted eigenvalues of the symmetrised weighted adjacency matrix
        below: count in [-(q+1), -2 sqrt(q))
        inside: count in [-2 sqrt(q), 2 sqrt(q)]
        above: count in (2 sqrt(q), q+1]
        perron_ok: every eigenvalue lies in [-(q+1), q+1]
    """
    q: int
    eigenvalues: List[float]
    below: int
    inside: int
    above: int
    perron_ok: bool

    @property
    def fraction_inside(self) -> float:
        return self.inside / len(self.eigenvalues) if self.eigenvalues else 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "eigenvalues": self.eigenvalues,
            "bands": {"below": self.below, "inside": self.inside, "above": self.above},
            "fraction_inside": self.fraction_inside,
            "perron_ok": self.perron_ok,
        }


def symmetrised_adjacency(graph: QuotientGraph) -> np.ndarray:
    """
    S_ij = sqrt(W_ij W_ji), similar to W on the truncation since the orbit measure balances W

    :param graph: quotient graph
    :return:
    """
    w = graph.weight_matrix()
    return np.sqrt(w * w.T)


def adjacency_spectrum(graph: QuotientGraph) -> SpectrumReport:
    """
    Dense eigensolve of the symmetrised adjacency matrix of a truncated quotient

    :param graph: quotient graph
    :return:
    """
    q = graph.q
    values = np.linalg.eigvalsh(symmetrised_adjacency(graph)) if graph.num_vertices else np.zeros(0)
    values = sorted(float(x) for x in values)

    edge = 2 * math.sqrt(q)
    below = sum(1 for x in values if x < -edge - _EDGE_TOL)
    above = sum(1 for x in values if x > edge + _EDGE_TOL)
    perron_ok = all(abs(x) <= q + 1 + _EDGE_TOL for x in values)

    report = SpectrumReport(q, values, below, len(values) - below - above, above, perron_ok)
    log.info(f"Spectrum of {graph.num_vertices} vertices: {report.inside} inside the band, "
             f"{report.below} below, {report.above} above")
    return report
