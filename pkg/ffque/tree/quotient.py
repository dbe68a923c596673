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
    Optional,
    Tuple,
)

import collections
import enum
import logging
from dataclasses import (
    dataclass,
    field,
)
from pathlib import Path

import networkx as nx
import numpy as np
import orjson

from ffque.arith import (
    Poly,
    PolyMatrix,
    bounded_elements,
    enumerate_up_to,
    pgl2_constant,
)
from ffque.config import CONFIG as C
from ffque.exceptions import (
    DomainError,
    ResourceError,
)
from .vertex import (
    TreeVertex,
    neighbors,
    reduce_vertex,
    vertex_of_matrix,
)

log = logging.getLogger(__name__)

TKey = Tuple[Any, ...]


class Subgroup(enum.Enum):
    UNKNOWN = 0
    GAMMA0 = enum.auto()
    GAMMA = enum.auto()


def _member(m: PolyMatrix, level: Poly, subgroup: Subgroup) -> bool:
    if subgroup == Subgroup.GAMMA0:
        return m.in_gamma0(level)
    if subgroup == Subgroup.GAMMA:
        return m.in_gamma(level)
    raise DomainError(f"unsupported subgroup {subgroup}")


def _inverse_mod(x: Poly, modulus: Poly) -> Poly:
    g, s, _ = x.xgcd(modulus)
    assert g.is_unit, f"{x} is not invertible modulo {modulus}"
    return s % modulus


def _projective_row(c: Poly, d: Poly, level: Poly) -> TKey:
    # point (c : d) of the projective line over F_q[T] / level
    c, d = c % level, d % level
    if c.is_zero:
        return (), (1,)
    return (1,), (d * _inverse_mod(c, level) % level).coeffs


def _projective_matrix(m: PolyMatrix, level: Poly) -> TKey:
    # class in PGL2(F_q[T] / level), first nonzero entry scaled to 1
    r = m.reduce(level)
    first = next(e for e in r.entries if not e.is_zero)
    inv = _inverse_mod(first, level)
    return tuple((e * inv % level).coeffs for e in r.entries)


def stabiliser(k: int, level: Poly, degbound: int) -> Tuple[List[PolyMatrix], bool]:
    """
    Stabiliser of the half-line vertex (k, 0) in GL2(F_q[T]) modulo scalars, up to what matters modulo ``level``

    For k >= 1 it is {[[alpha, beta], [0, 1]] : deg beta <= k}; only beta mod level acts on orbit keys, so
    beta runs over degrees <= min(k, degbound, deg level - 1).

    :param k: half-line index
    :param level: monic polynomial
    :param degbound: bound on deg beta
    :return: representatives and whether they cover the stabiliser modulo ``level``
    """
    q = level.q
    if k == 0:
        return list(pgl2_constant(q)), True

    need = k if level.is_unit else min(k, int(level.degree) - 1)
    top = min(need, degbound)
    one, zero = Poly.one(q), Poly.zero(q)
    stab = [
        PolyMatrix(Poly.constant(alpha, q), beta, zero, one)
        for alpha in range(1, q)
        for beta in enumerate_up_to(top, q, monic_only=False, with_zero=True)
    ]
    return stab, top >= need


def orbit_key(v: TreeVertex, level: Poly, degbound: int, subgroup: Subgroup = Subgroup.GAMMA0) -> Tuple[TKey, bool]:
    """
    Orbit invariant of a vertex under a congruence subgroup

    With v = gamma^-1 (k, 0) from the half-line reduction, the orbit is the double coset
    G gamma^-1 Stab(k): for Gamma0 the coset is the bottom row of gamma^-1 on the projective line mod ``level``,
    for the principal subgroup the class of gamma^-1 in PGL2(F_q[T] / level).

    :param v: vertex
    :param level: monic polynomial
    :param degbound: bound on the stabiliser degrees searched
    :param subgroup: congruence subgroup
    :return: key and completeness flag
    """
    red = reduce_vertex(v)
    if level.is_unit:
        return (red.k,), True

    inv = red.gamma.inverse()
    stab, complete = stabiliser(red.k, level, degbound)
    if subgroup == Subgroup.GAMMA0:
        c, d = inv.c, inv.d
        key = min(_projective_row(c * s.a + d * s.c, c * s.b + d * s.d, level) for s in stab)
    elif subgroup == Subgroup.GAMMA:
        key = min(_projective_matrix(inv * s, level) for s in stab)
    else:
        raise DomainError(f"unsupported subgroup {subgroup}")
    return (red.k, key), complete


@dataclass(frozen=True)
class OrbitMatch(object):
    """
    Outcome of an orbit test

    Attributes:
        equal: an element mapping u to v was found
        witness: that element (verified on the tree)
        complete: a negative answer covers the whole group, not only the searched part
        degbound: the degree bound used
    """
    equal: bool
    witness: Optional[PolyMatrix]
    complete: bool
    degbound: int


def orbit_equal(u: TreeVertex, v: TreeVertex, level: Poly, degbound: int,
                subgroup: Subgroup = Subgroup.GAMMA0) -> OrbitMatch:
    """
    Test whether some element of the congruence subgroup maps u to v

    Both vertices are reduced to the half-line; different half-line positions are never equivalent. Otherwise
    every candidate gamma_v^-1 s gamma_u with s in the (degree bounded) stabiliser is tested for membership.
    A returned witness is always checked on the tree, so ``equal`` is never a false positive.

    :param u: first vertex
    :param v: second vertex
    :param level: monic polynomial
    :param degbound: bound on the stabiliser degrees searched
    :param subgroup: congruence subgroup
    :return:
    """
    if degbound < 0:
        raise DomainError(f"degree bound must not be negative, got {degbound}")

    ru, rv = reduce_vertex(u), reduce_vertex(v)
    if ru.k != rv.k:
        return OrbitMatch(False, None, True, degbound)

    stab, complete = stabiliser(ru.k, level, degbound)
    left = rv.gamma.inverse()
    for s in stab:
        g = left * s * ru.gamma
        if _member(g, level, subgroup):
            assert vertex_of_matrix(g, u) == v, f"witness {g} does not map {u} to {v}"
            return OrbitMatch(True, g.canonical(), True, degbound)

    return OrbitMatch(False, None, complete, degbound)


def orbit_search(u: TreeVertex, v: TreeVertex, level: Poly, degbound: int,
                 max_degree: Optional[int] = None) -> Optional[PolyMatrix]:
    """
    Exhaustive search of Gamma0(level) elements with entry degrees <= degbound mapping u to v

    :param u: first vertex
    :param v: second vertex
    :param level: monic polynomial
    :param degbound: bound on the entry degrees
    :param max_degree: resource bound (default ``ORBIT_MAX_DEGREE``)
    :return: a witness or None
    """
    bound = C["ORBIT_MAX_DEGREE"] if max_degree is None else max_degree
    if degbound > bound:
        raise ResourceError(f"exhaustive orbit search with degree bound {degbound} exceeds the limit {bound}")

    for g in bounded_elements(level, degbound):
        if vertex_of_matrix(g, u) == v:
            return g
    return None


@dataclass
class QuotientGraph(object):
    """
    Truncated quotient of the tree by a congruence subgroup, explored breadth first from the base vertex

    Edge weights count the neighbors of the representative that fall into the target orbit; neighbor slots
    whose orbit lies beyond the exploration radius are counted in ``boundary``.

    Attributes:
        q: field size
        level: the level
        subgroup: congruence subgroup
        depth: exploration radius
        degbound: stabiliser degree bound used for the orbit keys
        vertices: orbit representatives
        heights: half-line index of every representative
        distance: BFS distance from the base vertex
        complete: completeness flag of every orbit key
        edges: weighted directed edges (i, j) -> multiplicity
        boundary: neighbor slots leaving the truncation
    """
    q: int
    level: Poly
    subgroup: Subgroup
    depth: int
    degbound: int
    vertices: List[TreeVertex] = field(default_factory=list)
    heights: List[int] = field(default_factory=list)
    distance: List[int] = field(default_factory=list)
    complete: List[bool] = field(default_factory=list)
    edges: Dict[Tuple[int, int], int] = field(default_factory=dict)
    boundary: Dict[int, int] = field(default_factory=dict)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def weighted_degree(self, i: int) -> int:
        return sum(w for (a, _), w in self.edges.items() if a == i) + self.boundary.get(i, 0)

    def weight_matrix(self) -> np.ndarray:
        w = np.zeros((self.num_vertices, self.num_vertices))
        for (i, j), weight in self.edges.items():
            w[i, j] = weight
        return w

    def to_networkx(self) -> nx.DiGraph:
        """
        Directed graph view with the edge multiplicities as ``weight``
        """
        g = nx.DiGraph()
        for i, v in enumerate(self.vertices):
            g.add_node(i, vertex=v.to_text(), k=self.heights[i], distance=self.distance[i])
        for (i, j), weight in self.edges.items():
            g.add_edge(i, j, weight=weight)
        return g

    def is_path(self) -> bool:
        """
        The underlying simple graph (loops ignored) is a path
        """
        g = nx.Graph(self.to_networkx().to_undirected())
        g.remove_edges_from(list(nx.selfloop_edges(g)))
        if g.number_of_nodes() <= 1:
            return True
        return nx.is_connected(g) and g.number_of_edges() == g.number_of_nodes() - 1 \
            and max(d for _, d in g.degree()) <= 2

    def manifest(self) -> Dict[str, Any]:
        incomplete = [i for i, ok in enumerate(self.complete) if not ok]
        return {
            "q": self.q,
            "A": self.level.to_text(),
            "subgroup": self.subgroup.name,
            "depth": self.depth,
            "degbound": self.degbound,
            "num_vertices": self.num_vertices,
            "num_edges": self.num_edges,
            "vertices": [
                {"id": i, "vertex": v.to_text(), "k": self.heights[i], "distance": self.distance[i]}
                for i, v in enumerate(self.vertices)
            ],
            "boundary": {str(i): w for i, w in sorted(self.boundary.items())},
            "completeness_flags": {
                "orbit_keys_complete": not incomplete,
                "incomplete_vertices": incomplete,
            },
        }


def build_quotient(level: Poly, depth: int, degbound: int, subgroup: Subgroup = Subgroup.GAMMA0,
                   max_vertices: Optional[int] = None) -> QuotientGraph:
    """
    Breadth-first exploration of the quotient graph up to ``depth`` steps from the base vertex

    :param level: monic polynomial (1 gives the full group)
    :param depth: exploration radius
    :param degbound: stabiliser degree bound for the orbit keys
    :param subgroup: congruence subgroup
    :param max_vertices: resource bound (default ``QUOTIENT_MAX_VERTICES``)
    :return:
    """
    if depth < 0:
        raise DomainError(f"depth must not be negative, got {depth}")
    limit = C["QUOTIENT_MAX_VERTICES"] if max_vertices is None else max_vertices

    q = level.q
    graph = QuotientGraph(q=q, level=level, subgroup=subgroup, depth=depth, degbound=degbound)
    index: Dict[TKey, int] = {}

    def add(v: TreeVertex, key: TKey, ok: bool, dist: int) -> int:
        if graph.num_vertices >= limit:
            raise ResourceError(f"quotient exceeds {limit} vertices at distance {dist}")
        index[key] = graph.num_vertices
        graph.vertices.append(v)
        graph.heights.append(key[0])
        graph.distance.append(dist)
        graph.complete.append(ok)
        return index[key]

    base = TreeVertex.base(q)
    add(base, *orbit_key(base, level, degbound, subgroup), 0)

    pending = collections.deque([0])
    while pending:
        i = pending.popleft()
        for w in neighbors(graph.vertices[i]):
            key, ok = orbit_key(w, level, degbound, subgroup)
            j = index.get(key)
            if j is None and graph.distance[i] < depth:
                j = add(w, key, ok, graph.distance[i] + 1)
                pending.append(j)
            if j is None:
                graph.boundary[i] = graph.boundary.get(i, 0) + 1
            else:
                graph.edges[(i, j)] = graph.edges.get((i, j), 0) + 1

    log.info(f"Built {subgroup.name} quotient for A={level} at depth {depth}: "
             f"{graph.num_vertices} vertices, {graph.num_edges} edges")
    return graph


def write_adjacency(graph: QuotientGraph, path: Path) -> int:
    """
    Write the "vertex_id neighbor_id weight" adjacency list

    :param graph: quotient graph
    :param path: output file
    :return: number of lines written
    """
    lines = [f"{i} {j} {w}" for (i, j), w in sorted(graph.edges.items())]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return len(lines)


def write_manifest(graph: QuotientGraph, path: Path) -> None:
    path.write_bytes(orjson.dumps(graph.manifest(), option=orjson.OPT_INDENT_2))
