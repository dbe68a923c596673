#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import orjson
import pytest
import random

from pathlib import Path

from ffque.arith import (
    Laurent,
    Poly,
    involution,
)
from ffque.exceptions import (
    DomainError,
    ResourceError,
)
from ffque.tree import (
    Subgroup,
    TreeVertex,
    adjacency_spectrum,
    build_quotient,
    down_neighbors,
    neighbors,
    orbit_equal,
    orbit_search,
    random_vertex,
    reduce_vertex,
    up_neighbor,
    vertex_of_matrix,
    write_adjacency,
    write_manifest,
)


def test_vertex_text(q5: int) -> None:
    v = TreeVertex.parse("n=-2,x=2*T^-1", q5)
    assert v.n == -2
    assert v.x.coefficient(1) == 2
    assert TreeVertex.parse(v.to_text(), q5) == v
    assert TreeVertex.base(q5).to_text() == "n=0,x=0"

    # T^-1 is swallowed by T^-1 r_inf at height -1
    assert TreeVertex.parse("n=-1,x=2*T^-1", q5) == TreeVertex(-1, Laurent.zero(q5, 1))

    for text in ("n=1", "n=1;x=0", "x=0,y=1"):
        with pytest.raises(DomainError):
            TreeVertex.parse(text, q5)


def test_neighbors(q5: int) -> None:
    base = TreeVertex.base(q5)
    assert neighbors(base)[0] == up_neighbor(base) == TreeVertex(1, Laurent.zero(q5, 0))
    down = down_neighbors(base)
    assert len(down) == q5
    assert len(set(down)) == q5
    assert all(w.n == -1 for w in down)

    rng = random.Random(0)
    sample = [random_vertex(rng, q5, 4) for _ in range(1000)]
    assert all(len(neighbors(v)) == q5 + 1 for v in sample)
    assert all(len(set(neighbors(v))) == q5 + 1 for v in sample[:100])
    assert all(v in neighbors(w) for v in sample[:100] for w in neighbors(v))


def test_reduce_vertex(q5: int) -> None:
    rng = random.Random(3)
    for _ in range(50):
        v = random_vertex(rng, q5, 3)
        red = reduce_vertex(v)
        assert red.k >= 0
        assert red.gamma.is_invertible
        w = vertex_of_matrix(red.gamma, v)
        assert w.n == red.k and w.x.is_zero

    assert reduce_vertex(TreeVertex.base(q5)).k == 0
    assert reduce_vertex(TreeVertex(3, Laurent.zero(q5, 0))).k == 3


def test_involution(q5: int) -> None:
    w = involution(q5)
    v = TreeVertex.parse("n=-2,x=T^-1", q5)
    image = vertex_of_matrix(w, v)
    assert vertex_of_matrix(w, image) == v
    assert vertex_of_matrix(w, up_neighbor(v)) in neighbors(image)

    # multiplying by a zero polynomial keeps the finite precision of the series
    x = v.representative(6)
    assert (x * Poly.zero(q5)).absprec == x.absprec
    assert (x * Poly.zero(q5) + Poly.one(q5)).absprec == x.absprec

    rng = random.Random(5)
    for _ in range(30):
        u = random_vertex(rng, q5, 3)
        assert vertex_of_matrix(w, vertex_of_matrix(w, u)) == u


def test_orbit_equal(q5: int, t5: Poly) -> None:
    base = TreeVertex.base(q5)
    for w in down_neighbors(base):
        match = orbit_equal(w, up_neighbor(base), Poly.one(q5), 1)
        assert match.equal
        assert vertex_of_matrix(match.witness, w) == up_neighbor(base)

    # vertices at different half-line positions are never equivalent
    match = orbit_equal(base, TreeVertex(2, Laurent.zero(q5, 0)), t5, 1)
    assert not match.equal and match.complete

    with pytest.raises(DomainError):
        orbit_equal(base, base, t5, -1)

    # exhaustive search agrees on both answers
    w = down_neighbors(base)[0]
    assert vertex_of_matrix(orbit_search(w, up_neighbor(base), Poly.one(q5), 1), w) == up_neighbor(base)
    assert orbit_search(base, TreeVertex(2, Laurent.zero(q5, 0)), t5, 1) is None
    with pytest.raises(ResourceError):
        orbit_search(base, base, t5, 3, max_degree=2)


def test_full_group_quotient(q5: int, tmp_path: Path) -> None:
    graph = build_quotient(Poly.one(q5), 5, 2)
    assert graph.num_vertices == 6
    assert graph.is_path()
    assert graph.heights == list(range(6))
    assert all(graph.weighted_degree(i) == q5 + 1 for i in range(graph.num_vertices))
    assert graph.manifest()["completeness_flags"]["orbit_keys_complete"]

    spectrum = adjacency_spectrum(graph)
    assert spectrum.perron_ok
    assert len(spectrum.eigenvalues) == 6
    assert spectrum.below + spectrum.inside + spectrum.above == 6

    path = tmp_path / "adjacency.txt"
    lines = write_adjacency(graph, path)
    assert lines == graph.num_edges
    assert len(path.read_text(encoding="utf-8").splitlines()) == lines

    path = tmp_path / "manifest.json"
    write_manifest(graph, path)
    manifest = orjson.loads(path.read_bytes())
    assert manifest["num_vertices"] == 6
    assert manifest["subgroup"] == "GAMMA0"
    assert [v["k"] for v in manifest["vertices"]] == list(range(6))


def test_level_quotient(q5: int, t5: Poly) -> None:
    # the Borel subgroup splits the q + 1 neighbors of the base vertex into 1 + q
    graph = build_quotient(t5, 1, 2)
    assert graph.num_vertices == 3
    assert sorted(w for (i, _), w in graph.edges.items() if i == 0) == [1, q5]

    graph = build_quotient(t5, 3, 2)
    assert graph.num_vertices == 7
    assert graph.is_path()
    assert all(graph.weighted_degree(i) == q5 + 1 for i in range(graph.num_vertices))
    assert adjacency_spectrum(graph).perron_ok
    assert graph.to_networkx().number_of_nodes() == graph.num_vertices

    principal = build_quotient(t5, 2, 1, Subgroup.GAMMA)
    assert principal.subgroup == Subgroup.GAMMA
    assert all(principal.weighted_degree(i) == q5 + 1 for i in range(principal.num_vertices))
    assert adjacency_spectrum(principal).perron_ok


def test_quotient_bounds(q5: int) -> None:
    with pytest.raises(DomainError):
        build_quotient(Poly.one(q5), -1, 2)
    with pytest.raises(ResourceError):
        build_quotient(Poly.one(q5), 5, 2, max_vertices=3)
