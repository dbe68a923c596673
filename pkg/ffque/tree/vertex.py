#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    List,
    Optional,
)

import logging
import random
from dataclasses import dataclass

from ffque.arith import (
    Laurent,
    Poly,
    PolyMatrix,
    involution,
    unipotent,
)
from ffque.exceptions import (
    DomainError,
    PrecisionError,
)

log = logging.getLogger(__name__)

# extra terms carried through the Iwasawa reduction before the result is cut back
_SLACK = 4


def canonical_part(n: int, x: Laurent) -> Laurent:
    """
    Representative of x mod T^n r_inf: the terms T^j with j > n, at absolute precision -n

    :param n: height exponent
    :param x: series known at least modulo T^n r_inf
    :return:
    """
    if x.absprec < -n:
        raise PrecisionError(f"vertex at height {n} needs x modulo T^{n}, series known modulo T^{-x.absprec}")
    terms = {j: x.coefficient(j) for j in range(x.valuation, -n)} if not x.is_zero else {}
    return Laurent.from_terms(terms, x.q, -n)


@dataclass(frozen=True)
class TreeVertex(object):
    """
    Vertex of the Bruhat-Tits tree, the class of [[T^n, x], [0, 1]] in PGL2(k_inf) / PGL2(r_inf)

    The up-neighbor raises n, the q down-neighbors lower it; the cusp at infinity is n -> +inf.

    Attributes:
        n: height exponent (|det| = q^n)
        x: translation part, stored as its canonical representative modulo T^n r_inf
    """
    n: int
    x: Laurent

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", canonical_part(self.n, self.x))

    @classmethod
    def base(cls, q: int) -> "TreeVertex":
        return cls(0, Laurent.zero(q, 0))

    @classmethod
    def of_poly(cls, n: int, x: Poly) -> "TreeVertex":
        return cls(n, Laurent.from_poly(x, max(-n, 1)))

    @classmethod
    def parse(cls, text: str, q: int) -> "TreeVertex":
        """
        Parse "n=-1,x=2*T^-1"; the written x is exact

        :param text: vertex text
        :param q: field size
        :return:
        """
        fields = {}
        for part in text.split(","):
            if "=" not in part:
                raise DomainError(f"expected 'n=<int>,x=<series>', got {text!r}")
            key, value = (s.strip() for s in part.split("=", 1))
            fields[key] = value
        if set(fields) != {"n", "x"}:
            raise DomainError(f"expected fields n and x in {text!r}")
        n = int(fields["n"])
        x = Laurent.parse(fields["x"], q)
        return cls(n, x.padded(max(x.absprec, -n)))

    @property
    def q(self) -> int:
        return self.x.q

    def representative(self, absprec: int) -> Laurent:
        """
        Exact representative of x (zero beyond the stored terms) at the requested precision
        """
        return self.x.padded(max(absprec, self.x.absprec))

    def to_text(self) -> str:
        x = "0" if self.x.is_zero else self.x.to_text().split(" (")[0]
        return f"n={self.n},x={x}"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"TreeVertex({self.to_text()}, q={self.q})"


def up_neighbor(v: TreeVertex) -> TreeVertex:
    return TreeVertex(v.n + 1, v.x)


def down_neighbors(v: TreeVertex) -> List[TreeVertex]:
    """
    The q vertices (n - 1, x + c T^n), c in F_q
    """
    q = v.q
    x = v.x.padded(-v.n + 1)
    return [TreeVertex(v.n - 1, x + Laurent.from_terms({-v.n: c}, q, -v.n + 1)) for c in range(q)]


def neighbors(v: TreeVertex) -> List[TreeVertex]:
    """
    The q + 1 neighbors of a vertex: the up-neighbor first, then the down-neighbors by new coefficient

    :param v: vertex
    :return:
    """
    return [up_neighbor(v)] + down_neighbors(v)


def _act(m: PolyMatrix, v: TreeVertex, extra: int) -> Optional[TreeVertex]:
    n = v.n
    c, d = m.c, m.d
    x = v.representative(-n + extra)

    bottom = x * c + d
    top = x * m.a + m.b
    det = m.det
    if det.is_zero:
        raise DomainError(f"singular matrix {m}")

    # |cT^n| against |cx + d|; bottom is exact down to T^-(absprec)
    h_c = int(c.degree) + n if not c.is_zero else None
    h_d = -bottom.valuation if not bottom.is_zero else None
    if h_d is None and bottom.absprec < -(h_c if h_c is not None else 0):
        return None

    if h_c is None or (h_d is not None and h_d >= h_c):
        # x' = (ax + b) / (cx + d), height n + deg det - 2 h_d
        n_new = n + int(det.degree) - 2 * h_d
        x_new = top / bottom
    else:
        # x' = a / c exactly, height deg det - n - 2 deg c
        n_new = int(det.degree) - n - 2 * int(c.degree)
        x_new = Laurent.quotient(m.a, c, max(-n_new, 1))
    if x_new.absprec < -n_new:
        return None
    return TreeVertex(n_new, x_new)


def vertex_of_matrix(m: PolyMatrix, v: TreeVertex) -> TreeVertex:
    """
    The vertex m . v, put back into the form [[T^n', x'], [0, 1]] by a column operation in PGL2(r_inf)

    :param m: invertible matrix over F_q[T]
    :param v: vertex
    :return:
    """
    extra = 2 * (m.max_degree + abs(v.n)) + _SLACK
    for _ in range(8):
        w = _act(m, v, extra)
        if w is not None:
            return w
        extra *= 2
    raise PrecisionError(f"could not reduce {m} . {v} to a canonical vertex")


@dataclass(frozen=True)
class ReducedVertex(object):
    """
    Position of a vertex in the standard half-line of GL2(F_q[T]) \\ tree

    Attributes:
        k: index of the half-line vertex (k, 0)
        gamma: element with gamma . v = (k, 0)
    """
    k: int
    gamma: PolyMatrix


def _polynomial_terms(x: Laurent) -> Poly:
    if x.is_zero or x.valuation > 0:
        return Poly.zero(x.q)
    return Poly([x.coefficient(-k) if -k < x.absprec else 0 for k in range(-x.valuation + 1)], x.q)


def reduce_vertex(v: TreeVertex) -> ReducedVertex:
    """
    Move a vertex into the half-line (k, 0), k >= 0, by translations and the Weyl involution

    Every step either ends or raises the height by twice the valuation of the fractional part.

    :param v: vertex
    :return:
    """
    q = v.q
    gamma = PolyMatrix.identity(q)
    w = v
    while True:
        shift = _polynomial_terms(w.x)
        if not shift.is_zero:
            t = unipotent(-shift)
            w = vertex_of_matrix(t, w)
            gamma = t * gamma
        if w.n >= 0:
            break
        j = involution(q)
        w = vertex_of_matrix(j, w)
        gamma = j * gamma
        if w.x.is_zero and w.n > 0:
            break

    assert w.x.is_zero and w.n >= 0, f"reduction of {v} ended at {w}"
    return ReducedVertex(w.n, gamma)


def random_vertex(rng: random.Random, q: int, max_height: int) -> TreeVertex:
    """
    Vertex with height in [-max_height, max_height] and random digits

    :param rng: random source
    :param q: field size
    :param max_height: bound on |n|
    :return:
    """
    n = rng.randint(-max_height, max_height)
    lo = rng.randint(-max_height, max(-n - 1, -max_height))
    terms = {j: rng.randrange(q) for j in range(lo, -n)}
    return TreeVertex(n, Laurent.from_terms(terms, q, -n))
