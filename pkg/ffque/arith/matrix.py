#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Iterator,
    Tuple,
)

import logging
from dataclasses import dataclass

from ffque.exceptions import DomainError
from .enumerate import enumerate_up_to
from .field import inverse
from .poly import Poly

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolyMatrix(object):
    """
    2x2 matrix [[a, b], [c, d]] over F_q[T], read as an element of PGL2 when invertible

    Attributes:
        a: top left
        b: top right
        c: bottom left
        d: bottom right
    """
    a: Poly
    b: Poly
    c: Poly
    d: Poly

    @classmethod
    def identity(cls, q: int) -> "PolyMatrix":
        one, zero = Poly.one(q), Poly.zero(q)
        return cls(one, zero, zero, one)

    @classmethod
    def from_ints(cls, rows: Tuple[Tuple[int, int], Tuple[int, int]], q: int) -> "PolyMatrix":
        (a, b), (c, d) = rows
        return cls(Poly.constant(a, q), Poly.constant(b, q), Poly.constant(c, q), Poly.constant(d, q))

    @property
    def q(self) -> int:
        return self.a.q

    @property
    def entries(self) -> Tuple[Poly, Poly, Poly, Poly]:
        return self.a, self.b, self.c, self.d

    @property
    def det(self) -> Poly:
        return self.a * self.d - self.b * self.c

    @property
    def is_invertible(self) -> bool:
        """
        Invertible over F_q[T], i.e. the determinant is a nonzero constant
        """
        return self.det.is_unit

    @property
    def max_degree(self) -> int:
        return max(int(e.degree) for e in self.entries if not e.is_zero)

    def adjugate(self) -> "PolyMatrix":
        return PolyMatrix(self.d, -self.b, -self.c, self.a)

    def inverse(self) -> "PolyMatrix":
        """
        Inverse in GL2(F_q[T])

        :return:
        """
        det = self.det
        if not det.is_unit:
            raise DomainError(f"matrix with determinant {det} is not invertible over F_q[T]")
        inv = inverse(det.lc, self.q)
        return PolyMatrix(*(e.scale(inv) for e in self.adjugate().entries))

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scale(self, k: int) -> "PolyMatrix":
        return PolyMatrix(*(e.scale(k) for e in self.entries))

    def canonical(self) -> "PolyMatrix":
        """
        Projective representative: first nonzero entry in row-major order made monic

        :return:
        """
        for e in self.entries:
            if not e.is_zero:
                return self.scale(inverse(e.lc, self.q))
        raise DomainError("zero matrix has no projective class")

    def reduce(self, modulus: Poly) -> "PolyMatrix":
        return PolyMatrix(*(e % modulus for e in self.entries))

    def in_gamma0(self, level: Poly) -> bool:
        """
        Membership in the Hecke congruence subgroup: invertible with ``level`` dividing c

        :param level: monic polynomial (1 gives the full group)
        :return:
        """
        return self.is_invertible and level.divides(self.c)

    def in_gamma(self, level: Poly) -> bool:
        """
        Membership in the principal congruence subgroup of PGL2: congruent to a scalar mod ``level``

        :param level: monic polynomial
        :return:
        """
        if not self.is_invertible:
            return False
        r = self.reduce(level)
        return r.b.is_zero and r.c.is_zero and r.a == r.d

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def unipotent(b: Poly) -> PolyMatrix:
    """
    Translation [[1, b], [0, 1]]
    """
    q = b.q
    return PolyMatrix(Poly.one(q), b, Poly.zero(q), Poly.one(q))


def involution(q: int) -> PolyMatrix:
    """
    The Weyl element [[0, 1], [1, 0]]
    """
    return PolyMatrix(Poly.zero(q), Poly.one(q), Poly.one(q), Poly.zero(q))


def pgl2_constant(q: int) -> Iterator[PolyMatrix]:
    """
    Canonical representatives of PGL2(F_q), the stabiliser of the base vertex
    """
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if (a * d - b * c) % q == 0:
                        continue
                    first = next(x for x in (a, b, c, d) if x)
                    if first != 1:
                        continue
                    yield PolyMatrix.from_ints(((a, b), (c, d)), q)


def bounded_elements(level: Poly, degbound: int) -> Iterator[PolyMatrix]:
    """
    Every element of Gamma0(level) modulo scalars whose entries have degree <= degbound

    Bottom rows (c, d) run over coprime pairs with the first nonzero entry monic; the top rows solving
    ad - bc = lambda are lambda * (a0, b0) + tau * (c, d) for a particular solution (a0, b0).

    :param level: monic polynomial (1 gives the full group)
    :param degbound: bound on the entry degrees
    :return:
    """
    q = level.q
    polys = list(enumerate_up_to(degbound, q, monic_only=False, with_zero=True))
    for c in polys:
        if not level.divides(c):
            continue
        for d in polys:
            if c.is_zero and d.is_zero:
                continue
            first = c if not c.is_zero else d
            if first.lc != 1 or not c.gcd(d).is_unit:
                continue

            # s*d + t*c = 1 gives a0 = s, b0 = -t
            _, s, t = d.xgcd(c)
            for lam in range(1, q):
                a0, b0 = s.scale(lam), (-t).scale(lam)
                for tau in polys:
                    a, b = a0 + tau * c, b0 + tau * d
                    if a.degree > degbound or b.degree > degbound:
                        continue
                    yield PolyMatrix(a, b, c, d)
