#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Iterator,
    Optional,
    Set,
)

import logging
from dataclasses import dataclass

from ffque.arith import (
    Poly,
    bounded_elements,
    enumerate_up_to,
)
from ffque.config import CONFIG as C
from ffque.exceptions import (
    DomainError,
    ResourceError,
)
from ffque.func import check_level
from ffque.tree import TreeVertex

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CosetRep(object):
    """
    Class of Gamma_inf \\ Gamma0(A) given by its bottom row, scaled so that the first nonzero entry is monic

    Attributes:
        c: lower left entry, divisible by A
        d: lower right entry, coprime to c
    """
    c: Poly
    d: Poly

    @property
    def is_identity(self) -> bool:
        return self.c.is_zero

    def height(self, g: TreeVertex) -> int:
        """
        log_q h((c T^n, c x + d)) for the vertex g = (n, x)

        The canonical x is known modulo T^n r_inf, so c x + d is known exactly above |c| q^n, which is all
        the maximum needs.

        :param g: vertex
        :return:
        """
        if self.c.is_zero:
            return int(self.d.degree)
        h_c = int(self.c.degree) + g.n
        bottom = g.x * self.c + self.d
        if bottom.is_zero:
            return h_c
        return max(h_c, -bottom.valuation)

    def term(self, g: TreeVertex, s: complex) -> complex:
        """
        psi_s of gamma g: (|det| / h^2)^s = q^(s (n - 2h))
        """
        return complex(g.q) ** (s * (g.n - 2 * self.height(g)))

    def __str__(self) -> str:
        return f"({self.c}, {self.d})"


def enumerate_cosets(level: Poly, maxdeg: int, max_degree: Optional[int] = None) -> Iterator[CosetRep]:
    """
    Every coset of Gamma_inf \\ Gamma0(A) whose bottom row (c, d) has max(deg c, deg d) <= maxdeg

    The identity coset (0, 1) comes first; then c runs over monic multiples of A and d over every
    nonzero polynomial coprime to c.

    :param level: monic irreducible A
    :param maxdeg: degree bound on the bottom row
    :param max_degree: resource bound (default ``COSET_MAX_DEGREE``)
    :return:
    """
    check_level(level)
    if maxdeg < 0:
        raise DomainError(f"degree bound must not be negative, got {maxdeg}")
    bound = C["COSET_MAX_DEGREE"] if max_degree is None else max_degree
    if maxdeg > bound:
        raise ResourceError(f"coset enumeration to degree {maxdeg} exceeds the bound {bound}")

    q = level.q
    yield CosetRep(Poly.zero(q), Poly.one(q))

    d_values = list(enumerate_up_to(maxdeg, q, monic_only=False))
    for c in enumerate_up_to(maxdeg, q):
        if not level.divides(c):
            continue
        for d in d_values:
            if c.gcd(d).is_unit:
                yield CosetRep(c, d)


def cosets_from_matrices(level: Poly, maxdeg: int, max_degree: Optional[int] = None) -> Set[CosetRep]:
    """
    Bottom rows of all Gamma0(A) elements with entry degrees <= maxdeg, modulo Gamma_inf

    :param level: monic irreducible A
    :param maxdeg: degree bound on all four entries
    :param max_degree: resource bound (default ``ORBIT_MAX_DEGREE``)
    :return:
    """
    check_level(level)
    bound = C["ORBIT_MAX_DEGREE"] if max_degree is None else max_degree
    if maxdeg > bound:
        raise ResourceError(f"matrix enumeration to degree {maxdeg} exceeds the bound {bound}")
    return {CosetRep(m.c, m.d) for m in bounded_elements(level, maxdeg)}
