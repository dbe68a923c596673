#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import Optional

import logging

from ffque.arith import (
    Poly,
    residues,
)
from ffque.config import CONFIG as C
from ffque.exceptions import ResourceError
from ffque.func import check_level

log = logging.getLogger(__name__)


def index_gamma0(level: Poly) -> int:
    """
    Index m = |A| + 1 of Gamma0(A) in GL2(F_q[T]), the number of points of the projective line mod A

    :param level: monic irreducible A
    :return:
    """
    check_level(level)
    return level.norm + 1


def index_gamma0_enumerated(level: Poly) -> int:
    """
    Count the points (c : d) of the projective line over F_q[T] / A, each pair scaled by the inverse
    of its first nonzero entry

    :param level: monic irreducible A
    :return:
    """
    check_level(level)
    points = set()
    for c in residues(level):
        for d in residues(level):
            if c.is_zero and d.is_zero:
                continue
            first = c if not c.is_zero else d
            _, inv, _ = first.xgcd(level)
            points.add(((c * inv) % level, (d * inv) % level))
    return len(points)


def order_pgl2_residue(level: Poly, max_norm: Optional[int] = None) -> int:
    """
    Order of PGL2(F_q[T] / A) by direct enumeration of the matrices whose first nonzero entry is 1

    Residues are numbered once and multiplied through a table, so the determinant test is an
    integer comparison. Expected value |A| (|A|^2 - 1).

    :param level: monic irreducible A
    :param max_norm: resource bound on |A| (default ``PGL2_MAX_NORM``)
    :return:
    """
    check_level(level)
    bound = C["PGL2_MAX_NORM"] if max_norm is None else max_norm
    size = level.norm
    if size > bound:
        raise ResourceError(f"enumerating PGL2 over a residue ring of size {size} exceeds the bound {bound}")

    elements = list(residues(level))
    number = {r: i for i, r in enumerate(elements)}
    mul = [[number[(x * y) % level] for y in elements] for x in elements]
    zero = number[Poly.zero(level.q)]

    count = 0
    # a = 1: det = d - bc
    for b in range(size):
        row = mul[b]
        for c in range(size):
            bc = row[c]
            for d in range(size):
                if d != bc:
                    count += 1
    # a = 0, b = 1: det = -c
    for c in range(size):
        if c == zero:
            continue
        count += size

    log.debug(f"PGL2 over F_{level.q}[T]/({level}) has {count} elements")
    return count
