#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Callable,
    Iterator,
    Optional,
    TypeVar,
)

import itertools
import logging
from dataclasses import dataclass

from ffque.arith import (
    Laurent,
    check_modulus,
)
from ffque.config import CONFIG as C
from ffque.exceptions import (
    DomainError,
    ResourceError,
)

log = logging.getLogger(__name__)

TValue = TypeVar("TValue")


@dataclass(frozen=True)
class UnitIntervalSample(object):
    """
    Sample point of the fundamental domain k_inf / F_q[T], supported on T^-1 ... T^-depth

    Attributes:
        depth: number of free coefficients
        point: exact representative (zero beyond T^-depth)
    """
    depth: int
    point: Laurent


def unit_samples(depth: int, q: int) -> Iterator[UnitIntervalSample]:
    """
    All q^depth sample points at the given depth, in a fixed order

    :param depth: number of coefficients (>= 1)
    :param q: field size
    :return:
    """
    check_modulus(q)
    if depth < 1:
        raise DomainError(f"sample depth must be >= 1, got {depth}")
    for digits in itertools.product(range(q), repeat=depth):
        terms = {j + 1: c for j, c in enumerate(digits) if c}
        yield UnitIntervalSample(depth, Laurent.from_terms(terms, q, depth + 1))


def integrate_unit(f: Callable[[Laurent], TValue], depth: int, q: int, max_depth: Optional[int] = None) -> TValue:
    """
    Exact integral of a coefficient-finite function over k_inf / F_q[T] (total mass 1)

    Note: the caller guarantees that f only reads the coefficients T^-1 ... T^-depth;
          reading deeper raises ``PrecisionError`` from the sample point itself

    :param f: integrand returning ``CycInt``, ``Fraction`` or ``complex`` values
    :param depth: number of coefficients f depends on
    :param q: field size
    :param max_depth: resource bound (default ``INTEGRATE_MAX_DEPTH``)
    :return: q^-depth * sum of f over all sample points
    """
    bound = C["INTEGRATE_MAX_DEPTH"] if max_depth is None else max_depth
    if depth > bound:
        raise ResourceError(f"integration depth {depth} exceeds the bound {bound} ({q ** depth} points)")

    total = None
    for sample in unit_samples(depth, q):
        value = f(sample.point)
        total = value if total is None else total + value

    log.debug(f"Integrated over {q ** depth} points at depth {depth}")
    return total / q ** depth
