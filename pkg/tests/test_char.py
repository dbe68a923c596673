#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import pytest

from fractions import Fraction

from ffque.arith import (
    Laurent,
    Poly,
    enumerate_up_to,
)
from ffque.char import (
    Character,
    chi,
    chi_twisted,
    integrate_unit,
    unit_samples,
)
from ffque.exceptions import (
    DomainError,
    PrecisionError,
    ResourceError,
)
from ffque.func import CycInt


def test_chi(q5: int, t5: Poly) -> None:
    x = Laurent.from_terms({-1: 3, 1: 2, 2: 4}, q5, 4)
    y = Laurent.from_terms({1: 4, 3: 1}, q5, 4)
    assert chi(x) == CycInt.root(2, q5)
    assert chi(x + y) == chi(x) * chi(y)
    # polynomials are in the kernel
    assert chi(Laurent.from_poly(t5 ** 2 + 3, 4)) == 1

    with pytest.raises(PrecisionError):
        chi(Laurent.zero(q5, 1))


def test_chi_twisted(q5: int, t5: Poly) -> None:
    x = Laurent.from_terms({1: 1, 2: 3}, q5, 5)
    assert chi_twisted(Poly.zero(q5), x) == CycInt.one(q5)
    # chi_T(x) reads the coefficient of T^-2
    assert chi_twisted(t5, x) == CycInt.root(3, q5)
    assert chi_twisted(t5.scale(2), x) == CycInt.root(6, q5)

    char = Character(t5 + 1)
    assert char(x) == chi_twisted(t5 + 1, x)
    assert char.conjugate()(x) == char(x).conjugate()

    with pytest.raises(PrecisionError):
        chi_twisted(t5 ** 2, Laurent.from_terms({1: 1}, q5, 3))


def test_unit_samples(q5: int) -> None:
    samples = list(unit_samples(2, q5))
    assert len(samples) == q5 ** 2
    assert len({s.point for s in samples}) == q5 ** 2
    assert all(s.point.absprec == 3 and (s.point.is_zero or s.point.valuation >= 1) for s in samples)

    with pytest.raises(DomainError):
        list(unit_samples(0, q5))


def test_integrate(q5: int) -> None:
    assert integrate_unit(lambda x: Fraction(1), 2, q5) == 1
    # mean of the T^-1 digit
    assert integrate_unit(lambda x: Fraction(x.coefficient(1)), 2, q5) == Fraction(q5 - 1, 2)

    with pytest.raises(ResourceError):
        integrate_unit(lambda x: Fraction(1), 8, q5)
    with pytest.raises(ResourceError):
        integrate_unit(lambda x: Fraction(1), 3, q5, max_depth=2)


def test_orthogonality(q5: int) -> None:
    polys = list(enumerate_up_to(1, q5, monic_only=False, with_zero=True))
    for a in polys:
        for b in polys:
            value = integrate_unit(lambda x: chi_twisted(a, x) * chi_twisted(b, x).conjugate(), 3, q5)
            assert value == (1 if a == b else 0)
