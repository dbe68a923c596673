#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import itertools
import pytest

from fractions import Fraction

from ffque.arith import (
    NEG_INF,
    FieldElt,
    Laurent,
    Poly,
    PolyMatrix,
    bounded_elements,
    count_irreducibles,
    divisor_degrees,
    divisors,
    enumerate_polys,
    enumerate_up_to,
    factor,
    integer_mobius,
    inverse,
    involution,
    irreducibles,
    is_irreducible,
    pgl2_constant,
    residues,
    squarefree_divisors,
    unipotent,
)
from ffque.exceptions import (
    DomainError,
    PrecisionError,
)


def test_field(q5: int) -> None:
    assert FieldElt(3, q5) * FieldElt(2, q5) == FieldElt(1, q5)
    assert FieldElt(2, q5) - 4 == 3
    assert FieldElt(2, q5) / 3 == FieldElt(4, q5)
    assert all(a * inverse(a, q5) % q5 == 1 for a in range(1, q5))

    with pytest.raises(DomainError):
        inverse(0, q5)
    for q in (2, 3, 4, 6, 9):
        with pytest.raises(DomainError):
            FieldElt(1, q)


def test_poly_basics(q5: int) -> None:
    zero, one, t = Poly.zero(q5), Poly.one(q5), Poly.T(q5)
    assert zero.degree == NEG_INF
    assert zero.norm == 0
    assert one.is_unit and not zero.is_unit
    assert t.degree == 1 and t.norm == q5

    p = Poly([3, 0, 1], q5)
    assert p == t ** 2 + 3
    assert p.is_monic
    assert p(2) == (4 + 3) % q5
    assert Poly([1, 2, 5, 0], q5) == Poly([1, 2], q5)
    assert Poly([6], q5) == 1

    with pytest.raises(DomainError):
        t + Poly.T(7)


def test_poly_text(q5: int) -> None:
    p = Poly.parse("T^2+3", q5)
    assert p.coeffs == (3, 0, 1)
    assert p.to_text() == "T^2+3"
    assert p.to_text(ascending=True) == "3+0*T+T^2"
    assert Poly.parse("3+0*T+T^2", q5) == p
    assert Poly.parse("2T-1", q5) == Poly([4, 2], q5)
    assert Poly.zero(q5).to_text() == "0"

    for text in ("", "T^-1", "T T"):
        with pytest.raises(DomainError):
            Poly.parse(text, q5)


def test_poly_division(q5: int) -> None:
    t = Poly.T(q5)
    for a in enumerate_up_to(3, q5, monic_only=False):
        for b in (t + 1, t ** 2 + 2, Poly.constant(3, q5)):
            quot, rem = divmod(a, b)
            assert quot * b + rem == a
            assert rem.is_zero or rem.degree < b.degree

    with pytest.raises(DomainError):
        divmod(t, Poly.zero(q5))


def test_poly_gcd(q5: int) -> None:
    t = Poly.T(q5)
    a = (t + 1) * (t + 2) * 3
    b = (t + 1) * (t ** 2 + 2)
    assert a.gcd(b) == t + 1
    assert a.gcd(Poly.zero(q5)) == (t + 1) * (t + 2)

    g, s, u = a.xgcd(b)
    assert g == t + 1
    assert s * a + u * b == g

    assert (t ** 3 * (t + 1)).valuation(t) == (3, t + 1)
    with pytest.raises(DomainError):
        Poly.zero(q5).valuation(t)
    # Frobenius fixes the residue field of an irreducible quadratic
    p = t ** 2 + t + 1
    assert t.pow_mod(q5 ** 2, p) == t
    assert t.pow_mod(q5, p) != t


def test_enumerate(q5: int) -> None:
    assert len(list(enumerate_polys(2, q5))) == q5 ** 2
    assert len(list(enumerate_polys(2, q5, monic_only=False))) == (q5 - 1) * q5 ** 2
    assert len(list(enumerate_up_to(2, q5, with_zero=True))) == 1 + 1 + q5 + q5 ** 2
    assert len(list(residues(Poly.T(q5) ** 2))) == q5 ** 2

    first = list(enumerate_polys(1, q5))
    assert first == [Poly.T(q5) + c for c in range(q5)]

    with pytest.raises(DomainError):
        list(enumerate_polys(-1, q5))


def test_irreducibles(q5: int) -> None:
    t = Poly.T(q5)
    assert irreducibles(2, q5)[0] == t ** 2 + t + 1
    assert not is_irreducible(t ** 2 + 1)
    assert is_irreducible(t ** 2 + 2)

    for d in (1, 2, 3):
        assert len(irreducibles(d, q5)) == count_irreducibles(d, q5)
    assert count_irreducibles(1, q5) == 5
    assert count_irreducibles(2, q5) == 10
    assert count_irreducibles(3, q5) == 40

    assert [integer_mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert integer_mobius(30030) == 1 and integer_mobius(2310) == -1 and integer_mobius(9 * 7919) == 0


def test_factor(q5: int) -> None:
    for x in enumerate_up_to(4, q5, monic_only=False):
        f = factor(x)
        assert f.expand(q5) == x
        assert all(is_irreducible(p) and p.is_monic for p in f.primes)

    t = Poly.T(q5)
    x = t ** 2 * (t + 1)
    assert divisors(x) == sorted([Poly.one(q5), t, t ** 2, t + 1, t * (t + 1), x], key=Poly.sort_key)
    assert sorted(divisor_degrees(x)) == [0, 1, 1, 2, 2, 3]
    assert sorted(m for _, m in squarefree_divisors(x)) == [-1, -1, 1, 1]

    with pytest.raises(DomainError):
        factor(Poly.zero(q5))


def test_laurent_basics(q5: int) -> None:
    x = Laurent.parse("T^-1+2*T^-3 (prec 12)", q5)
    assert x.valuation == 1
    assert x.absprec == 13
    assert x.precision == 12
    assert x.digits(1, 4) == (1, 0, 2, 0)
    assert x.norm == Fraction(1, q5)
    assert x.to_text() == "T^-1+2*T^-3 (prec 12)"

    with pytest.raises(PrecisionError):
        x.coefficient(13)

    zero = Laurent.zero(q5, 5)
    assert zero.is_zero and zero.norm == 0
    assert zero.to_text() == "0 (absprec 5)"
    assert Laurent.parse("0 (absprec 5)", q5) == zero


def test_laurent_arithmetic(q5: int) -> None:
    t = Poly.T(q5)
    inv_t = Laurent.quotient(Poly.one(q5), t, 8)
    assert inv_t.valuation == 1
    assert inv_t.digits(1, 7) == (1, 0, 0, 0, 0, 0, 0)

    # 1 / (1 - T^-1) = sum T^-j
    y = Laurent.quotient(t, t - 1, 6)
    assert y.digits(0, 5) == (1,) * 6

    x = Laurent.from_terms({0: 1, 1: 3, 2: 4}, q5, 10)
    one = Laurent.from_terms({0: 1}, q5, 10)
    assert (x * x.invert()).equals_to_precision(one)
    assert (x / x).equals_to_precision(one)
    assert (x - x).is_zero

    # polynomial part and fractional part split x
    z = Laurent.from_poly(t ** 2 + 3, 6) + inv_t.truncate(6)
    assert z.polynomial_part() == t ** 2 + 3
    assert z.fractional_part().equals_to_precision(inv_t.truncate(6))

    assert inv_t.shift(1).equals_to_precision(Laurent.from_terms({0: 1}, q5, 7))
    with pytest.raises(PrecisionError):
        inv_t.truncate(9)
    with pytest.raises(DomainError):
        Laurent.zero(q5, 4).invert()


def test_matrix(q5: int) -> None:
    t = Poly.T(q5)
    m = PolyMatrix(t + 1, t, Poly.one(q5), Poly.one(q5))
    assert m.det == 1
    assert m.is_invertible
    assert m * m.inverse() == PolyMatrix.identity(q5)
    assert involution(q5) * involution(q5) == PolyMatrix.identity(q5)
    assert unipotent(t) * unipotent(-t) == PolyMatrix.identity(q5)
    assert m.scale(2).canonical() == m

    with pytest.raises(DomainError):
        PolyMatrix(t, Poly.zero(q5), Poly.zero(q5), t).inverse()

    constants = list(pgl2_constant(q5))
    assert len(constants) == q5 * (q5 ** 2 - 1)
    assert len(set(constants)) == len(constants)

    elements = list(bounded_elements(t, 1))
    assert elements
    assert all(g.in_gamma0(t) and g.max_degree <= 1 for g in elements)
    assert len(set(g.canonical() for g in elements)) == len(elements)


def test_congruence_membership(q5: int) -> None:
    t = Poly.T(q5)
    for a, b, c, d in itertools.product(range(2), repeat=4):
        m = PolyMatrix(Poly.constant(a, q5) + t, Poly.constant(b, q5), t * c, Poly.constant(d + 1, q5))
        if not m.is_invertible:
            assert not m.in_gamma0(t)
            continue
        assert m.in_gamma0(t)
        assert m.in_gamma(t) == (b == 0 and a == d + 1)
