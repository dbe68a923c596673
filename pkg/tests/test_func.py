#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import cmath
import csv
import pytest

from pathlib import Path

from ffque.arith import (
    Poly,
    enumerate_up_to,
)
from ffque.exceptions import (
    DomainError,
    ResourceError,
)
from ffque.func import (
    ONE_MINUS_S,
    CycInt,
    check_level,
    evaluate_formal,
    mismatches,
    mobius,
    ramanujan_brute,
    ramanujan_closed,
    ramanujan_discrepancies,
    sigma,
    sigma_formal,
    sigma_symbolic,
    totient,
    totient_brute,
    write_discrepancies,
)


def test_mobius(q5: int, t5: Poly) -> None:
    assert mobius(Poly.one(q5)) == 1
    assert mobius(t5) == -1
    assert mobius(t5 * (t5 + 1)) == 1
    assert mobius(t5 ** 2) == 0
    assert mobius(t5 * (t5 + 1) * (t5 ** 2 + 2)) == -1

    # sum over the divisors of X != 1 vanishes
    for x in enumerate_up_to(2, q5):
        if x.is_unit:
            continue
        total = sum(mobius(d) for d in enumerate_up_to(int(x.degree), q5) if d.divides(x))
        assert total == 0

    with pytest.raises(DomainError):
        mobius(t5.scale(2))
    with pytest.raises(DomainError):
        mobius(Poly.zero(q5))


def test_totient(q5: int, t5: Poly) -> None:
    for x in enumerate_up_to(3, q5):
        assert totient(x) == totient_brute(x)
    assert totient(t5 ** 2) == q5 ** 2 - q5
    assert totient(t5 ** 2 + t5 + 1) == q5 ** 2 - 1

    with pytest.raises(DomainError):
        totient(Poly.zero(q5))


def test_sigma(q5: int, t5: Poly) -> None:
    assert sigma(t5, 0) == 2
    assert sigma(t5 ** 2, 1) == 1 + q5 + q5 ** 2
    assert sigma_symbolic(t5 ** 2 * (t5 + 1)) == {0: 1, 1: 2, 2: 2, 3: 1}

    x = t5 * (t5 + 2) ** 2
    s = complex(0.7, 1.3)
    formal = sigma_formal(x, ONE_MINUS_S)
    assert abs(evaluate_formal(formal, complex(q5) ** -s) - sigma(x, 1 - s)) < 1e-9

    with pytest.raises(DomainError):
        sigma(t5.scale(3), 1)


def test_cyclotomic(q5: int) -> None:
    zeta = CycInt.root(1, q5)
    one = CycInt.one(q5)
    assert zeta * CycInt.root(q5 - 1, q5) == one
    assert sum((CycInt.root(k, q5) for k in range(q5)), CycInt.zero(q5)) == 0
    assert zeta.conjugate() == CycInt.root(-1, q5)
    assert (zeta * zeta.conjugate()).to_int() == 1
    assert abs(zeta.to_complex() - cmath.exp(2j * cmath.pi / q5)) < 1e-12
    assert CycInt.from_int(3, q5).is_rational
    assert (CycInt.from_int(3, q5) / 2).to_rational() == 1.5

    with pytest.raises(DomainError):
        zeta.to_int()
    with pytest.raises(DomainError):
        (CycInt.from_int(3, q5) / 2).to_int()
    with pytest.raises(DomainError):
        zeta / 0


def test_ramanujan_closed(q5: int, t5: Poly) -> None:
    for x in enumerate_up_to(3, q5):
        assert ramanujan_closed(x, Poly.zero(q5)) == totient(x)
    assert ramanujan_closed(t5, Poly.one(q5)) == -1
    assert ramanujan_closed(t5 ** 2, Poly.one(q5)) == 0
    assert ramanujan_closed(t5 ** 2, t5) == -q5


def test_ramanujan_brute(q5: int, t5: Poly) -> None:
    for a in (t5, t5 + 1):
        for x in enumerate_up_to(2, q5):
            if a.divides(x):
                continue
            for twist in enumerate_up_to(2, q5, with_zero=True):
                brute = ramanujan_brute(x, twist, a)
                assert brute.is_rational
                assert brute == ramanujan_closed(x, twist)

    # on A | X the brute sum counts phi(AX) / phi(A) residues and leaves the closed form
    assert ramanujan_brute(t5, Poly.zero(q5), t5) == 5
    assert ramanujan_brute(t5, Poly.one(q5), t5) != ramanujan_closed(t5, Poly.one(q5))

    # trivial twist counts the admissible Y
    zero = Poly.zero(q5)
    assert ramanujan_brute(t5, zero, t5 + 1) == 4
    assert ramanujan_closed(t5, zero) == 4
    assert ramanujan_brute(t5 ** 2, zero, t5 + 1) == ramanujan_closed(t5 ** 2, zero) == 20
    assert ramanujan_brute(t5 ** 2, zero, t5) == 25

    with pytest.raises(ResourceError):
        ramanujan_brute(t5 ** 6, Poly.one(q5), t5)
    with pytest.raises(DomainError):
        ramanujan_brute(t5, Poly.one(q5), t5 ** 2)
    with pytest.raises(DomainError):
        ramanujan_brute(t5.scale(2), Poly.one(q5), t5)
    with pytest.raises(DomainError):
        check_level(t5 ** 2 + 1)


def test_discrepancies(q5: int, t5: Poly, tmp_path: Path) -> None:
    rows = list(ramanujan_discrepancies([t5], 1, 1))
    # X in {1, T + c}, Q in {0, 1, T + c}
    assert len(rows) == (1 + q5) * (2 + q5)
    assert not mismatches(r for r in rows if r.domain == "A!|X")
    assert mismatches(r for r in rows if r.domain == "A|X")
    assert {r.domain for r in rows} == {"A|X", "A!|X"}

    path = tmp_path / "discrepancies.csv"
    assert write_discrepancies(rows, path) == len(rows)
    with open(path, newline="", encoding="utf-8") as f:
        table = list(csv.DictReader(f))
    assert len(table) == len(rows)
    assert set(table[0]) == {"q", "A", "X", "Q", "brute_value", "closed_value", "match_flag", "domain"}
