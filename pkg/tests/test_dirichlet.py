#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import math
import orjson
import pytest

from fractions import Fraction

from ffque.arith import (
    Poly,
    enumerate_up_to,
)
from ffque.dirichlet import (
    ExtensionRule,
    FormMode,
    SyntheticMultiplicative,
    USeries,
    VPoly,
    divisor_square_enumerated,
    divisor_square_series,
    geometric,
    geometric_n_sums,
    ramanujan_identity_tail,
    totient_series,
    verify_constant_series,
    verify_level_series,
    verify_newform_series,
    verify_ramanujan_identity,
    verify_ramanujan_series,
    whittaker,
    zeta_series,
    zeta_series_enumerated,
)
from ffque.dirichlet.identities import check_truncation
from ffque.exceptions import (
    DomainError,
    ResourceError,
)


def test_series_algebra(q5: int) -> None:
    assert geometric(2, 2, 5).rationals() == [1, 0, 2, 0, 4, 0]

    zeta = zeta_series(6, q5)
    assert zeta == zeta_series_enumerated(6, q5)
    assert zeta.rationals() == [q5 ** k for k in range(7)]
    assert zeta * USeries.from_dict({0: 1, 1: -q5}, 6) == USeries.one(6)
    assert (zeta / zeta) == USeries.one(6)

    # sum of phi over monic X of degree d is q^2d (1 - 1/q)
    assert totient_series(3, q5).rationals() == [1] + [q5 ** (2 * d) - q5 ** (2 * d - 1) for d in (1, 2, 3)]

    v = VPoly({1: 2, -1: 3})
    assert v * v.substitute(-1) == VPoly({0: 13, 2: 6, -2: 6})
    assert abs(v.evaluate(2) - 5.5) < 1e-12

    with pytest.raises(DomainError):
        USeries.from_dict({-1: 1}, 3)


def test_truncation_bounds() -> None:
    check_truncation(0)
    check_truncation(24)
    with pytest.raises(DomainError):
        check_truncation(-1)
    with pytest.raises(ResourceError):
        check_truncation(25)
    with pytest.raises(ResourceError):
        zeta_series(30, 5)


def test_ramanujan_series(q5: int) -> None:
    report = verify_ramanujan_series(Poly.zero(q5), 6)
    assert report.ok and report.verdict == "match"
    for x in enumerate_up_to(2, q5):
        report = verify_ramanujan_series(x, 6)
        assert report.ok, report.to_dict()
        assert report.first_mismatch is None

    data = orjson.loads(report.to_json())
    assert data["identity"] == report.identity
    assert data["verdict"] == "match"


def test_level_series(q5: int, t5: Poly) -> None:
    for a in (t5, t5 + 1, t5 ** 2 + t5 + 1):
        for x in enumerate_up_to(2, q5):
            assert verify_level_series(x, a, 6).ok
        assert verify_constant_series(a, 6).ok


def test_ramanujan_identity(q5: int) -> None:
    for n in (0, 2, 4):
        assert divisor_square_series(n, q5).first_mismatch(divisor_square_enumerated(n, q5)) is None

    for t in (0.3, 1.0):
        report = verify_ramanujan_identity(t, [1, complex(0.5, 0.7)], 15, q5)
        assert report.ok
        assert report.extra["enumeration_ok"]
        assert all(s["abs_error"] <= s["tail_bound"] + 1e-12 for s in report.extra["samples"])

    assert ramanujan_identity_tail(15, 1.0, q5) < ramanujan_identity_tail(10, 1.0, q5)
    with pytest.raises(DomainError):
        ramanujan_identity_tail(5, 0.0, q5)
    with pytest.raises(DomainError):
        verify_ramanujan_identity(math.pi / math.log(q5), [1], 5, q5)


def test_synthetic_multiplicative(q5: int, t5: Poly) -> None:
    x = t5 ** 2 * (t5 + 1)
    assert SyntheticMultiplicative.constant(q5, 1, Fraction(2))(x) == 8
    assert SyntheticMultiplicative.constant(q5, 1, Fraction(2), ExtensionRule.HECKE)(x) == 6
    assert SyntheticMultiplicative.constant(q5, 1, Fraction(2))(t5 ** 2 + 2) == 0

    with pytest.raises(DomainError):
        SyntheticMultiplicative(q5, {t5 ** 2: Fraction(1)})
    with pytest.raises(DomainError):
        SyntheticMultiplicative.constant(q5, 1, Fraction(1))(t5.scale(2))


def test_newform_series(q5: int, t5: Poly) -> None:
    verdicts = {verify_newform_series(SyntheticMultiplicative.random(q5, 2, seed=seed), 8).verdict
                for seed in range(5)}
    # completely multiplicative coefficients give L(s) L(s - nu)
    assert verdicts == {"ll"}

    numeric = verify_newform_series(SyntheticMultiplicative.random(q5, 2, seed=0), 8, nu=complex(0.2, 0.4))
    assert numeric.verdict == "ll"

    with pytest.raises(DomainError):
        verify_newform_series(SyntheticMultiplicative.random(q5, 1), 6, FormMode.OLDFORM)
    with pytest.raises(DomainError):
        verify_newform_series(SyntheticMultiplicative.random(q5, 1), 6, FormMode.OLDFORM, level=t5 ** 2)


def test_whittaker(q5: int) -> None:
    t = 1.0
    theta = t * math.log(q5)
    assert whittaker(t, -1, q5) == 0
    assert abs(whittaker(t, 0, q5) - 1) < 1e-12
    assert abs(whittaker(t, 1, q5) - 2 * math.cos(theta)) < 1e-12
    for tt in (0.3, 1.0, 2.0):
        assert all(abs(whittaker(tt, beta, q5)) <= beta + 1 + 1e-9 for beta in range(51))

    with pytest.raises(DomainError):
        whittaker(0.0, 1, q5)


def test_n_sums(q5: int) -> None:
    for a in (2, 3, 4):
        for e in range(a - 1):
            for s in (1, complex(0.5, 0.7)):
                sums = geometric_n_sums(a, e, s, 1.0, q5)
                assert sums.verdicts["first"]
                assert sums.verdicts["second_derived"]

    vacuous = geometric_n_sums(2, 1, 1, 1.0, q5)
    assert vacuous.pair == (0j, 0j)
    assert all(vacuous.verdicts.values())

    with pytest.raises(DomainError):
        geometric_n_sums(3, 0, -0.5, 1.0, q5)
