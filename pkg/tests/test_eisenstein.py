#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import pytest

from ffque.arith import (
    Laurent,
    Poly,
)
from ffque.cache import Cache_Memory
from ffque.eisenstein import (
    MATCH_TOL,
    CosetRep,
    adjacency_eigen_check,
    calibrate_kappa,
    coeff_closed,
    coeff_unfolded,
    coefficient_report,
    coefficient_table,
    cosets_from_matrices,
    enumerate_cosets,
    eval_cosets,
    eval_direct,
    fourier_extract,
    index_gamma0,
    index_gamma0_enumerated,
    invariance_check,
    order_pgl2_residue,
    parseval_check,
    unit_twist_ratios,
    vanishes,
)
from ffque.exceptions import (
    DomainError,
    ResourceError,
)
from ffque.tree import TreeVertex


def test_index(t5: Poly) -> None:
    for a in (t5, t5 + 1, t5 ** 2 + t5 + 1):
        assert index_gamma0(a) == index_gamma0_enumerated(a) == a.norm + 1
    assert index_gamma0(t5 ** 2 + t5 + 1) == 26

    assert order_pgl2_residue(t5) == 120
    with pytest.raises(ResourceError):
        order_pgl2_residue(t5 ** 2 + t5 + 1, max_norm=5)
    with pytest.raises(DomainError):
        index_gamma0(t5 ** 2)


def test_constant_term(q5: int, t5: Poly) -> None:
    zero = Poly.zero(q5)
    assert abs(coeff_unfolded(0, zero, 2, t5) - (1 + 1 / 30)) < 1e-12
    assert abs(coeff_closed(0, zero, 2, t5) - 629 / 624) < 1e-12

    # the q^(ns) part is shared by both descriptions
    for n in (-3, 0, 2):
        delta = coeff_unfolded(n, zero, 2, t5) - coeff_closed(n, zero, 2, t5)
        assert abs(delta - (1 / 30 - 5 / 624) * q5 ** (-n)) < 1e-12


def test_coefficient_domain(q5: int, t5: Poly) -> None:
    one = Poly.one(q5)
    with pytest.raises(DomainError):
        coeff_closed(0, Poly.zero(q5), 0, t5)
    with pytest.raises(DomainError):
        coeff_unfolded(0, Poly.zero(q5), 1, t5)
    with pytest.raises(DomainError):
        coeff_closed(-2, t5.scale(2), 2, t5)
    with pytest.raises(DomainError):
        coeff_unfolded(-2, one, 2, t5 ** 2)


def test_vanishing(q5: int, t5: Poly) -> None:
    one = Poly.one(q5)
    assert vanishes(0, one, t5)
    assert not vanishes(-1, one, t5)
    assert not vanishes(5, Poly.zero(q5), t5)

    assert coeff_closed(0, one, 2, t5) == 0
    assert coeff_closed(-1, one, 2, t5) != 0
    assert coeff_unfolded(-1, one, 2, t5) == 0
    assert coeff_unfolded(-2, one, 2, t5) != 0
    assert coeff_unfolded(-2, t5, 2, t5) == 0


def test_coefficient_table(q5: int, t5: Poly) -> None:
    table = coefficient_table(t5, 2, (0, -1, -2), 1)
    assert len(table.entries) == 3 * (1 + 1 + q5)
    assert table[(-1, Poly.zero(q5))] == coeff_closed(-1, Poly.zero(q5), 2, t5)
    assert list(table.twists(0))[0] == Poly.zero(q5)
    assert table.alpha(t5 ** 2) == 2
    assert table.a == 1


def test_cosets(t5: Poly) -> None:
    cosets = list(enumerate_cosets(t5, 1))
    assert cosets[0] == CosetRep(Poly.zero(5), Poly.one(5))
    assert cosets[0].is_identity
    # (0, 1) and (T, d) with d(0) != 0, deg d <= 1
    assert len(cosets) == 1 + 4 + 4 * 4
    assert set(cosets) == cosets_from_matrices(t5, 1)

    with pytest.raises(ResourceError):
        list(enumerate_cosets(t5, 5))
    with pytest.raises(DomainError):
        list(enumerate_cosets(t5, -1))


def test_eval_direct(q5: int, t5: Poly, c: Cache_Memory) -> None:
    base = TreeVertex.base(q5)
    value = eval_direct(base, 2, t5, cache=c)
    assert abs(value.value - coeff_unfolded(0, Poly.zero(q5), 2, t5)) <= 1e-6
    assert value.truncation_bound <= 1e-10 * abs(value.value)
    assert eval_direct(base, 2, t5, cache=c) == value
    assert set(value.to_dict()) == {"value_re", "value_im", "truncation_bound", "degree"}

    # the tail bound is absolute, whatever the size of E
    deep = TreeVertex.parse("n=-3,x=T^-1", q5)
    for tol in (1e-4, 1e-8, 1e-12):
        loose = eval_direct(deep, complex(2.5, 1), t5, tol)
        assert loose.truncation_bound <= tol
    assert eval_direct(deep, 2, t5, 1e-4).degree <= eval_direct(deep, 2, t5, 1e-12).degree

    partial = eval_cosets(base, 2, t5, 2)
    assert abs(partial - value.value) <= 1e-3 * abs(value.value)

    with pytest.raises(DomainError):
        eval_direct(base, 1, t5)
    with pytest.raises(DomainError):
        eval_direct(base, complex(0.5, 3), t5)


def test_fourier_extract(q5: int, t5: Poly, c: Cache_Memory) -> None:
    zero = Poly.zero(q5)
    extracted = fourier_extract(0, zero, 2, t5, cache=c)
    assert abs(extracted - coeff_unfolded(0, zero, 2, t5)) <= 1e-6
    extracted = fourier_extract(-2, Poly.one(q5), 2, t5, cache=c)
    assert abs(extracted - coeff_unfolded(-2, Poly.one(q5), 2, t5)) <= 1e-5 * abs(extracted)

    with pytest.raises(DomainError):
        fourier_extract(-3, zero, 2, t5, depth=1)

    # diag(lambda, 1) lies in Gamma0(A), so unit multiples of Q share the coefficient
    ratios = unit_twist_ratios(-2, Poly.one(q5), 2, t5)
    assert sorted(ratios) == [1, 2, 3, 4]
    assert all(abs(r - 1) <= 1e-5 for r in ratios.values())


def test_coefficient_report(t5: Poly) -> None:
    records = coefficient_report([t5], (0, -1, -2), 1, (2, complex(2.5, 1)))
    assert records
    assert all(r.unfolded_matches for r in records)

    # the closed constant term misses the A | X part of the Ramanujan sums
    head = next(r for r in records if r.n == 0 and r.twist.is_zero and r.s == 2)
    assert abs(head.closed - (1 + 5 ** -3 / (1 - 5 ** -4))) <= 1e-12
    assert abs(head.unfolded - 1.0333) <= 1e-3
    assert abs(head.extracted - head.unfolded) <= 1e-5 * abs(head.unfolded)
    assert not head.closed_matches
    assert all(r.unfolded == 0 and abs(r.extracted) <= MATCH_TOL for r in records if r.vanishing)


def test_parseval(q5: int, t5: Poly, c: Cache_Memory) -> None:
    for n in (-1, -2):
        report = parseval_check(n, 2, t5, kappa=q5 - 1, source="unfolded", cache=c)
        assert report.residual <= 1e-6 * report.lhs

    calibration = calibrate_kappa(2, t5, cache=c)
    assert abs(calibration.kappa - (q5 - 1)) <= 1e-6 * (q5 - 1)
    assert calibration.spread <= 1e-6 * calibration.kappa

    with pytest.raises(DomainError):
        parseval_check(-3, 2, t5, depth=1)


def test_eigen_relation(q5: int, t5: Poly, c: Cache_Memory) -> None:
    for g in (TreeVertex.base(q5), TreeVertex(-2, Laurent.from_terms({1: 1}, q5, 2))):
        for s in (2, complex(2.5, 1)):
            report = adjacency_eigen_check(g, s, t5, cache=c)
            assert report.ok, report.to_dict()


def test_invariance(t5: Poly) -> None:
    records = invariance_check(t5, 2)
    assert len(records) == 20
    assert max(r.residual for r in records) <= 1e-6
