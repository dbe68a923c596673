#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Dict,
    Iterable,
    Tuple,
)

import logging
from dataclasses import (
    dataclass,
    field,
)

from ffque.arith import (
    Poly,
    enumerate_up_to,
)
from ffque.exceptions import DomainError
from ffque.func import (
    check_level,
    sigma,
)

log = logging.getLogger(__name__)

# |1 - q^(-2as)| below this counts as the pole q^(2as) = 1
POLE_TOL = 1e-12


def _check_twist(twist: Poly) -> None:
    if not twist.is_zero and not twist.is_monic:
        raise DomainError(f"Fourier coefficients are indexed by monic Q or 0, got {twist}")


def _pole_factor(level: Poly, s: complex) -> complex:
    a = int(level.degree)
    den = 1 - complex(level.q) ** (-2 * a * s)
    if abs(den) < POLE_TOL:
        raise DomainError(f"q^(2as) = 1 at s = {s} for deg A = {a}")
    return den


def _sigma_bracket(twist: Poly, level: Poly, s: complex, den: complex) -> complex:
    # sigma_{1-2s}(Q) - sigma_{1-2s}(Q A^-alpha) / (1 - q^(-2as))
    _, cofactor = twist.valuation(level)
    nu = 1 - 2 * s
    return sigma(twist, nu) - sigma(cofactor, nu) / den


def vanishes(n: int, twist: Poly, level: Poly) -> bool:
    """
    Vanishing rule of the closed formulas: Q != 0 and n > a - 2 - deg Q
    """
    return not twist.is_zero and n > int(level.degree) - 2 - int(twist.degree)


def coeff_closed(n: int, twist: Poly, s: complex, level: Poly) -> complex:
    """
    Closed formulas for c(n, Q, s):

        c(n, 0, s) = q^(ns) + q^(n(1-s) + 1 - 2as) / (1 - q^(-2as))
        c(n, Q, s) = q^(n(1-s) + 1 - a) (1 - q^(-2s)) (1 - q^((a-1-deg Q-n)(1-2s)))
                     (sigma_{1-2s}(Q) - sigma_{1-2s}(Q A^-alpha) / (1 - q^(-2as)))    for n <= a - 2 - deg Q

    and exactly 0 for Q != 0, n > a - 2 - deg Q. Rational in q^-s, so any s off the pole set is allowed.

    :param n: height exponent
    :param twist: Q, monic or 0
    :param s: complex point with q^(2as) != 1
    :param level: monic irreducible A
    :return:
    """
    check_level(level)
    _check_twist(twist)
    s = complex(s)
    q, a = level.q, int(level.degree)
    den = _pole_factor(level, s)
    qc = complex(q)

    if twist.is_zero:
        return qc ** (n * s) + qc ** (n * (1 - s) + 1 - 2 * a * s) / den
    if vanishes(n, twist, level):
        return 0j

    e = int(twist.degree)
    return (qc ** (n * (1 - s) + 1 - a) * (1 - qc ** (-2 * s)) * (1 - qc ** ((a - 1 - e - n) * (1 - 2 * s)))
            * _sigma_bracket(twist, level, s, den))


def coeff_unfolded(n: int, twist: Poly, s: complex, level: Poly) -> complex:
    """
    Fourier coefficients obtained by unfolding the coset sum against chi_Q:

        c(n, 0, s) = q^(ns) + q^(n(1-s)+1) (1 - q^(-2s)) (1 - q^-a) q^(a(1-2s)) / ((1 - q^(-2as)) (1 - q^(2-2s)))
        c(n, Q, s) = q^(n(1-s)+1) (1 - q^(-2s)) (1 - q^((-1-deg Q-n)(1-2s)))
                     (sigma_{1-2s}(Q) - sigma_{1-2s}(Q A^-alpha) / (1 - q^(-2as)))    for n <= -2 - deg Q

    and 0 for Q != 0, n > -2 - deg Q.

    :param n: height exponent
    :param twist: Q, monic or 0
    :param s: complex point off the poles
    :param level: monic irreducible A
    :return:
    """
    check_level(level)
    _check_twist(twist)
    s = complex(s)
    q, a = level.q, int(level.degree)
    den = _pole_factor(level, s)
    qc = complex(q)
    head = qc ** (n * (1 - s) + 1) * (1 - qc ** (-2 * s))

    if twist.is_zero:
        zeta = 1 - qc ** (2 - 2 * s)
        if abs(zeta) < POLE_TOL:
            raise DomainError(f"q^(2-2s) = 1 at s = {s}")
        return qc ** (n * s) + head * (1 - qc ** -a) * qc ** (a * (1 - 2 * s)) / (den * zeta)

    e = int(twist.degree)
    if n > -2 - e:
        return 0j
    return head * (1 - qc ** ((-1 - e - n) * (1 - 2 * s))) * _sigma_bracket(twist, level, s, den)


@dataclass
class EisCoeffTable(object):
    """
    Closed-form coefficients c(n, Q, s) on a finite (n, Q) range

    Attributes:
        level: A
        s: complex point
        entries: (n, Q) -> c(n, Q, s), Q = 0 included
    """
    level: Poly
    s: complex
    entries: Dict[Tuple[int, Poly], complex] = field(default_factory=dict)

    @property
    def a(self) -> int:
        return int(self.level.degree)

    def alpha(self, twist: Poly) -> int:
        """
        A-adic valuation of Q
        """
        return twist.valuation(self.level)[0]

    def twists(self, n: int) -> Iterable[Poly]:
        return sorted((t for (m, t) in self.entries if m == n), key=Poly.sort_key)

    def __getitem__(self, key: Tuple[int, Poly]) -> complex:
        return self.entries[key]


def coefficient_table(level: Poly, s: complex, heights: Iterable[int], max_twist_degree: int) -> EisCoeffTable:
    """
    Tabulate coeff_closed for every n in ``heights`` and Q in {0} + monic of degree <= max_twist_degree

    :param level: monic irreducible A
    :param s: complex point
    :param heights: values of n
    :param max_twist_degree: largest deg Q
    :return:
    """
    table = EisCoeffTable(level, complex(s))
    twists = [Poly.zero(level.q)] + list(enumerate_up_to(max_twist_degree, level.q))
    for n in heights:
        for twist in twists:
            table.entries[(n, twist)] = coeff_closed(n, twist, s, level)
    return table
