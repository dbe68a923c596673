#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Dict,
    List,
    Optional,
)

import logging
from dataclasses import dataclass

from ffque.arith import (
    Laurent,
    Poly,
    enumerate_polys,
    residues,
)
from ffque.cache import (
    Cache,
    make_key,
)
from ffque.config import CONFIG as C
from ffque.exceptions import (
    DomainError,
    ResourceError,
)
from ffque.func import check_level
from ffque.tree import TreeVertex
from .coset import enumerate_cosets

log = logging.getLogger(__name__)

# a point g = [[T^n, x], [0, 1]] of G/K is a tree vertex
GroupPoint = TreeVertex


@dataclass(frozen=True)
class EisensteinValue(object):
    """
    Truncated value of E(g, s) with a certified bound on the omitted cosets

    Attributes:
        value: partial sum over the cosets with deg c <= degree
        truncation_bound: bound on the absolute value of the omitted part
        degree: largest deg c included
    """
    value: complex
    truncation_bound: float
    degree: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value_re": self.value.real,
            "value_im": self.value.imag,
            "truncation_bound": self.truncation_bound,
            "degree": self.degree,
        }


def _check_s(s: complex) -> complex:
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"the coset sum converges for Re(s) > 1 only, got s = {s}")
    return s


def _units_sum(n: int, s: complex, q: int) -> complex:
    # sum over nonzero m in F_q[T] of max(q^n, |m|)^(-2s)
    r = complex(q) ** (1 - 2 * s)
    if n <= 0:
        return (q - 1) / (1 - r)
    return (q ** (n + 1) - 1) * complex(q) ** (-2 * s * n) + (q - 1) * r ** (n + 1) / (1 - r)


def _units_bound(n: int, sigma: float, q: int) -> float:
    r = q ** (1 - 2 * sigma)
    if n <= 0:
        return (q - 1) / (1 - r)
    return (q ** (n + 1) - 1) * q ** (-2 * sigma * n) + (q - 1) * r ** (n + 1) / (1 - r)


class EisensteinEvaluator(object):
    """
    E(g, s) for the level-A series at the cusp infinity, summed by degree of the lower left entry c

    Per coset row c the inner sum over d splits into d0 mod c and a translate m. The translate gives
    ``_units_sum``; the residue d0 enters only through the first nonzero digit (positions 1..L,
    L = max(0, -n - 1)) of the fractional part of x + d0 / c. Removing the coprimality of d0 by Moebius
    inversion, every reduced denominator c' of degree >= L sees all digit patterns equally often, so only
    c' of degree < L need enumeration. The block of degree k is

        B_k = sum_{deg c' < L} w_k(c') (G(c') - avg |c'|) + (avg + M(n)) T_k

    with T_k = sum of phi(c) over monic multiples of A of degree k and w_k(c') the Moebius weight of the
    cofactors D with c' D of degree k divisible by A. Then E = q^(ns) (1 + sum_k q^(-2sk) B_k).
    """

    def __init__(self, level: Poly, g: TreeVertex) -> None:
        check_level(level)
        if level.q != g.q:
            raise DomainError(f"mixed field sizes {level.q} and {g.q}")
        self.level = level
        self.g = g
        self.q = level.q
        self.a = int(level.degree)
        self.L = max(0, -g.n - 1)

        # first-digit histograms of x + e/c' for c' divisible by A (hist_div) and not (hist_rest), by deg c'
        self.hist_div: List[List[int]] = [[0] * (self.L + 1) for _ in range(self.L)]
        self.hist_rest: List[List[int]] = [[0] * (self.L + 1) for _ in range(self.L)]
        self._fill_histograms()

        self._phi: List[int] = [1]
        self._blocks: List[int] = []

    def _fill_histograms(self) -> None:
        q, L = self.q, self.L
        x = self.g.x
        for j in range(L):
            for cp in enumerate_polys(j, q):
                hist = self.hist_div[j] if self.level.divides(cp) else self.hist_rest[j]
                for e in residues(cp):
                    y = x + Laurent.quotient(e, cp, L + 1)
                    digits = y.digits(1, L)
                    pos = next((i + 1 for i, c in enumerate(digits) if c), 0)
                    hist[pos] += 1

    def phi_sum(self, k: int) -> int:
        """
        T_k: sum of phi(c) over monic c divisible by A with deg c = k
        """
        q, a = self.q, self.a
        while len(self._phi) <= k:
            j = len(self._phi)
            self._phi.append(q ** (2 * j) - q ** (2 * j - 1))
        return (self.level.norm - 1) * sum(self._phi[k - i * a] for i in range(1, k // a + 1))

    def _weight_divisible(self, m: int) -> int:
        # sum of mu(D) over monic squarefree D of degree m
        return {0: 1, 1: -self.q}.get(m, 0)

    def _weight_rest(self, m: int) -> int:
        # coefficient of x^m in -x^a (1 - qx) / (1 - x^a)
        a = self.a
        w = 0
        if m >= a and m % a == 0:
            w -= 1
        if m - 1 >= a and (m - 1) % a == 0:
            w += self.q
        return w

    def _digit_value(self, pos: int, s: complex) -> complex:
        # max(q^n, |f|)^(-2s) for a fractional part f with first nonzero digit at pos (0: none up to L)
        if pos == 0:
            return complex(self.q) ** (-2 * s * self.g.n)
        return complex(self.q) ** (2 * s * pos)

    def average(self, s: complex) -> complex:
        """
        Mean of the digit value over uniformly distributed fractional parts
        """
        q, L = self.q, self.L
        total = self._digit_value(0, s) + sum((q - 1) * q ** (L - j) * self._digit_value(j, s) for j in range(1, L + 1))
        return total / q ** L

    def block(self, k: int, s: complex) -> complex:
        """
        B_k, the sum over cosets with deg c = k of |c|^(2s) q^(-ns) psi_s(gamma g)

        :param k: deg c
        :param s: complex point
        :return:
        """
        q, a = self.q, self.a
        avg = self.average(s)
        total = (avg + _units_sum(self.g.n, s, q)) * self.phi_sum(k)
        for j in range(self.L):
            wd, wr = self._weight_divisible(k - j), self._weight_rest(k - j)
            if not wd and not wr:
                continue
            count_div = q ** (j - a) if j >= a else 0
            count_rest = q ** j - count_div
            g_div = sum(c * self._digit_value(pos, s) for pos, c in enumerate(self.hist_div[j]))
            g_rest = sum(c * self._digit_value(pos, s) for pos, c in enumerate(self.hist_rest[j]))
            total += wd * (g_div - avg * count_div * q ** j) + wr * (g_rest - avg * count_rest * q ** j)
        return total

    def tail_bound(self, degree: int, sigma: float) -> float:
        """
        Bound on |sum_{k > degree} q^(ns - 2sk) B_k| from |B_k| <= T_k (q^(-2 sigma n) + |M|), T_k <= q^(2k - a)
        """
        q, n = self.q, self.g.n
        ratio = q ** (2 - 2 * sigma)
        scale = q ** (n * sigma - self.a) * (q ** (-2 * sigma * n) + _units_bound(n, sigma, q))
        return scale * ratio ** (degree + 1) / (1 - ratio)

    def evaluate(self, s: complex, tol: Optional[float] = None, max_degree: Optional[int] = None) -> EisensteinValue:
        """
        Sum blocks until the tail bound drops below ``tol``

        :param s: complex point, Re(s) > 1
        :param tol: absolute tolerance (default ``EISENSTEIN_TOL``)
        :param max_degree: resource bound on deg c (default ``EISENSTEIN_MAX_DEGREE``)
        :return:
        """
        s = _check_s(s)
        tol = C["EISENSTEIN_TOL"] if tol is None else tol
        if tol <= 0:
            raise DomainError(f"tolerance must be positive, got {tol}")
        bound = C["EISENSTEIN_MAX_DEGREE"] if max_degree is None else max_degree

        q = self.q
        inner = 1 + 0j
        k = self.a - 1
        tail = self.tail_bound(k, s.real)
        lead = complex(q) ** (self.g.n * s)
        while tail > tol:
            k += 1
            if k > bound:
                raise ResourceError(f"E(g, s) at s = {s} did not reach tolerance {tol} by deg c = {bound} "
                                    f"(tail bound {tail:.3e})")
            inner += complex(q) ** (-2 * s * k) * self.block(k, s)
            tail = self.tail_bound(k, s.real)

        return EisensteinValue(lead * inner, tail, k)


def eval_direct(g: TreeVertex, s: complex, level: Poly, tol: Optional[float] = None,
                cache: Optional[Cache] = None) -> EisensteinValue:
    """
    E(g, s) = sum over Gamma_inf \\ Gamma0(A) of (|det gamma g| / h((0, 1) gamma g)^2)^s

    :param g: point [[T^n, x], [0, 1]]
    :param s: complex point, Re(s) > 1
    :param level: monic irreducible A
    :param tol: absolute tolerance of the certified truncation
    :param cache: optional memo for repeated points
    :return:
    """
    s = _check_s(s)
    if cache is None:
        return EisensteinEvaluator(level, g).evaluate(s, tol)
    key = make_key("eis", level.q, level, s, tol, g)
    return cache.get_or_compute(key, lambda: EisensteinEvaluator(level, g).evaluate(s, tol))


def eval_cosets(g: TreeVertex, s: complex, level: Poly, maxdeg: int) -> complex:
    """
    Plain partial sum over the enumerated cosets with max(deg c, deg d) <= maxdeg

    :param g: point
    :param s: complex point, Re(s) > 1
    :param level: monic irreducible A
    :param maxdeg: degree bound of the enumeration
    :return:
    """
    s = _check_s(s)
    return sum((rep.term(g, s) for rep in enumerate_cosets(level, maxdeg)), 0j)
