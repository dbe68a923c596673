#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Dict,
    Optional,
)

import logging

from ffque.arith import (
    Poly,
    enumerate_polys,
)
from ffque.config import CONFIG as C
from ffque.exceptions import (
    DomainError,
    ResourceError,
)
from ffque.func import (
    ONE_MINUS_S,
    admissible_fractions,
    check_level,
    ramanujan_closed,
    sigma_formal,
    totient,
)
from .report import IdentityReport
from .series import (
    USeries,
    geometric,
    polynomial,
)

log = logging.getLogger(__name__)


def check_truncation(n: int, max_degree: Optional[int] = None) -> None:
    bound = C["SERIES_MAX_DEGREE"] if max_degree is None else max_degree
    if n < 0:
        raise DomainError(f"truncation must be >= 0, got {n}")
    if n > bound:
        raise ResourceError(f"series truncation {n} exceeds the bound {bound}")


def zeta_series(n: int, q: int) -> USeries:
    """
    zeta(s) = sum over monic X of |X|^-s = 1 / (1 - q u)

    :param n: truncation
    :param q: field size
    :return:
    """
    check_truncation(n)
    return geometric(q, 1, n)


def zeta_series_enumerated(n: int, q: int) -> USeries:
    """
    The defining sum, counting monic polynomials degree by degree
    """
    check_truncation(n)
    return USeries([sum(1 for _ in enumerate_polys(d, q)) for d in range(n + 1)], n)


def _params(**kwargs) -> Dict[str, object]:
    return {k: (v.to_text() if isinstance(v, Poly) else v) for k, v in kwargs.items()}


def _sigma_series(x: Poly, n: int) -> USeries:
    # sigma_{1-s}(Q) as a polynomial in u (or sigma_{1-2s} in w = u^2)
    return polynomial(sigma_formal(x, ONE_MINUS_S), n)


def ramanujan_series_lhs(twist: Poly, n: int) -> USeries:
    """
    sum over monic X of C_X(Q) |X|^-s, degree by degree

    :param twist: Q, monic or zero
    :param n: truncation
    :return:
    """
    q = twist.q
    coeffs = [sum(ramanujan_closed(x, twist) for x in enumerate_polys(d, q)) for d in range(n + 1)]
    return USeries(coeffs, n)


def verify_ramanujan_series(twist: Poly, n: int) -> IdentityReport:
    """
    sum over monic X of C_X(Q) |X|^-s = sigma_{1-s}(Q) / zeta(s)

    Note: for Q = 0 the convention (X, 0) = X turns the sum into sum phi(X) |X|^-s, compared
          against zeta(s - 1) / zeta(s) (sigma_{1-s}(0) read as the sum over all monic divisors)

    :param twist: Q, monic or zero
    :param n: truncation
    :return:
    """
    check_truncation(n)
    if not twist.is_zero and not twist.is_monic:
        raise DomainError(f"twist must be monic or zero, got {twist}")
    q = twist.q

    lhs = ramanujan_series_lhs(twist, n)
    if twist.is_zero:
        rhs = geometric(q * q, 1, n) / zeta_series(n, q)
    else:
        rhs = _sigma_series(twist, n) / zeta_series(n, q)

    return IdentityReport.compare("ramanujan_series", _params(q=q, Q=twist, N=n), lhs, rhs)


def verify_level_series(twist: Poly, a: Poly, n: int) -> IdentityReport:
    """
    sum over monic X with A | X of C_X(Q) |X|^-2s = (sigma_{1-2s}(Q) - sigma_{1-2s}(Q A^-alpha) / (1 - q^-2as)) / zeta(2s)

    Both sides are series in w = q^-2s; alpha is the exact A-adic valuation of Q.

    :param twist: Q, monic
    :param a: level, monic irreducible
    :param n: truncation in w
    :return:
    """
    check_truncation(n)
    check_level(a)
    if twist.is_zero or not twist.is_monic:
        raise DomainError(f"twist must be monic, got {twist}")
    q = twist.q
    deg_a = int(a.degree)

    coeffs = [0] * (n + 1)
    for d in range(deg_a, n + 1):
        coeffs[d] = sum(ramanujan_closed(a * y, twist) for y in enumerate_polys(d - deg_a, q))
    lhs = USeries(coeffs, n)

    alpha, cofactor = twist.valuation(a)
    zeta = zeta_series(n, q)
    rhs = (_sigma_series(twist, n) - _sigma_series(cofactor, n) * geometric(1, deg_a, n)) / zeta

    report = IdentityReport.compare("level_series", _params(q=q, Q=twist, A=a, N=n), lhs, rhs)
    report.extra["alpha"] = alpha
    report.extra["variable"] = "w = q^-2s"
    return report


def inner_count_brute(x: Poly, a: Poly) -> int:
    """
    Number of Y mod AX with Y = 1 mod A and (X, Y) = 1
    """
    return len(admissible_fractions(x, a, 2))


def verify_constant_series(a: Poly, n: int, brute_degree: int = 2) -> IdentityReport:
    """
    sum over monic X with A | X of (phi(AX) / phi(A)) |X|^-2s = q^(a(1-2s)) / (1 - q^-2as) * zeta(2s-1) / zeta(2s)

    Both sides are series in w = q^-2s. The inner count phi(AX) / phi(A) is cross-checked by direct
    enumeration for deg X <= ``brute_degree``.

    :param a: level, monic irreducible
    :param n: truncation in w
    :param brute_degree: largest deg X of the enumeration cross-check
    :return:
    """
    check_truncation(n)
    check_level(a)
    q = a.q
    deg_a = int(a.degree)
    phi_a = totient(a)

    coeffs = [0] * (n + 1)
    inner_mismatch = []
    for d in range(deg_a, n + 1):
        total = 0
        for y in enumerate_polys(d - deg_a, q):
            x = a * y
            phi = totient(a * x)
            assert phi % phi_a == 0
            inner = phi // phi_a
            if d <= brute_degree and inner_count_brute(x, a) != inner:
                inner_mismatch.append(x.to_text())
            total += inner
        coeffs[d] = total
    lhs = USeries(coeffs, n)

    norm_a = a.norm
    zeta = zeta_series(n, q)
    rhs = USeries.monomial(deg_a, n, norm_a) * geometric(1, deg_a, n) * geometric(q * q, 1, n) / zeta

    report = IdentityReport.compare("constant_series", _params(q=q, A=a, N=n), lhs, rhs)
    report.extra["variable"] = "w = q^-2s"
    report.extra["inner_count_mismatches"] = inner_mismatch
    if inner_mismatch and report.verdict == "match":
        report.verdict = "mismatch"
    return report


def totient_series(n: int, q: int) -> USeries:
    """
    sum over monic X of phi(X) |X|^-s by enumeration

    :param n: truncation
    :param q: field size
    :return:
    """
    check_truncation(n)
    return USeries([sum(totient(x) for x in enumerate_polys(d, q)) for d in range(n + 1)], n)
