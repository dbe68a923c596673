#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Iterable,
    List,
)

import cmath
import functools
import logging
import math

from ffque.arith import (
    count_irreducibles,
    enumerate_polys,
)
from ffque.config import check_spectral_parameter
from ffque.exceptions import DomainError
from ffque.func import sigma_symbolic
from .identities import check_truncation
from .report import IdentityReport
from .series import USeries
from .vpoly import VPoly

log = logging.getLogger(__name__)


def local_factor(d: int, trunc: int) -> USeries:
    """
    sum_k sigma_{2it}(P^k) sigma_{-2it}(P^k) y^k for a prime P of degree d, with v = q^(2it) formal

    :param d: degree of the prime
    :param trunc: truncation in y
    :return:
    """
    coeffs = []
    for k in range(trunc + 1):
        up = VPoly({d * j: 1 for j in range(k + 1)})
        coeffs.append(up * up.substitute(-1))
    return USeries(coeffs, trunc)


@functools.lru_cache(maxsize=16)
def divisor_square_series(n: int, q: int) -> USeries:
    """
    S_e = sum over monic Q of degree e of |sigma_{2it}(Q)|^2, as exact Laurent polynomials in v = q^(2it)

    Computed as the Euler product over degrees: prod_d F_d(x^d)^(N_d), N_d the number of monic
    irreducibles of degree d.

    :param n: largest degree
    :param q: field size
    :return: series in x whose x^e coefficient is S_e
    """
    check_truncation(n)
    result = USeries.one(n)
    for d in range(1, n + 1):
        local = local_factor(d, n // d).power(count_irreducibles(d, q))
        result = result * USeries.from_dict({i * d: c for i, c in enumerate(local.coeffs)}, n)
    return result


def divisor_square_enumerated(n: int, q: int) -> USeries:
    """
    The same coefficients by enumerating every monic Q of degree <= n
    """
    coeffs = []
    for e in range(n + 1):
        total = VPoly()
        for x in enumerate_polys(e, q):
            up = VPoly(sigma_symbolic(x))
            total = total + up * up.substitute(-1)
        coeffs.append(total)
    return USeries(coeffs, n)


def ramanujan_identity_closed(s: complex, t: float, q: int) -> complex:
    """
    (1 - q^(-2s-1)) / ((1 - q^-s)^2 (1 - q^(-s+2it)) (1 - q^(-s-2it)))
    """
    return (1 - q ** (-2 * s - 1)) / ((1 - q ** -s) ** 2 * (1 - q ** (-s + 2j * t)) * (1 - q ** (-s - 2j * t)))


def ramanujan_identity_tail(n: int, sigma: float, q: int) -> float:
    """
    Bound on sum_{e > n} |S_e| q^(-e(sigma+1)), from |S_e| <= C(e+3, 3) q^e

    :param n: last summed degree
    :param sigma: Re(s) > 0
    :param q: field size
    :return:
    """
    if sigma <= 0:
        raise DomainError(f"the divisor square series converges for Re(s) > 0 only, got Re(s) = {sigma}")
    ratio = q ** -sigma
    total = 0.0
    e = n + 1
    while True:
        term = math.comb(e + 3, 3) * ratio ** e
        total += term
        # terms decrease from here on
        if e > 3 / (1 - ratio) and term < 1e-18 * max(total, 1e-300):
            return total
        e += 1


def verify_ramanujan_identity(t: float, s_samples: Iterable[complex], n: int, q: int, brute_degree: int = 3) -> IdentityReport:
    """
    sum over monic Q with deg Q <= n of |sigma_{2it}(Q)|^2 / |Q|^(s+1) against the closed product

    :param t: spectral parameter, nonsingular
    :param s_samples: sample points with Re(s) > 0
    :param n: last summed degree
    :param q: field size
    :param brute_degree: degrees cross-checked against direct enumeration
    :return:
    """
    check_spectral_parameter(t, q)
    series = divisor_square_series(n, q)

    m = min(brute_degree, n)
    enumerated = divisor_square_enumerated(m, q)
    enumeration_ok = series.truncate(m).first_mismatch(enumerated) is None

    v = cmath.exp(2j * t * math.log(q))
    lhs: List[complex] = []
    rhs: List[complex] = []
    samples = []
    passed = enumeration_ok
    for s in s_samples:
        s = complex(s)
        bound = ramanujan_identity_tail(n, s.real, q)
        left = series.evaluate(q ** -(s + 1), v)
        right = ramanujan_identity_closed(s, t, q)
        err = abs(left - right)
        ok = err <= bound + 1e-12 * abs(right)
        passed &= ok
        lhs.append(left)
        rhs.append(right)
        samples.append({"s": s, "abs_error": err, "rel_error": err / abs(right), "tail_bound": bound, "ok": ok})
        log.debug(f"Divisor square series at s={s}: error {err:.3e}, tail bound {bound:.3e}")

    return IdentityReport(
        identity="ramanujan_identity",
        parameters={"q": q, "t": t, "N": n},
        lhs=lhs,
        rhs=rhs,
        verdict="match" if passed else "mismatch",
        extra={"samples": samples, "enumeration_degree": m, "enumeration_ok": enumeration_ok},
    )
