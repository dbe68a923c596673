#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Dict,
    Union,
)

import collections
import logging
from dataclasses import dataclass
from fractions import Fraction

from ffque.arith import (
    Poly,
    divisor_degrees,
    factor,
    residues,
)
from ffque.exceptions import DomainError

log = logging.getLogger(__name__)


def _check_monic(x: Poly, name: str) -> None:
    if x.is_zero:
        raise DomainError(f"{name} of the zero polynomial")
    if not x.is_monic:
        raise DomainError(f"{name} expects a monic polynomial, got {x}")


def mobius(x: Poly) -> int:
    """
    Moebius function of a monic polynomial

    :param x: monic, nonzero
    :return: 0 if a square divides X, else (-1)^(number of prime factors)
    """
    _check_monic(x, "mobius")
    f = factor(x)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if f.omega % 2 else 1


def totient(x: Poly) -> int:
    """
    Euler totient, the number of units of F_q[T]/(X): |X| prod_{P | X} (1 - 1/|P|)

    :param x: nonzero polynomial
    :return:
    """
    if x.is_zero:
        raise DomainError("totient of the zero polynomial")
    result = 1
    for p, e in factor(x).factors:
        norm = p.norm
        result *= norm ** (e - 1) * (norm - 1)
    return result


def totient_brute(x: Poly) -> int:
    """
    Count residues mod X coprime to X

    :param x: nonzero polynomial
    :return:
    """
    return sum(1 for y in residues(x) if not y.is_zero and y.gcd(x).is_unit) + (1 if x.is_unit else 0)


def sigma(x: Poly, nu: complex) -> complex:
    """
    Divisor power sum sigma_nu(Q) = sum_{D | Q monic} |D|^nu

    :param x: monic, nonzero
    :param nu: complex exponent
    :return:
    """
    _check_monic(x, "sigma")
    q = x.q
    return sum(q ** (nu * d) for d in divisor_degrees(x))


@dataclass(frozen=True)
class Exponent(object):
    """
    Affine exponent nu = const - slope * s, so |D|^nu = q^(const deg D) u^(slope deg D) with u = q^-s

    Attributes:
        const: constant part
        slope: coefficient of -s
    """
    const: int
    slope: int

    def __str__(self) -> str:
        return f"{self.const}-{self.slope}s"


# the exponents appearing in the divisor sums of the coefficient formulas
ONE_MINUS_S = Exponent(1, 1)
ONE_MINUS_2S = Exponent(1, 2)


def sigma_formal(x: Poly, nu: Exponent) -> Dict[int, Fraction]:
    """
    sigma_nu(Q) as an exact polynomial in u = q^-s

    :param x: monic, nonzero
    :param nu: affine exponent
    :return: map u-degree -> coefficient
    """
    _check_monic(x, "sigma")
    q = x.q
    out: Dict[int, Fraction] = collections.defaultdict(Fraction)
    for d in divisor_degrees(x):
        out[nu.slope * d] += Fraction(q) ** (nu.const * d)
    return dict(out)


def sigma_symbolic(x: Poly) -> Dict[int, int]:
    """
    sigma_nu(Q) as a polynomial in the formal unit b = q^nu: the number of monic divisors per degree

    :param x: monic, nonzero
    :return: map b-degree -> count
    """
    _check_monic(x, "sigma")
    return dict(collections.Counter(divisor_degrees(x)))


def evaluate_formal(poly: Dict[int, Union[int, Fraction]], value: complex) -> complex:
    """
    Evaluate a formal polynomial (degree -> coefficient) at a complex point

    :param poly:
    :param value:
    :return:
    """
    return sum((complex(c) * value ** k for k, c in poly.items()), 0j)
