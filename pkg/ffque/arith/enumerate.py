#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Iterator,
    List,
    Tuple,
)

import functools
import itertools
import logging
from dataclasses import dataclass

import sympy

from ffque.exceptions import DomainError
from .field import check_modulus
from .poly import Poly

log = logging.getLogger(__name__)


def enumerate_polys(degree: int, q: int, monic_only: bool = True) -> Iterator[Poly]:
    """
    Every polynomial of exact degree ``degree``, once, in a deterministic order
    (leading coefficient first, then the lower coefficients lexicographically from T^0 up).

    :param degree: exact degree (>= 0)
    :param q: field size
    :param monic_only: restrict to monic polynomials
    :return: q^degree (monic) or (q-1) q^degree polynomials
    """
    check_modulus(q)
    if degree < 0:
        raise DomainError(f"degree must be >= 0, got {degree}")

    leading = [1] if monic_only else range(1, q)
    for lc in leading:
        for lower in itertools.product(range(q), repeat=degree):
            yield Poly._make(list(lower) + [lc], q)


def enumerate_up_to(max_degree: int, q: int, monic_only: bool = True, with_zero: bool = False) -> Iterator[Poly]:
    """
    Polynomials of degree 0..max_degree, by degree

    :param max_degree: largest degree
    :param q: field size
    :param monic_only: restrict to monic polynomials
    :param with_zero: yield the zero polynomial first
    :return:
    """
    if with_zero:
        yield Poly.zero(q)
    for d in range(max_degree + 1):
        yield from enumerate_polys(d, q, monic_only=monic_only)


def residues(modulus: Poly) -> Iterator[Poly]:
    """
    All residues mod ``modulus`` (every polynomial of degree < deg modulus, zero included)

    :param modulus: nonzero polynomial
    :return:
    """
    if modulus.is_zero:
        raise DomainError("residues modulo zero")
    q = modulus.q
    for digits in itertools.product(range(q), repeat=int(modulus.degree)):
        yield Poly._make(list(digits), q)


def is_irreducible(p: Poly) -> bool:
    """
    Ben-Or irreducibility test: P of degree d is irreducible iff gcd(T^(q^k) - T, P) = 1 for k <= d/2

    :param p: nonzero polynomial
    :return:
    """
    if p.is_zero:
        raise DomainError("irreducibility of zero")
    d = int(p.degree)
    if d <= 0:
        return False
    if d == 1:
        return True

    q = p.q
    t = Poly.T(q)
    x = t % p
    for _ in range(d // 2):
        x = x.pow_mod(q, p)
        if not (x - t).gcd(p).is_unit:
            return False
    return True


@functools.lru_cache(maxsize=64)
def irreducibles(degree: int, q: int) -> Tuple[Poly, ...]:
    """
    Monic irreducibles of the given degree in enumeration order

    :param degree: exact degree (>= 1)
    :param q: field size
    :return:
    """
    result = tuple(p for p in enumerate_polys(degree, q) if is_irreducible(p))
    log.debug(f"Found {len(result)} monic irreducibles of degree {degree} over F_{q}")
    return result


def integer_mobius(n: int) -> int:
    """
    Classical Moebius function on positive integers
    """
    assert n >= 1
    exponents = sympy.factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return (-1) ** len(exponents)


def count_irreducibles(degree: int, q: int) -> int:
    """
    Number of monic irreducibles of degree d: (1/d) sum_{e | d} mu(d/e) q^e

    :param degree: exact degree (>= 1)
    :param q: field size
    :return:
    """
    assert degree >= 1
    total = sum(integer_mobius(degree // e) * q ** e for e in range(1, degree + 1) if degree % e == 0)
    assert total % degree == 0
    return total // degree


@dataclass(frozen=True)
class Factorization(object):
    """
    Factorization X = unit * prod P_i^e_i into monic irreducibles

    Attributes:
        unit: leading coefficient of X
        factors: (P_i, e_i) pairs sorted by ``Poly.sort_key``
    """
    unit: int
    factors: Tuple[Tuple[Poly, int], ...]

    @property
    def primes(self) -> Tuple[Poly, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def omega(self) -> int:
        return len(self.factors)

    def expand(self, q: int) -> Poly:
        result = Poly.constant(self.unit, q)
        for p, e in self.factors:
            result = result * p ** e
        return result

    def __repr__(self) -> str:
        body = " * ".join(f"({p})^{e}" if e > 1 else f"({p})" for p, e in self.factors)
        return f"Factorization({self.unit}{' * ' + body if body else ''})"


@functools.lru_cache(maxsize=65536)
def factor(x: Poly) -> Factorization:
    """
    Trial division by monic irreducibles of degree <= deg(X)/2

    :param x: nonzero polynomial
    :return:
    """
    if x.is_zero:
        raise DomainError("factorization of the zero polynomial")

    q = x.q
    unit = x.lc
    rem = x.monic()
    factors: List[Tuple[Poly, int]] = []

    d = 1
    while 2 * d <= rem.degree:
        for p in irreducibles(d, q):
            if 2 * d > rem.degree:
                break
            e, cofactor = (0, rem) if not p.divides(rem) else rem.valuation(p)
            if e:
                factors.append((p, e))
                rem = cofactor
        d += 1

    if rem.degree >= 1:
        factors.append((rem, 1))

    factors.sort(key=lambda f: f[0].sort_key())
    return Factorization(unit=unit, factors=tuple(factors))


def divisors(x: Poly) -> List[Poly]:
    """
    Monic divisors of X, sorted

    :param x: nonzero polynomial
    :return:
    """
    f = factor(x)
    result = [Poly.one(x.q)]
    for p, e in f.factors:
        result = [d * p ** k for d in result for k in range(e + 1)]
    result.sort(key=Poly.sort_key)
    return result


def divisor_degrees(x: Poly) -> List[int]:
    """
    Degrees of all monic divisors (with multiplicity), from the factorization only

    :param x: nonzero polynomial
    :return:
    """
    f = factor(x)
    degrees = [0]
    for p, e in f.factors:
        dp = int(p.degree)
        degrees = [d + k * dp for d in degrees for k in range(e + 1)]
    return degrees


def squarefree_divisors(x: Poly) -> List[Tuple[Poly, int]]:
    """
    Monic squarefree divisors D of X with mu(D)

    :param x: nonzero polynomial
    :return:
    """
    q = x.q
    result = [(Poly.one(q), 1)]
    for p in factor(x).primes:
        result += [(d * p, -m) for d, m in result]
    return result
