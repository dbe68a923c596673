#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Iterable,
    Iterator,
    List,
    Optional,
    Tuple,
)

import csv
import functools
import logging
from dataclasses import (
    astuple,
    dataclass,
    fields,
)
from pathlib import Path

from ffque.arith import (
    Laurent,
    Poly,
    enumerate_up_to,
    is_irreducible,
    residues,
)
from ffque.config import CONFIG as C
from ffque.exceptions import (
    DomainError,
    ResourceError,
)
from .cyclotomic import CycInt
from .multiplicative import (
    mobius,
    totient,
)

log = logging.getLogger(__name__)


def check_level(a: Poly) -> None:
    """
    Levels are monic irreducible polynomials
    """
    if a.is_zero or not a.is_monic or not is_irreducible(a):
        raise DomainError(f"level must be monic irreducible, got {a}")


@functools.lru_cache(maxsize=4096)
def admissible_fractions(x: Poly, a: Poly, absprec: int) -> Tuple[Laurent, ...]:
    """
    Y / X for every residue Y mod AX with Y = 1 mod A and (X, Y) = 1

    :param x: monic, nonzero
    :param a: monic irreducible
    :param absprec: absolute precision of the expansions
    :return:
    """
    one = Poly.one(x.q)
    out = []
    for z in residues(x):
        y = one + a * z
        if not y.gcd(x).is_unit:
            continue
        out.append(Laurent.quotient(y, x, absprec))
    return tuple(out)


def ramanujan_brute(x: Poly, twist: Poly, a: Poly, max_degree: Optional[int] = None) -> CycInt:
    """
    Ramanujan sum C_X(Q) by enumeration: sum of chi_Q(Y / X) over Y mod AX, Y = 1 mod A, (X, Y) = 1

    :param x: monic, nonzero
    :param twist: Q, any polynomial
    :param a: level, monic irreducible
    :param max_degree: bound on deg(AX) (default ``RAMANUJAN_MAX_DEGREE``)
    :return: exact value in Z[zeta_q]
    """
    # imported here: the character module itself builds on CycInt
    from ffque.char import chi_twisted

    if x.is_zero or not x.is_monic:
        raise DomainError(f"Ramanujan sum needs a monic modulus, got {x}")
    check_level(a)

    bound = C["RAMANUJAN_MAX_DEGREE"] if max_degree is None else max_degree
    if a.degree + x.degree > bound:
        raise ResourceError(f"deg(AX) = {a.degree + x.degree} exceeds the enumeration bound {bound}")

    # chi_0 is trivial: only the T^-1 digit is ever read
    absprec = 2 if twist.is_zero else int(twist.degree) + 2
    total = CycInt.zero(x.q)
    for frac in admissible_fractions(x, a, absprec):
        total = total + chi_twisted(twist, frac)
    return total


def ramanujan_closed(x: Poly, twist: Poly) -> int:
    """
    mu(X / (X, Q)) phi(X) / phi(X / (X, Q)), with (X, 0) = X

    :param x: monic, nonzero
    :param twist: Q, any polynomial
    :return:
    """
    if x.is_zero or not x.is_monic:
        raise DomainError(f"Ramanujan sum needs a monic modulus, got {x}")
    g = x.gcd(twist)
    y = x // g
    phi_x, phi_y = totient(x), totient(y)
    assert phi_x % phi_y == 0
    return mobius(y) * (phi_x // phi_y)


@dataclass(frozen=True)
class DiscrepancyRow(object):
    """
    One brute-force versus closed-form comparison

    Attributes:
        q: field size
        A: level
        X: modulus
        Q: twist
        brute_value: enumerated value in Z[zeta_q]
        closed_value: closed form
        match_flag: brute equals closed
        domain: "A|X" or "A!|X"
    """
    q: int
    A: str
    X: str
    Q: str
    brute_value: str
    closed_value: int
    match_flag: bool
    domain: str


def ramanujan_discrepancies(a_list: Iterable[Poly], x_degree: int, q_degree: int) -> Iterator[DiscrepancyRow]:
    """
    Compare both evaluations over all monic X with deg X <= x_degree and all monic Q with deg Q <= q_degree
    plus Q = 0

    :param a_list: levels
    :param x_degree: largest deg X
    :param q_degree: largest deg Q
    :return:
    """
    for a in a_list:
        q = a.q
        mismatches = 0
        for x in enumerate_up_to(x_degree, q):
            for twist in enumerate_up_to(q_degree, q, with_zero=True):
                brute = ramanujan_brute(x, twist, a)
                closed = ramanujan_closed(x, twist)
                match = brute == closed
                mismatches += not match
                yield DiscrepancyRow(
                    q=q,
                    A=a.to_text(),
                    X=x.to_text(),
                    Q=twist.to_text(),
                    brute_value=str(brute),
                    closed_value=closed,
                    match_flag=match,
                    domain="A|X" if a.divides(x) else "A!|X",
                )
        log.info(f"Ramanujan sums at level {a}: {mismatches} mismatches")


def write_discrepancies(rows: Iterable[DiscrepancyRow], path: Path) -> int:
    """
    Write the discrepancy report as CSV

    :param rows:
    :param path: target file
    :return: number of rows written
    """
    count = 0
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow([fld.name for fld in fields(DiscrepancyRow)])
        for row in rows:
            writer.writerow(astuple(row))
            count += 1
    log.info(f"Wrote {count} rows to '{path}'")
    return count


def mismatches(rows: Iterable[DiscrepancyRow]) -> List[DiscrepancyRow]:
    return [row for row in rows if not row.match_flag]
