#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Dict,
    Tuple,
)

import logging
import math
from dataclasses import (
    dataclass,
    field,
)

from ffque.config import check_spectral_parameter
from ffque.exceptions import DomainError

log = logging.getLogger(__name__)


def whittaker(t: float, beta: int, q: int) -> complex:
    """
    W(eps T^-beta) = (q^(it(beta+1)) - q^(-it(beta+1))) / (q^(it) - q^(-it)) for beta >= 0, else 0

    :param t: spectral parameter, nonsingular
    :param beta: integer
    :param q: field size
    :return:
    """
    check_spectral_parameter(t, q)
    if beta < 0:
        return 0j
    theta = t * math.log(q)
    return complex(math.sin((beta + 1) * theta) / math.sin(theta))


@dataclass
class NSums(object):
    """
    Both geometric sums over the height n, each in closed form and by direct summation

    Attributes:
        a: deg A
        deg_q: deg Q
        s: complex point
        t: spectral parameter
        first_closed: closed form of the first sum
        first_direct: direct sum from the cutoff up
        first_tail: bound on the omitted terms of the first sum
        second_printed: q^(a-1-deg Q) (q^(-iat)/(1-q^(2s+it)) - q^(iat)/(1-q^(2s-it))) / (q^(it)-q^(-it))
        second_derived: geometric evaluation of the second sum
        second_direct: direct sum from the cutoff up
        second_tail: bound on the omitted terms of the second sum
        verdicts: pairing -> agreement within the tail bound
    """
    a: int
    deg_q: int
    s: complex
    t: float
    first_closed: complex = 0j
    first_direct: complex = 0j
    first_tail: float = 0.0
    second_printed: complex = 0j
    second_derived: complex = 0j
    second_direct: complex = 0j
    second_tail: float = 0.0
    verdicts: Dict[str, bool] = field(default_factory=dict)

    @property
    def pair(self) -> Tuple[complex, complex]:
        return self.first_closed, self.second_derived


def _agree(x: complex, y: complex, bound: float) -> bool:
    return abs(x - y) <= bound + 1e-12 * max(1.0, abs(x), abs(y))


def geometric_n_sums(a: int, deg_q: int, s: complex, t: float, q: int, cutoff: int = -40) -> NSums:
    """
    The two sums over n arising from the cusp form contribution:

        first:  sum_{n <= a-2-deg Q} q^n K(n)
        second: sum_{n <= -2-deg Q} q^(2ns + (1-2s)(a-1-deg Q)) K(n)

    with K(n) = (q^(-it(n+1+deg Q)) - q^(it(n+1+deg Q))) / (q^(it) - q^(-it)).

    Note: deg Q > a - 2 is the vacuous case of the coefficient range and gives (0, 0)

    :param a: deg A >= 1
    :param deg_q: deg Q >= 0
    :param s: complex point, Re(s) > 0 for the second sum
    :param t: spectral parameter, nonsingular
    :param q: field size
    :param cutoff: lowest n of the direct sums
    :return:
    """
    check_spectral_parameter(t, q)
    s = complex(s)
    out = NSums(a=a, deg_q=deg_q, s=s, t=t)
    if deg_q > a - 2:
        out.verdicts = {"first": True, "second_printed": True, "second_derived": True}
        return out
    if s.real <= 0:
        raise DomainError(f"the second sum over n diverges for Re(s) <= 0, got s = {s}")

    e = deg_q
    qit = complex(q) ** (1j * t)
    den = qit - 1 / qit

    def kernel(n: int) -> complex:
        k = n + 1 + e
        return (qit ** -k - qit ** k) / den

    out.first_closed = q ** (a - 2 - e) / den * (qit ** -(a - 1) / (1 - q ** -(1 - 1j * t)) - qit ** (a - 1) / (1 - q ** -(1 + 1j * t)))
    out.first_direct = sum((q ** n * kernel(n) for n in range(cutoff, a - 1 - e)), 0j)
    out.first_tail = 2 * q ** cutoff / ((q - 1) * abs(den))

    scale = complex(q) ** ((1 - 2 * s) * (a - 1 - e))
    out.second_printed = q ** (a - 1 - e) / den * (qit ** -a / (1 - q ** (2 * s + 1j * t)) - qit ** a / (1 - q ** (2 * s - 1j * t)))
    out.second_derived = scale * complex(q) ** (-2 * s * (2 + e)) / den * (qit / (1 - q ** (-2 * s + 1j * t)) - 1 / qit / (1 - q ** (-2 * s - 1j * t)))
    out.second_direct = sum((complex(q) ** (2 * n * s) * scale * kernel(n) for n in range(cutoff, -1 - e)), 0j)
    sigma = s.real
    out.second_tail = 2 * abs(scale) * q ** (2 * sigma * (cutoff - 1)) / ((1 - q ** (-2 * sigma)) * abs(den))

    out.verdicts = {
        "first": _agree(out.first_closed, out.first_direct, out.first_tail),
        "second_printed": _agree(out.second_printed, out.second_direct, out.second_tail),
        "second_derived": _agree(out.second_derived, out.second_direct, out.second_tail),
    }
    log.debug(f"n-sums a={a} deg Q={e} s={s} t={t}: {out.verdicts}")
    return out
