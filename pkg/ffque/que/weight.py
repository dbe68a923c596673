#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Dict,
    Iterator,
    Tuple,
)

import logging
import math
from dataclasses import (
    dataclass,
    field,
)
from fractions import Fraction

import numpy as np

from ffque.exceptions import DomainError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TestWeight(object):
    """
    Compactly supported weight psi on the height lattice, stored as n -> psi(q^n)

    Attributes:
        support: nonzero values of psi(q^n)
    """
    # keep pytest from collecting the class
    __test__ = False

    support: Dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {int(n): Fraction(v) for n, v in self.support.items() if Fraction(v) != 0}
        object.__setattr__(self, "support", dict(sorted(cleaned.items())))

    @classmethod
    def delta(cls, n: int = 0) -> "TestWeight":
        return cls({n: Fraction(1)})

    @classmethod
    def parse(cls, text: str) -> "TestWeight":
        """
        Parse a support list "n:value,n:value" (values are rationals, e.g. "0:1,1:1/2")

        :param text: support list
        :return:
        """
        support = {}
        for item in text.replace(" ", "").split(","):
            if not item:
                continue
            if ":" not in item:
                raise DomainError(f"weight entries are 'n:value', got {item!r}")
            n, value = item.split(":", 1)
            try:
                support[int(n)] = support.get(int(n), Fraction(0)) + Fraction(value)
            except (ValueError, ZeroDivisionError) as e:
                raise DomainError(f"invalid weight entry {item!r}") from e
        weight = cls(support)
        if not weight.support:
            raise DomainError(f"weight {text!r} has empty support")
        return weight

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self.support.items())

    @property
    def mass(self) -> Fraction:
        """
        H(0), the sum of all values
        """
        return sum(self.support.values(), Fraction(0))

    def __call__(self, n: int) -> Fraction:
        return self.support.get(n, Fraction(0))

    def to_text(self) -> str:
        return ",".join(f"{n}:{v}" for n, v in self.support.items())

    def __str__(self) -> str:
        return self.to_text()


def mellin(weight: TestWeight, s: complex, q: int) -> complex:
    """
    H(s) = sum_n psi(q^n) q^(-ns)

    :param weight: psi
    :param s: complex point
    :param q: field size
    :return:
    """
    return sum((float(v) * complex(q) ** (-n * complex(s)) for n, v in weight.items()), 0j)


def mellin_inverse(weight: TestWeight, n: int, q: int, points: int = 256) -> float:
    """
    psi(q^n) recovered as log q times the integral of H(s) q^(ns) ds / (2 pi i) over s = iy,
    |y| <= pi / log q, by the trapezoid rule

    :param weight: psi
    :param n: height
    :param q: field size
    :param points: number of quadrature intervals
    :return:
    """
    if points < 2:
        raise DomainError(f"quadrature needs at least 2 intervals, got {points}")
    log_q = math.log(q)
    y = np.linspace(-math.pi / log_q, math.pi / log_q, points + 1)
    s = 1j * y
    values = np.zeros_like(s)
    for m, v in weight.items():
        values += float(v) * np.exp((n - m) * s * log_q)
    # ds / (2 pi i) = dy / (2 pi)
    integral = np.trapezoid(values, y) / (2 * math.pi)
    return float((log_q * integral).real)
