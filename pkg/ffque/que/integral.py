#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Callable,
    Dict,
    Optional,
)

import logging
from dataclasses import dataclass

from ffque.arith import (
    Poly,
    enumerate_polys,
)
from ffque.config import (
    CONFIG as C,
    QUE_MODELS,
    check_spectral_parameter,
)
from ffque.eisenstein import (
    coeff_closed,
    coeff_unfolded,
)
from ffque.exceptions import (
    DomainError,
    ResourceError,
)
from ffque.func import (
    check_level,
    sigma,
)
from .weight import TestWeight

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class IValues(object):
    """
    The pairing of |E(., 1/2 + it)|^2 with the incomplete Eisenstein series of psi

    Attributes:
        I1: contribution of the constant terms (Q = 0)
        I2: contribution of the twisted terms (Q != 0), scaled by kappa
        num_twists: number of (n, Q) terms summed in I2
        cusp: the level independent part sum_n psi(q^n) |q^(ns)|^2 of I1
        kappa: unit multiplicity used for I2
    """
    I1: float
    I2: float
    num_twists: int
    cusp: float = 0.0
    kappa: float = 1.0

    @property
    def I(self) -> float:
        return self.I1 + self.I2

    @property
    def I1_excess(self) -> float:
        return self.I1 - self.cusp

    def to_dict(self) -> Dict[str, Any]:
        return {"I1": self.I1, "I2": self.I2, "I": self.I, "cusp": self.cusp, "num_twists": self.num_twists,
                "kappa": self.kappa}


def _twist_top(n: int, level: Poly, model: str) -> int:
    # largest deg Q with a possibly nonzero coefficient at height n
    if model == "unfolded":
        return -2 - n
    return int(level.degree) - 2 - n


def _leading_coefficient(n: int, twist: Poly, s: complex, level: Poly) -> complex:
    # closed formula with the sigma_{1-2s}(Q A^-alpha) term dropped
    if twist.is_zero:
        return coeff_closed(n, twist, s, level)
    q, a, e = level.q, int(level.degree), int(twist.degree)
    if n > a - 2 - e:
        return 0j
    qc = complex(q)
    return (qc ** (n * (1 - s) + 1 - a) * (1 - qc ** (-2 * s)) * (1 - qc ** ((a - 1 - e - n) * (1 - 2 * s)))
            * sigma(twist, 1 - 2 * s))


COEFFICIENT_MODELS: Dict[str, Callable[[int, Poly, complex, Poly], complex]] = {
    "closed": coeff_closed,
    "leading": _leading_coefficient,
    "unfolded": coeff_unfolded,
}


def resolve_kappa(q: int, kappa: Optional[float] = None) -> float:
    """
    Unit multiplicity for I2: the explicit value, else ``QUE_KAPPA``, else q - 1 (the number of units
    of F_q, the value the Parseval calibration measures)
    """
    if kappa is None:
        kappa = C["QUE_KAPPA"]
    return float(q - 1) if kappa is None else float(kappa)


def cusp_term(weight: TestWeight, q: int) -> float:
    """
    sum_n psi(q^n) q^n, the part |q^(ns)|^2 of |c(n, 0, s)|^2 on Re s = 1/2; it does not depend on A
    """
    return sum(float(value) * float(q) ** n for n, value in weight.items())


def I1_excess_bound(level: Poly, weight: TestWeight) -> float:
    """
    Upper bound for |I1 - cusp| under the closed constant term

        sum_n |psi(q^n)| (2 q^(n+1-a) / (1 - q^-a) + q^(n+2-2a) / (1 - q^-a)^2)

    Multiplied by m = |A| + 1 it stays bounded in deg A.

    :param level: monic irreducible A
    :param weight: psi
    :return:
    """
    q, a = level.q, int(level.degree)
    gap = 1 - float(q) ** -a
    return sum(abs(float(value)) * (2 * float(q) ** (n + 1 - a) / gap + float(q) ** (n + 2 - 2 * a) / gap ** 2)
               for n, value in weight.items())


def compute_I(level: Poly, t: float, weight: TestWeight, kappa: Optional[float] = None, model: Optional[str] = None,
              max_twist_degree: Optional[int] = None) -> IValues:
    """
    I = sum_n psi(q^n) (|c(n, 0, 1/2 + it)|^2 + kappa sum_{monic Q} |c(n, Q, 1/2 + it)|^2)

    The sum over Q is finite: every coefficient model vanishes above a degree that depends on n.

    :param level: monic irreducible A
    :param t: spectral parameter, nonzero with q^(2it) != 1
    :param weight: psi
    :param kappa: unit multiplicity constant (default ``resolve_kappa``)
    :param model: coefficient model ("closed", "leading" or "unfolded"; default ``QUE_MODEL``)
    :param max_twist_degree: resource bound on deg Q (default ``QUE_MAX_TWIST_DEGREE``)
    :return:
    """
    check_level(level)
    check_spectral_parameter(t, level.q)
    model = C["QUE_MODEL"] if model is None else model
    if model not in COEFFICIENT_MODELS:
        raise DomainError(f"unknown coefficient model {model!r} (expected one of {QUE_MODELS})")
    bound = C["QUE_MAX_TWIST_DEGREE"] if max_twist_degree is None else max_twist_degree
    kappa = resolve_kappa(level.q, kappa)

    coefficient = COEFFICIENT_MODELS[model]
    s = complex(0.5, t)
    zero = Poly.zero(level.q)

    I1 = 0.0
    I2 = 0.0
    count = 0
    for n, value in weight.items():
        psi = float(value)
        I1 += psi * abs(coefficient(n, zero, s, level)) ** 2

        top = _twist_top(n, level, model)
        if top > bound:
            raise ResourceError(f"height n={n} needs twists up to degree {top}, above the bound {bound}")
        inner = 0.0
        for e in range(top + 1):
            for twist in enumerate_polys(e, level.q):
                inner += abs(coefficient(n, twist, s, level)) ** 2
                count += 1
        I2 += psi * kappa * inner

    log.debug(f"I at A={level} t={t} psi={weight} ({model}, kappa={kappa}): I1={I1:.12g} I2={I2:.12g} "
              f"over {count} twists")
    return IValues(I1, I2, count, cusp_term(weight, level.q), kappa)
