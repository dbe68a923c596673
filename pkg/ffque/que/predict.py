#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Dict,
)

import logging
import math
from dataclasses import dataclass

from ffque.arith import Poly
from ffque.config import check_spectral_parameter
from ffque.eisenstein import index_gamma0
from .weight import TestWeight

log = logging.getLogger(__name__)

# |G(0) bracket - G(0) closed| accepted, relative
G0_TOL = 1e-10


def target_slope(q: int) -> float:
    """
    (1 + q^-1) / (2 log q), the coefficient of log|A| in the leading term
    """
    return (1 + 1 / q) / (2 * math.log(q))


def residue_slope(q: int, kappa: float) -> float:
    """
    kappa (1 + q^-1) / log q, the growth of (m / H(0)) I2 per unit of log|A| under the leading model

    The exact twisted sums pick up the whole residue at s = 0, twice the half-residue of ``target_slope``,
    and kappa for the non-monic twists.
    """
    return 2 * kappa * target_slope(q)


def g0_bracket(norm: int, t: float, q: int) -> float:
    """
    G(0) as the three-term combination

        |A| (1 - q^-1) / (q^2 |1 - q^(2it)|^2) (2 / (1 - q^-1) - q^(-2it) / (1 - q^(-1-2it)) - q^(2it) / (1 - q^(-1+2it)))

    :param norm: |A|
    :param t: spectral parameter
    :param q: field size
    :return:
    """
    check_spectral_parameter(t, q)
    v = complex(q) ** (2j * t)
    r = 1 / q
    bracket = 2 / (1 - r) - (1 / v) / (1 - r / v) - v / (1 - r * v)
    value = norm * (1 - r) / (q ** 2 * abs(1 - v) ** 2) * bracket
    assert abs(value.imag) <= 1e-9 * max(1.0, abs(value.real))
    return value.real


def g0_closed(norm: int, t: float, q: int) -> float:
    """
    G(0) = |A| (1 + q^-1) / (q^2 |1 - q^(-1-2it)|^2)
    """
    check_spectral_parameter(t, q)
    return norm * (1 + 1 / q) / (q ** 2 * abs(1 - complex(q) ** (-1 - 2j * t)) ** 2)


@dataclass(frozen=True)
class Prediction(object):
    """
    Leading term of I for one level

    Attributes:
        level: A
        t: spectral parameter
        H0: total mass of psi
        m: index |A| + 1
        leading: (1 + q^-1) / (2 log q) log|A| H(0) / m
        g0_bracket: G(0) from the three-term combination
        g0_closed: G(0) in closed form
    """
    level: Poly
    t: float
    H0: float
    m: int
    leading: float
    g0_bracket: float
    g0_closed: float

    @property
    def g0_error(self) -> float:
        return abs(self.g0_bracket - self.g0_closed) / abs(self.g0_closed)

    @property
    def g0_ok(self) -> bool:
        return self.g0_error <= G0_TOL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "A": self.level.to_text(),
            "t": self.t,
            "H0": self.H0,
            "m": self.m,
            "predicted_leading": self.leading,
            "g0_bracket": self.g0_bracket,
            "g0_closed": self.g0_closed,
            "g0_error": self.g0_error,
        }


def predict(level: Poly, t: float, weight: TestWeight) -> Prediction:
    """
    Residue-side prediction for level A, with the G(0) cross-check

    :param level: monic irreducible A
    :param t: spectral parameter
    :param weight: psi
    :return:
    """
    q = level.q
    m = index_gamma0(level)
    h0 = float(weight.mass)
    leading = target_slope(q) * math.log(level.norm) * h0 / m
    out = Prediction(level, t, h0, m, leading, g0_bracket(level.norm, t, q), g0_closed(level.norm, t, q))
    assert out.g0_ok, f"G(0) forms disagree at t={t}: {out.g0_bracket} vs {out.g0_closed}"
    return out


def predicted_leading(level: Poly, t: float, weight: TestWeight) -> float:
    """
    ((1 + q^-1) / (2 log q)) log|A| H(0) / (|A| + 1)

    :param level: monic irreducible A
    :param t: spectral parameter
    :param weight: psi
    :return:
    """
    return predict(level, t, weight).leading
