#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import logging
from dataclasses import dataclass

from ffque.arith import (
    Laurent,
    Poly,
)
from ffque.exceptions import PrecisionError
from ffque.func.cyclotomic import CycInt

log = logging.getLogger(__name__)


def chi(x: Laurent) -> CycInt:
    """
    Residue character of k_inf / F_q[T]: zeta_q^(a_1) with a_1 the coefficient of T^-1

    :param x: series known at least modulo T^-2
    :return:
    """
    if x.absprec < 2:
        raise PrecisionError(f"chi needs the T^-1 coefficient, series known modulo T^{-x.absprec}")
    return CycInt.root(x.coefficient(1), x.q)


def chi_twisted(twist: Poly, x: Laurent) -> CycInt:
    """
    chi_Q(x) = chi(Q x)

    :param twist: Q, any polynomial
    :param x: series with absolute precision >= deg Q + 2
    :return:
    """
    if twist.is_zero:
        return CycInt.one(x.q)
    need = int(twist.degree) + 2
    if x.absprec < need:
        raise PrecisionError(f"chi_Q with deg Q = {twist.degree} needs absolute precision {need}, got {x.absprec}")
    return chi(x * twist)


@dataclass(frozen=True)
class Character(object):
    """
    The twisted additive character chi_Q

    Attributes:
        twist: the polynomial Q
    """
    twist: Poly

    def __call__(self, x: Laurent) -> CycInt:
        return chi_twisted(self.twist, x)

    def conjugate(self) -> "Character":
        return Character(-self.twist)
