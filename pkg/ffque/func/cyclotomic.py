#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Iterable,
    Tuple,
    Union,
)

import cmath
import logging
import math
from fractions import Fraction

from ffque.arith.field import check_modulus
from ffque.exceptions import DomainError

log = logging.getLogger(__name__)

TScalar = Union[int, Fraction]


class CycInt(object):
    """
    Exact element of Q(zeta_q) over the power basis 1, zeta, ..., zeta^(q-2)

    Note: zeta^(q-1) is rewritten as -(1 + zeta + ... + zeta^(q-2)), so every element has exactly one
          representative. Elements with integer coordinates are cyclotomic integers; averages produced
          by exact integration carry ``Fraction`` coordinates.
    """

    __slots__ = ("q", "_c")

    def __init__(self, coeffs: Iterable[TScalar], q: int) -> None:
        check_modulus(q)
        c = list(coeffs)
        if len(c) > q:
            raise DomainError(f"too many coordinates ({len(c)}) for zeta_{q}")
        c += [0] * (q - len(c))
        self.q = q
        self._c = self._normalize(c)

    @staticmethod
    def _normalize(c: list) -> Tuple[TScalar, ...]:
        # c has q entries over 1..zeta^(q-1); fold the last one
        top = c[-1]
        return tuple(x - top for x in c[:-1])

    @classmethod
    def _make(cls, full: list, q: int) -> "CycInt":
        x = object.__new__(cls)
        x.q = q
        x._c = cls._normalize(full)
        return x

    @classmethod
    def zero(cls, q: int) -> "CycInt":
        return cls((), q)

    @classmethod
    def one(cls, q: int) -> "CycInt":
        return cls((1,), q)

    @classmethod
    def from_int(cls, n: TScalar, q: int) -> "CycInt":
        return cls((n,), q)

    @classmethod
    def root(cls, k: int, q: int) -> "CycInt":
        """
        zeta_q^k
        """
        full = [0] * q
        full[k % q] = 1
        return cls._make(full, q)

    @property
    def coeffs(self) -> Tuple[TScalar, ...]:
        return self._c

    def _full(self) -> list:
        return list(self._c) + [0]

    def _coerce(self, other: Union["CycInt", TScalar]) -> "CycInt":
        if isinstance(other, CycInt):
            if other.q != self.q:
                raise DomainError(f"mixed cyclotomic fields zeta_{self.q} and zeta_{other.q}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycInt.from_int(other, self.q)
        return NotImplemented

    def __add__(self, other: Union["CycInt", TScalar]) -> "CycInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt._make([x + y for x, y in zip(self._full(), other._full())], self.q)

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt._make([-x for x in self._full()], self.q)

    def __sub__(self, other: Union["CycInt", TScalar]) -> "CycInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: TScalar) -> "CycInt":
        return self._coerce(other) - self

    def __mul__(self, other: Union["CycInt", TScalar]) -> "CycInt":
        if isinstance(other, (int, Fraction)):
            return CycInt._make([x * other for x in self._full()], self.q)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q = self.q
        full = [0] * q
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(other._c):
                    if y:
                        full[(i + j) % q] += x * y
        return CycInt._make(full, q)

    __rmul__ = __mul__

    def __truediv__(self, n: TScalar) -> "CycInt":
        if not isinstance(n, (int, Fraction)) or n == 0:
            raise DomainError(f"CycInt can only be divided by a nonzero rational, got {n!r}")
        return CycInt._make([Fraction(x) / n for x in self._full()], self.q)

    def conjugate(self) -> "CycInt":
        """
        Complex conjugation zeta -> zeta^-1
        """
        q = self.q
        full = [0] * q
        for i, x in enumerate(self._c):
            full[(-i) % q] += x
        return CycInt._make(full, q)

    @property
    def is_rational(self) -> bool:
        return all(x == 0 for x in self._c[1:])

    @property
    def is_integral(self) -> bool:
        return all(Fraction(x).denominator == 1 for x in self._c)

    def to_rational(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is not a rational number")
        return Fraction(self._c[0])

    def to_int(self) -> int:
        value = self.to_rational()
        if value.denominator != 1:
            raise DomainError(f"{self} is not a rational integer")
        return value.numerator

    def to_complex(self) -> complex:
        zeta = cmath.exp(2j * math.pi / self.q)
        return sum((float(x) * zeta ** i for i, x in enumerate(self._c) if x), 0j)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycInt.from_int(other, self.q)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.q == other.q and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.q, self._c))

    def __str__(self) -> str:
        parts = []
        for i, x in enumerate(self._c):
            if not x:
                continue
            if i == 0:
                parts.append(str(x))
            else:
                var = "z" if i == 1 else f"z^{i}"
                parts.append(var if x == 1 else f"{x}*{var}")
        return "+".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"CycInt({self}, q={self.q})"
