#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Dict,
    Iterable,
    Tuple,
    Union,
)

import logging
from fractions import Fraction

from ffque.exceptions import DomainError

log = logging.getLogger(__name__)

TRational = Union[int, Fraction]


class VPoly(object):
    """
    Exact Laurent polynomial with rational coefficients in one formal unit (v = q^(2it) or b = q^nu)

    Constants are VPolys supported on exponent 0.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Union[Dict[int, TRational], Iterable[Tuple[int, TRational]]] = ()) -> None:
        items = terms.items() if isinstance(terms, dict) else terms
        acc: Dict[int, Fraction] = {}
        for k, c in items:
            acc[k] = acc.get(k, Fraction(0)) + Fraction(c)
        self._t = tuple(sorted((k, c) for k, c in acc.items() if c))
        self._hash = None

    @classmethod
    def _make(cls, acc: Dict[int, Fraction]) -> "VPoly":
        p = object.__new__(cls)
        p._t = tuple(sorted((k, c) for k, c in acc.items() if c))
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: TRational) -> "VPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, k: int, c: TRational = 1) -> "VPoly":
        return cls({k: c})

    @property
    def terms(self) -> Tuple[Tuple[int, Fraction], ...]:
        return self._t

    @property
    def is_zero(self) -> bool:
        return not self._t

    @property
    def is_constant(self) -> bool:
        return all(k == 0 for k, _ in self._t)

    @property
    def is_monomial(self) -> bool:
        return len(self._t) == 1

    @property
    def span(self) -> Tuple[int, int]:
        if not self._t:
            return 0, 0
        return self._t[0][0], self._t[-1][0]

    def constant_term(self) -> Fraction:
        return dict(self._t).get(0, Fraction(0))

    def to_rational(self) -> Fraction:
        if not self.is_constant:
            raise DomainError(f"{self} depends on the formal unit")
        return self.constant_term()

    def _coerce(self, other: Union["VPoly", TRational]) -> "VPoly":
        if isinstance(other, VPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return VPoly.constant(other)
        return NotImplemented

    def __add__(self, other: Union["VPoly", TRational]) -> "VPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._t)
        for k, c in other._t:
            acc[k] = acc.get(k, 0) + c
        return VPoly._make(acc)

    __radd__ = __add__

    def __neg__(self) -> "VPoly":
        return VPoly._make({k: -c for k, c in self._t})

    def __sub__(self, other: Union["VPoly", TRational]) -> "VPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: TRational) -> "VPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["VPoly", TRational]) -> "VPoly":
        if isinstance(other, (int, Fraction)):
            return VPoly._make({k: c * other for k, c in self._t})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: Dict[int, Fraction] = {}
        for k1, c1 in self._t:
            for k2, c2 in other._t:
                acc[k1 + k2] = acc.get(k1 + k2, 0) + c1 * c2
        return VPoly._make(acc)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["VPoly", TRational]) -> "VPoly":
        return self * self._coerce(other).invert()

    def invert(self) -> "VPoly":
        """
        Inverse of a monomial (the units of Q[v, 1/v])

        :return:
        """
        if not self.is_monomial:
            raise DomainError(f"{self} is not a unit of the Laurent polynomial ring")
        (k, c), = self._t
        return VPoly._make({-k: 1 / c})

    def __pow__(self, n: int) -> "VPoly":
        if n < 0:
            return self.invert() ** (-n)
        result = VPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, k: int) -> "VPoly":
        """
        v -> v^k (k = -1 is the formal complex conjugation for v = q^(2it))
        """
        return VPoly._make({e * k: c for e, c in self._t})

    def evaluate(self, v: complex) -> complex:
        return sum((complex(c) * v ** k for k, c in self._t), 0j)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = VPoly.constant(other)
        if not isinstance(other, VPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._t)
        return self._hash

    def to_text(self, var: str = "v") -> str:
        if not self._t:
            return "0"
        parts = []
        for k, c in self._t:
            if k == 0:
                parts.append(str(c))
            else:
                mono = var if k == 1 else f"{var}^{k}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"VPoly({self.to_text()})"
