#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Dict,
    Iterable,
    List,
    Optional,
    Tuple,
    Union,
)

import logging
from fractions import Fraction

from ffque.exceptions import DomainError
from .vpoly import VPoly

log = logging.getLogger(__name__)

TCoeff = Union[int, Fraction, VPoly]


def _v(c: TCoeff) -> VPoly:
    return c if isinstance(c, VPoly) else VPoly.constant(c)


class USeries(object):
    """
    Power series in u = q^-s known modulo u^(trunc+1)

    Coefficients are exact ``VPoly`` values: rationals, or Laurent polynomials in a second formal
    unit (v = q^(2it) or b = q^nu). All operations are closed at the smaller truncation of their inputs.
    """

    __slots__ = ("_c", "trunc")

    def __init__(self, coeffs: Iterable[TCoeff], trunc: int) -> None:
        if trunc < 0:
            raise DomainError(f"truncation must be >= 0, got {trunc}")
        c = [_v(x) for x in coeffs][:trunc + 1]
        c += [VPoly()] * (trunc + 1 - len(c))
        self._c = tuple(c)
        self.trunc = trunc

    @classmethod
    def zero(cls, trunc: int) -> "USeries":
        return cls((), trunc)

    @classmethod
    def one(cls, trunc: int) -> "USeries":
        return cls((1,), trunc)

    @classmethod
    def from_dict(cls, terms: Dict[int, TCoeff], trunc: int) -> "USeries":
        """
        :param terms: map u-degree -> coefficient; degrees above ``trunc`` are dropped
        :param trunc: truncation
        :return:
        """
        c: List[TCoeff] = [0] * (trunc + 1)
        for k, x in terms.items():
            if k < 0:
                raise DomainError(f"negative power u^{k} in a power series")
            if k <= trunc:
                c[k] = _v(c[k]) + _v(x)
        return cls(c, trunc)

    @classmethod
    def monomial(cls, k: int, trunc: int, c: TCoeff = 1) -> "USeries":
        return cls.from_dict({k: c}, trunc)

    @property
    def coeffs(self) -> Tuple[VPoly, ...]:
        return self._c

    def coefficient(self, k: int) -> VPoly:
        if k > self.trunc:
            raise DomainError(f"coefficient of u^{k} requested, series truncated at u^{self.trunc}")
        return self._c[k]

    @property
    def is_rational(self) -> bool:
        return all(c.is_constant for c in self._c)

    def rationals(self) -> List[Fraction]:
        return [c.to_rational() for c in self._c]

    def _coerce(self, other: Union["USeries", TCoeff]) -> "USeries":
        if isinstance(other, USeries):
            return other
        if isinstance(other, (int, Fraction, VPoly)):
            return USeries((other,), self.trunc)
        return NotImplemented

    def __add__(self, other: Union["USeries", TCoeff]) -> "USeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.trunc, other.trunc)
        return USeries([self._c[k] + other._c[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self) -> "USeries":
        return USeries([-c for c in self._c], self.trunc)

    def __sub__(self, other: Union["USeries", TCoeff]) -> "USeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: TCoeff) -> "USeries":
        return self._coerce(other) - self

    def __mul__(self, other: Union["USeries", TCoeff]) -> "USeries":
        if isinstance(other, (int, Fraction, VPoly)):
            return USeries([c * other for c in self._c], self.trunc)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.trunc, other.trunc)
        out = [VPoly()] * (n + 1)
        for i in range(n + 1):
            a = self._c[i]
            if a.is_zero:
                continue
            for j in range(n + 1 - i):
                b = other._c[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return USeries(out, n)

    __rmul__ = __mul__

    def invert(self) -> "USeries":
        """
        Multiplicative inverse; the constant term must be a unit (nonzero rational times a power of the formal unit)

        :return:
        """
        a0 = self._c[0]
        if a0.is_zero or not a0.is_monomial:
            raise DomainError(f"constant term {a0} is not invertible")
        inv0 = a0.invert()
        b = [inv0]
        for k in range(1, self.trunc + 1):
            acc = VPoly()
            for j in range(1, k + 1):
                if not self._c[j].is_zero:
                    acc = acc + self._c[j] * b[k - j]
            b.append(-acc * inv0)
        return USeries(b, self.trunc)

    def __truediv__(self, other: Union["USeries", TCoeff]) -> "USeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def power(self, alpha: int) -> "USeries":
        """
        f^alpha for f with constant term 1, by the recurrence k b_k = sum_{j=1}^{k} ((alpha+1) j - k) a_j b_{k-j}

        Note: alpha may be huge (prime counts); no repeated squaring is involved

        :param alpha: integer exponent (any sign)
        :return:
        """
        if self._c[0] != 1:
            raise DomainError("series power needs constant term 1")
        b = [VPoly.constant(1)]
        for k in range(1, self.trunc + 1):
            acc = VPoly()
            for j in range(1, k + 1):
                if not self._c[j].is_zero:
                    acc = acc + self._c[j] * b[k - j] * ((alpha + 1) * j - k)
            b.append(acc * Fraction(1, k))
        return USeries(b, self.trunc)

    def substitute(self, k: int) -> "USeries":
        """
        u -> u^k (same truncation)
        """
        assert k >= 1
        return USeries.from_dict({i * k: c for i, c in enumerate(self._c)}, self.trunc)

    def substitute_unit(self, k: int) -> "USeries":
        """
        Formal unit v -> v^k in every coefficient
        """
        return USeries([c.substitute(k) for c in self._c], self.trunc)

    def truncate(self, trunc: int) -> "USeries":
        assert trunc <= self.trunc
        return USeries(self._c[:trunc + 1], trunc)

    def evaluate(self, u: complex, v: complex = 1) -> complex:
        """
        Partial sum at numeric u (and formal unit value v)
        """
        return sum((c.evaluate(v) * u ** k for k, c in enumerate(self._c)), 0j)

    def evaluate_unit(self, v: complex) -> List[complex]:
        """
        Coefficients with the formal unit set to v
        """
        return [c.evaluate(v) for c in self._c]

    def first_mismatch(self, other: "USeries") -> Optional[int]:
        n = min(self.trunc, other.trunc)
        for k in range(n + 1):
            if self._c[k] != other._c[k]:
                return k
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, USeries):
            return NotImplemented
        return self.trunc == other.trunc and self._c == other._c

    def __hash__(self) -> int:
        return hash((self._c, self.trunc))

    def to_text(self, var: str = "v") -> List[str]:
        return [c.to_text(var) for c in self._c]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self._c):
            if c.is_zero:
                continue
            coeff = c.to_text() if c.is_monomial else f"({c.to_text()})"
            terms.append(coeff if k == 0 else f"{coeff}*u^{k}")
        return f"{' + '.join(terms) or '0'} + O(u^{self.trunc + 1})"

    def __repr__(self) -> str:
        return f"USeries({self})"


def geometric(c: TCoeff, k: int, trunc: int) -> USeries:
    """
    1 / (1 - c u^k)

    :param c: ratio
    :param k: u-degree step (>= 1)
    :param trunc: truncation
    :return:
    """
    assert k >= 1
    c = _v(c)
    terms = {}
    power = VPoly.constant(1)
    for i in range(trunc // k + 1):
        terms[i * k] = power
        power = power * c
    return USeries.from_dict(terms, trunc)


def polynomial(terms: Dict[int, TCoeff], trunc: int) -> USeries:
    return USeries.from_dict(terms, trunc)
