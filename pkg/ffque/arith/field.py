#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import Union

import functools
from dataclasses import dataclass

from ffque.config import is_prime
from ffque.exceptions import DomainError


@functools.lru_cache(maxsize=None)
def check_modulus(q: int) -> int:
    """
    Validate the field size once per process

    :param q: field size
    :return: q
    """
    if not isinstance(q, int) or not is_prime(q) or q <= 3:
        raise DomainError(f"q must be prime > 3, got {q!r}")
    return q


def inverse(a: int, q: int) -> int:
    """
    Multiplicative inverse in F_q

    :param a: residue
    :param q: field size
    :return:
    """
    a %= q
    if a == 0:
        raise DomainError("division by zero in F_q")
    return pow(a, q - 2, q)


@dataclass(frozen=True)
class FieldElt(object):
    """
    Element of the prime field F_q

    Attributes:
        value: residue in [0, q)
        q: field size (prime > 3)
    """
    value: int
    q: int

    def __post_init__(self) -> None:
        check_modulus(self.q)
        object.__setattr__(self, "value", self.value % self.q)

    def _coerce(self, other: Union["FieldElt", int]) -> int:
        if isinstance(other, FieldElt):
            assert other.q == self.q
            return other.value
        return int(other) % self.q

    def __add__(self, other: Union["FieldElt", int]) -> "FieldElt":
        return FieldElt(self.value + self._coerce(other), self.q)

    __radd__ = __add__

    def __sub__(self, other: Union["FieldElt", int]) -> "FieldElt":
        return FieldElt(self.value - self._coerce(other), self.q)

    def __rsub__(self, other: Union["FieldElt", int]) -> "FieldElt":
        return FieldElt(self._coerce(other) - self.value, self.q)

    def __mul__(self, other: Union["FieldElt", int]) -> "FieldElt":
        return FieldElt(self.value * self._coerce(other), self.q)

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElt":
        return FieldElt(-self.value, self.q)

    def inverse(self) -> "FieldElt":
        return FieldElt(inverse(self.value, self.q), self.q)

    def __truediv__(self, other: Union["FieldElt", int]) -> "FieldElt":
        return self * FieldElt(inverse(self._coerce(other), self.q), self.q)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElt):
            return self.q == other.q and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.q
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.q))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElt({self.value} mod {self.q})"
