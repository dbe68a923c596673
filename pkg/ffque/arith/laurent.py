#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Dict,
    Iterable,
    Optional,
    Tuple,
    Union,
)

import re
from fractions import Fraction

from ffque.exceptions import (
    DomainError,
    PrecisionError,
)
from .field import (
    check_modulus,
    inverse,
)
from .poly import (
    Poly,
    parse_terms,
)

_PREC = re.compile(r"\(\s*(prec|absprec)\s+(-?\d+)\s*\)\s*$")

# absolute precision used for exact zero; it never reaches a coefficient list
EXACT = 1 << 30


class Laurent(object):
    """
    Truncated Laurent series in the uniformiser T^-1, an element of k_inf = F_q((T^-1))
    known modulo T^-absprec * r_inf.

    Index convention: ``coefficient(j)`` is the coefficient of T^-j. The valuation ``v`` is the
    index of the first nonzero term, so |x| = q^-v. Relative precision (``precision``) counts the
    retained terms from the valuation on; absolute precision is ``valuation + precision``.

    Loss rules:
        - add/sub: absolute precision is the min of the inputs
        - mul/div: relative precision is the min of the inputs
        - invert: relative precision is preserved
    """

    __slots__ = ("q", "_v", "_c", "_abs")

    def __init__(self, coeffs: Iterable[int], valuation: int, q: int, absprec: Optional[int] = None) -> None:
        """
        :param coeffs: coefficients of T^-valuation, T^-(valuation+1), ...
        :param valuation: index of the first given coefficient
        :param q: field size
        :param absprec: absolute precision (default: exactly the given terms)
        """
        check_modulus(q)
        c = [int(x) % q for x in coeffs]
        if absprec is None:
            absprec = valuation + len(c)
        if absprec < valuation + len(c):
            c = c[:max(0, absprec - valuation)]
        self._set(c, valuation, q, absprec)

    def _set(self, c: list, v: int, q: int, absprec: int) -> None:
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        if k == len(c):
            self._c = ()
            self._v = absprec
        else:
            self._c = tuple(c[k:])
            self._v = v + k
        self.q = q
        self._abs = absprec

    @classmethod
    def _make(cls, c: list, v: int, q: int, absprec: int) -> "Laurent":
        x = object.__new__(cls)
        x._set(c, v, q, absprec)
        return x

    def __reduce__(self):
        return Laurent._make, (list(self._c), self._v, self.q, self._abs)

    # construction helpers

    @classmethod
    def zero(cls, q: int, absprec: int) -> "Laurent":
        return cls._make([], absprec, q, absprec)

    @classmethod
    def from_poly(cls, p: Poly, absprec: int) -> "Laurent":
        """
        Embed a polynomial, known to absolute precision ``absprec``

        :param p: polynomial
        :param absprec: terms T^-j with j < absprec are kept
        :return:
        """
        if p.is_zero:
            return cls.zero(p.q, absprec)
        v = -int(p.degree)
        c = [p.coefficient(-j) if j <= 0 else 0 for j in range(v, absprec)]
        return cls._make(c, v, p.q, absprec)

    @classmethod
    def from_terms(cls, terms: Dict[int, int], q: int, absprec: int) -> "Laurent":
        """
        :param terms: map j -> coefficient of T^-j
        :param q: field size
        :param absprec: absolute precision
        :return:
        """
        keys = [j for j, c in terms.items() if c % q and j < absprec]
        if not keys:
            return cls.zero(q, absprec)
        v = min(keys)
        return cls._make([terms.get(j, 0) % q for j in range(v, absprec)], v, q, absprec)

    @classmethod
    def quotient(cls, y: Poly, x: Poly, absprec: int) -> "Laurent":
        """
        Expansion of the rational function y / x to absolute precision ``absprec``

        :param y: numerator
        :param x: nonzero denominator
        :param absprec: absolute precision of the result
        :return:
        """
        if x.is_zero:
            raise DomainError("division by the zero polynomial")
        if y.is_zero:
            return cls.zero(y.q, absprec)
        v = int(x.degree) - int(y.degree)
        rel = max(1, absprec - v)
        num = cls.from_poly(y, rel - int(y.degree))
        den = cls.from_poly(x, rel - int(x.degree))
        return (num / den).truncate(absprec) if absprec - v >= 1 else cls.zero(y.q, absprec)

    @classmethod
    def parse(cls, text: str, q: int) -> "Laurent":
        """
        Parse "T^-1+2*T^-3 (prec 12)" (relative precision) or "0 (absprec 5)"

        Without a precision suffix the series is exact up to its last written term.

        :param text: expression
        :param q: field size
        :return:
        """
        m = _PREC.search(text)
        body = text[:m.start()] if m else text
        terms: Dict[int, int] = {}
        for c, e in parse_terms(body):
            terms[-e] = terms.get(-e, 0) + c
        nonzero = [j for j, c in terms.items() if c % q]

        if m is None:
            absprec = max(terms) + 1
        elif m.group(1) == "absprec":
            absprec = int(m.group(2))
        else:
            if not nonzero:
                raise DomainError(f"relative precision of zero in {text!r}")
            absprec = min(nonzero) + int(m.group(2))
        return cls.from_terms(terms, q, absprec)

    # properties

    @property
    def valuation(self) -> int:
        return self._v

    @property
    def absprec(self) -> int:
        return self._abs

    @property
    def precision(self) -> int:
        """
        Relative precision (retained terms from the valuation on)
        """
        return self._abs - self._v

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def norm(self) -> Fraction:
        """
        |x| = q^-v, and |0| = 0
        """
        if not self._c:
            return Fraction(0)
        return Fraction(self.q) ** (-self._v)

    def coefficient(self, j: int) -> int:
        """
        Coefficient of T^-j

        :param j: index
        :return:
        """
        if j >= self._abs:
            raise PrecisionError(f"coefficient of T^{-j} requested, series known modulo T^{-self._abs}")
        k = j - self._v
        return self._c[k] if 0 <= k < len(self._c) else 0

    def digits(self, lo: int, hi: int) -> Tuple[int, ...]:
        """
        Coefficients of T^-lo, ..., T^-hi

        :param lo: first index
        :param hi: last index (inclusive)
        :return:
        """
        return tuple(self.coefficient(j) for j in range(lo, hi + 1))

    # arithmetic

    @property
    def is_exact_zero(self) -> bool:
        return self._abs >= EXACT

    def _coerce(self, other: Union["Laurent", Poly, int]) -> "Laurent":
        if isinstance(other, Laurent):
            if other.q != self.q:
                raise DomainError(f"mixed field sizes {self.q} and {other.q}")
            return other
        if isinstance(other, int):
            other = Poly.constant(other, self.q)
        if isinstance(other, Poly):
            # polynomials are exact: carry enough precision not to limit the result
            if other.is_zero:
                return Laurent.zero(self.q, EXACT)
            if self.is_exact_zero:
                return Laurent.from_poly(other, -int(other.degree) + 1)
            return Laurent.from_poly(other, max(self._abs, -int(other.degree) + max(self.precision, 1)))
        return NotImplemented

    def __add__(self, other: Union["Laurent", Poly, int]) -> "Laurent":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if isinstance(other, Laurent) and other.is_zero and other._abs >= self._abs:
            return self
        if self.is_exact_zero:
            return other
        absprec = min(self._abs, other._abs)
        lo = min(self._v, other._v)
        q = self.q
        c = [(self._get(j) + other._get(j)) % q for j in range(lo, absprec)]
        return Laurent._make(c, lo, q, absprec)

    __radd__ = __add__

    def _get(self, j: int) -> int:
        k = j - self._v
        return self._c[k] if 0 <= k < len(self._c) else 0

    def __neg__(self) -> "Laurent":
        q = self.q
        return Laurent._make([(-x) % q for x in self._c], self._v, q, self._abs)

    def __sub__(self, other: Union["Laurent", Poly, int]) -> "Laurent":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Union[Poly, int]) -> "Laurent":
        return self._coerce(other) - self

    def __mul__(self, other: Union["Laurent", Poly, int]) -> "Laurent":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q = self.q
        # a product with an exact zero is known as far as the other factor
        if self.is_exact_zero and other.is_exact_zero:
            return Laurent.zero(q, EXACT)
        if other.is_exact_zero:
            return Laurent.zero(q, self._abs)
        if self.is_exact_zero:
            return Laurent.zero(q, other._abs)
        if self.is_zero and other.is_zero:
            return Laurent.zero(q, self._abs + other._abs)
        if self.is_zero:
            return Laurent.zero(q, self._abs + other._v)
        if other.is_zero:
            return Laurent.zero(q, other._abs + self._v)

        rel = min(self.precision, other.precision)
        a, b = self._c[:rel], other._c[:rel]
        c = [0] * rel
        for i, x in enumerate(a):
            if x:
                for k in range(min(len(b), rel - i)):
                    c[i + k] += x * b[k]
        v = self._v + other._v
        return Laurent._make([x % q for x in c], v, q, v + rel)

    __rmul__ = __mul__

    def invert(self) -> "Laurent":
        """
        Multiplicative inverse, same relative precision

        :return:
        """
        if self.is_zero:
            raise DomainError("inversion of zero")
        q = self.q
        rel = self.precision
        a = list(self._c[:rel]) + [0] * max(0, rel - len(self._c))
        inv0 = inverse(a[0], q)
        b = [0] * rel
        b[0] = inv0
        for k in range(1, rel):
            acc = 0
            for i in range(1, k + 1):
                acc += a[i] * b[k - i]
            b[k] = (-acc * inv0) % q
        return Laurent._make(b, -self._v, q, -self._v + rel)

    def __truediv__(self, other: Union["Laurent", Poly, int]) -> "Laurent":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def shift(self, k: int) -> "Laurent":
        """
        Multiply by T^k (exact)

        :param k: power of T
        :return:
        """
        return Laurent._make(list(self._c), self._v - k, self.q, self._abs - k)

    def truncate(self, absprec: int) -> "Laurent":
        """
        Forget every term T^-j with j >= absprec

        :param absprec: new absolute precision, at most the current one
        :return:
        """
        if absprec > self._abs:
            raise PrecisionError(f"cannot raise absolute precision from {self._abs} to {absprec}")
        return Laurent._make([self._get(j) for j in range(self._v, absprec)], self._v, self.q, absprec)

    def padded(self, absprec: int) -> "Laurent":
        """
        Treat the known terms as an exact representative and extend with zeros

        :param absprec: new absolute precision, at least the current one
        :return:
        """
        if absprec <= self._abs:
            return self.truncate(absprec)
        if self.is_zero:
            return Laurent.zero(self.q, absprec)
        return Laurent._make(list(self._c) + [0] * (absprec - self._abs), self._v, self.q, absprec)

    def polynomial_part(self) -> Poly:
        """
        Terms with nonnegative powers of T

        :return:
        """
        if self._v > 0:
            return Poly.zero(self.q)
        if self._abs < 1:
            raise PrecisionError("constant term unknown, polynomial part undefined")
        return Poly([self._get(-k) for k in range(0, -self._v + 1)], self.q)

    def fractional_part(self) -> "Laurent":
        """
        Representative of x mod F_q[T] supported on strictly negative powers of T

        :return:
        """
        if self._abs < 1:
            raise PrecisionError("series not known below T^0, fractional part undefined")
        if self._v >= 1:
            return self
        return Laurent._make([self._get(j) for j in range(1, self._abs)], 1, self.q, self._abs)

    # comparison and display

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Laurent):
            return NotImplemented
        return (self.q, self._v, self._c, self._abs) == (other.q, other._v, other._c, other._abs)

    def __hash__(self) -> int:
        return hash((self.q, self._v, self._c, self._abs))

    def equals_to_precision(self, other: "Laurent") -> bool:
        """
        Equality modulo the coarser of the two precisions

        :param other:
        :return:
        """
        absprec = min(self._abs, other._abs)
        return (self - other).truncate(absprec).is_zero

    def to_text(self) -> str:
        if not self._c:
            return f"0 (absprec {self._abs})"

        parts = []
        for k, c in enumerate(self._c):
            if not c:
                continue
            e = -(self._v + k)
            if e == 0:
                parts.append(str(c))
                continue
            var = "T" if e == 1 else f"T^{e}"
            parts.append(var if c == 1 else f"{c}*{var}")
        return f"{'+'.join(parts)} (prec {self.precision})"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Laurent({self.to_text()}, q={self.q})"
