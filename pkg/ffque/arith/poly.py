#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Iterable,
    List,
    Tuple,
    Union,
)

import re

from ffque.exceptions import DomainError
from .field import (
    check_modulus,
    inverse,
)

NEG_INF = float("-inf")

TDegree = Union[int, float]

_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?(T(?:\s*\^\s*\(?\s*(-?\d+)\s*\)?)?)?\s*")


def parse_terms(text: str) -> List[Tuple[int, int]]:
    """
    Split a polynomial-like expression in T into (coefficient, exponent) pairs

    Accepts "1+0*T+3*T^2", "T^2+3", "2T-1", "T^-1+2*T^-3" (negative exponents are left to the caller).

    :param text: expression
    :return: signed integer coefficients with their exponents, in input order
    """
    text = text.strip()
    if not text:
        raise DomainError("empty polynomial expression")

    terms = []
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise DomainError(f"cannot parse polynomial expression {text!r} at position {pos}")
        sign, coeff, var, exp = m.groups()
        if terms and sign is None:
            raise DomainError(f"missing operator in {text!r} at position {pos}")

        c = int(coeff) if coeff is not None else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp is not None else 1) if var is not None else 0
        terms.append((c, e))
        pos = m.end()

    return terms


class Poly(object):
    """
    Immutable polynomial over the prime field F_q

    Coefficients are stored as residues in ascending order of powers of T without trailing zeros.
    The zero polynomial has degree ``NEG_INF`` and norm 0.
    """

    __slots__ = ("_c", "q", "_hash")

    def __init__(self, coeffs: Iterable[int], q: int) -> None:
        check_modulus(q)
        c = [int(x) % q for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)
        self.q = q
        self._hash = None

    @classmethod
    def _make(cls, coeffs: List[int], q: int) -> "Poly":
        # trusted constructor: entries already reduced mod q
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        p._c = tuple(coeffs)
        p.q = q
        p._hash = None
        return p

    def __reduce__(self):
        return Poly, (self._c, self.q)

    # construction helpers

    @classmethod
    def zero(cls, q: int) -> "Poly":
        return cls((), q)

    @classmethod
    def one(cls, q: int) -> "Poly":
        return cls((1,), q)

    @classmethod
    def T(cls, q: int) -> "Poly":
        return cls((0, 1), q)

    @classmethod
    def constant(cls, c: int, q: int) -> "Poly":
        return cls((c,), q)

    @classmethod
    def monomial(cls, k: int, q: int, c: int = 1) -> "Poly":
        assert k >= 0
        return cls([0] * k + [c], q)

    @classmethod
    def parse(cls, text: str, q: int) -> "Poly":
        """
        Parse the ascending ("1+0*T+3*T^2") or compact ("T^2+3") text form

        :param text: expression
        :param q: field size
        :return:
        """
        terms = parse_terms(text)
        size = max(e for _, e in terms) + 1
        if min(e for _, e in terms) < 0:
            raise DomainError(f"negative power of T in polynomial {text!r}")
        c = [0] * size
        for coeff, e in terms:
            c[e] += coeff
        return cls(c, q)

    # properties

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> TDegree:
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def is_constant(self) -> bool:
        return len(self._c) <= 1

    @property
    def is_unit(self) -> bool:
        return len(self._c) == 1

    @property
    def lc(self) -> int:
        return self._c[-1] if self._c else 0

    @property
    def is_monic(self) -> bool:
        return self.lc == 1

    @property
    def norm(self) -> int:
        """
        |X| = q^deg X, and |0| = 0
        """
        return self.q ** (len(self._c) - 1) if self._c else 0

    def coefficient(self, k: int) -> int:
        return self._c[k] if 0 <= k < len(self._c) else 0

    # arithmetic

    def _coerce(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, Poly):
            if other.q != self.q:
                raise DomainError(f"mixed field sizes {self.q} and {other.q}")
            return other
        if isinstance(other, int):
            return Poly((other,), self.q)
        return NotImplemented

    def __add__(self, other: Union["Poly", int]) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        q = self.q
        c = list(a)
        for i, x in enumerate(b):
            c[i] = (c[i] + x) % q
        return Poly._make(c, q)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        q = self.q
        return Poly._make([(-x) % q for x in self._c], q)

    def __sub__(self, other: Union["Poly", int]) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: int) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["Poly", int]) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return Poly._make([], self.q)
        q = self.q
        c = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    c[i + j] += x * y
        return Poly._make([x % q for x in c], q)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        assert n >= 0
        result = Poly.one(self.q)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Union["Poly", int]) -> Tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise DomainError("division by the zero polynomial")

        q = self.q
        b = other._c
        db = len(b) - 1
        inv = inverse(b[-1], q)
        r = list(self._c)
        if len(r) <= db:
            return Poly._make([], q), self

        quot = [0] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            coef = r[k] * inv % q
            if coef:
                quot[k - db] = coef
                for j, y in enumerate(b):
                    r[k - db + j] = (r[k - db + j] - coef * y) % q
        return Poly._make(quot, q), Poly._make(r[:db], q)

    def __floordiv__(self, other: Union["Poly", int]) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: Union["Poly", int]) -> "Poly":
        return divmod(self, other)[1]

    def scale(self, c: int) -> "Poly":
        q = self.q
        c %= q
        return Poly._make([x * c % q for x in self._c], q)

    def monic(self) -> "Poly":
        """
        Scale to leading coefficient 1 (zero stays zero)
        """
        if self.is_zero or self.lc == 1:
            return self
        return self.scale(inverse(self.lc, self.q))

    def divides(self, other: "Poly") -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def gcd(self, other: "Poly") -> "Poly":
        """
        Monic generator of the ideal (self, other); gcd(X, 0) is X made monic

        :param other:
        :return:
        """
        a, b = self, self._coerce(other)
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "Poly") -> Tuple["Poly", "Poly", "Poly"]:
        """
        Extended Euclid: returns (g, s, t) with s*self + t*other = g, g monic

        :param other:
        :return:
        """
        q = self.q
        r0, r1 = self, self._coerce(other)
        s0, s1 = Poly.one(q), Poly.zero(q)
        t0, t1 = Poly.zero(q), Poly.one(q)
        while not r1.is_zero:
            quot, rem = divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - quot * s1
            t0, t1 = t1, t0 - quot * t1
        if r0.is_zero:
            return r0, s0, t0
        inv = inverse(r0.lc, q)
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def valuation(self, p: "Poly") -> Tuple[int, "Poly"]:
        """
        P-adic valuation: returns (alpha, cofactor) with self = p^alpha * cofactor and p not dividing cofactor

        :param p: non-constant polynomial
        :return:
        """
        if self.is_zero:
            raise DomainError("valuation of the zero polynomial")
        if p.is_constant:
            raise DomainError("valuation at a constant")
        alpha = 0
        x = self
        while True:
            quot, rem = divmod(x, p)
            if not rem.is_zero:
                return alpha, x
            alpha += 1
            x = quot

    def pow_mod(self, e: int, m: "Poly") -> "Poly":
        result = Poly.one(self.q) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        """
        Evaluate at a field element (Horner)
        """
        q = self.q
        acc = 0
        for c in reversed(self._c):
            acc = (acc * x + c) % q
        return acc

    # comparison and display

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.q == other.q and self._c == other._c
        if isinstance(other, int):
            r = other % self.q
            return self._c == ((r,) if r else ())
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.q, self._c))
        return self._hash

    def sort_key(self) -> Tuple[TDegree, Tuple[int, ...]]:
        """
        Deterministic order: by degree, then by coefficients from the top
        """
        return self.degree, tuple(reversed(self._c))

    def to_text(self, ascending: bool = False) -> str:
        """
        Canonical text forms

        ascending=True: every coefficient, "1+0*T+3*T^2"
        ascending=False: compact, nonzero terms from the top, "T^2+3"

        :param ascending:
        :return:
        """
        if not self._c:
            return "0"

        def term(c: int, k: int, explicit: bool) -> str:
            if k == 0:
                return str(c)
            var = "T" if k == 1 else f"T^{k}"
            if c == 1 and not explicit:
                return var
            return f"{c}*{var}"

        if ascending:
            return "+".join(term(c, k, explicit=(c != 1)) for k, c in enumerate(self._c))
        return "+".join(term(c, k, explicit=False) for k, c in reversed(list(enumerate(self._c))) if c)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()}, q={self.q})"
