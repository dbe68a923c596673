#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Dict,
    Iterator,
    List,
    Optional,
    Tuple,
)

import enum
import logging
import random
from dataclasses import (
    dataclass,
    field,
)
from fractions import Fraction

from ffque.arith import (
    Poly,
    count_irreducibles,
    factor,
    irreducibles,
    is_irreducible,
)
from ffque.exceptions import DomainError
from .identities import check_truncation
from .report import IdentityReport
from .series import USeries
from .vpoly import VPoly

log = logging.getLogger(__name__)


class ExtensionRule(enum.Enum):
    # c(P^k) = c(P)^k
    COMPLETE = "complete"
    # c(P^(k+1)) = c(P) c(P^k) - c(P^(k-1))
    HECKE = "hecke"


class FormMode(enum.Enum):
    NEWFORM = "newform"
    OLDFORM = "oldform"


@dataclass(frozen=True)
class SyntheticMultiplicative(object):
    """
    Normalized Fourier coefficients defined by their values on monic irreducibles

    Primes without an explicit value take the value 0 (under the Hecke rule this still gives nonzero
    values on even prime powers).

    Attributes:
        q: field size
        values: prime -> c(P)
        rule: extension to prime powers
    """
    q: int
    values: Dict[Poly, Fraction] = field(default_factory=dict)
    rule: ExtensionRule = ExtensionRule.COMPLETE

    def __post_init__(self) -> None:
        for p in self.values:
            if not p.is_monic or not is_irreducible(p):
                raise DomainError(f"coefficient given on {p}, which is not a monic irreducible")

    @classmethod
    def random(cls, q: int, degree: int, rule: ExtensionRule = ExtensionRule.COMPLETE, seed: int = 0) -> "SyntheticMultiplicative":
        """
        Random small rationals on every monic irreducible of degree <= ``degree``

        :param q: field size
        :param degree: largest prime degree carrying a value
        :param rule: extension rule
        :param seed: random seed
        :return:
        """
        rng = random.Random(seed)
        values = {}
        for d in range(1, degree + 1):
            for p in irreducibles(d, q):
                values[p] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        return cls(q=q, values=values, rule=rule)

    @classmethod
    def constant(cls, q: int, degree: int, value: Fraction, rule: ExtensionRule = ExtensionRule.COMPLETE) -> "SyntheticMultiplicative":
        values = {p: Fraction(value) for d in range(1, degree + 1) for p in irreducibles(d, q)}
        return cls(q=q, values=values, rule=rule)

    def at_prime(self, p: Poly) -> Fraction:
        return self.values.get(p, Fraction(0))

    def prime_powers(self, c: Fraction, k_max: int) -> List[Fraction]:
        """
        c(1), c(P), ..., c(P^k_max) given c(P) = c
        """
        out = [Fraction(1)]
        for k in range(1, k_max + 1):
            if self.rule is ExtensionRule.COMPLETE:
                out.append(out[-1] * c)
            else:
                out.append(c * out[-1] - (out[-2] if k >= 2 else 0))
        return out

    def __call__(self, x: Poly) -> Fraction:
        """
        c(Q) for monic nonzero Q
        """
        if x.is_zero or not x.is_monic:
            raise DomainError(f"coefficients are indexed by monic polynomials, got {x}")
        result = Fraction(1)
        for p, e in factor(x).factors:
            result *= self.prime_powers(self.at_prime(p), e)[e]
        return result


def _relevant_primes(coeffs: SyntheticMultiplicative, n: int) -> List[Tuple[Poly, int, Fraction]]:
    # under the complete rule primes with c(P) = 0 never contribute
    if coeffs.rule is ExtensionRule.COMPLETE:
        primes = [p for p, c in coeffs.values.items() if c and p.degree <= n]
    else:
        primes = [p for d in range(1, n + 1) for p in irreducibles(d, coeffs.q)]
    primes.sort(key=Poly.sort_key)
    return [(p, int(p.degree), coeffs.at_prime(p)) for p in primes]


def _products(primes: List[Tuple[Poly, int, Fraction]], coeffs: SyntheticMultiplicative, n: int) -> Iterator[Tuple[int, Fraction, Dict[Poly, int]]]:
    """
    Every monic Q of degree <= n built from the given primes, as (deg Q, c(Q), exponents)
    """
    powers = [coeffs.prime_powers(c, n // d) for _, d, c in primes]
    exps: Dict[Poly, int] = {}

    def walk(start: int, deg: int, value: Fraction) -> Iterator[Tuple[int, Fraction, Dict[Poly, int]]]:
        yield deg, value, dict(exps)
        for i in range(start, len(primes)):
            p, d, _ = primes[i]
            if deg + d > n:
                # primes are sorted by degree
                break
            k = 1
            while deg + k * d <= n:
                exps[p] = k
                yield from walk(i + 1, deg + k * d, value * powers[i][k])
                k += 1
            del exps[p]

    yield from walk(0, 0, Fraction(1))


def _sigma_prime_power(d: int, k: int) -> VPoly:
    # sigma_nu(P^k) = 1 + b^d + ... + b^(kd) with b = q^nu
    return VPoly({d * j: 1 for j in range(k + 1)})


def _local_coarse(coeffs: SyntheticMultiplicative, c: Fraction, d: int, n: int, shifted: bool) -> USeries:
    # sum_k c(P^k) y^k truncated at y^(n // d), with y = x^d standing for u^d (or b^d u^d for L(s - nu))
    k_max = n // d
    return USeries([VPoly({d * k if shifted else 0: value}) for k, value in enumerate(coeffs.prime_powers(c, k_max))], k_max)


def _spread(series: USeries, d: int, n: int) -> USeries:
    # y -> u^d
    return USeries.from_dict({i * d: c for i, c in enumerate(series.coeffs)}, n)


def l_series(coeffs: SyntheticMultiplicative, n: int, shifted: bool = False) -> USeries:
    """
    L(s) (or L(s - nu) when ``shifted``) as an Euler product truncated at u^n

    :param coeffs: synthetic coefficients
    :param n: truncation
    :param shifted: substitute u -> b u
    :return:
    """
    q = coeffs.q
    result = USeries.one(n)
    for d in range(1, n + 1):
        given = [(p, c) for p, c in coeffs.values.items() if p.degree == d]
        for _, c in given:
            if c or coeffs.rule is ExtensionRule.HECKE:
                result = result * _spread(_local_coarse(coeffs, c, d, n, shifted), d, n)
        if coeffs.rule is ExtensionRule.HECKE:
            # every prime without a value shares the same local factor
            rest = count_irreducibles(d, q) - len(given)
            if rest:
                result = result * _spread(_local_coarse(coeffs, Fraction(0), d, n, shifted).power(rest), d, n)
    return result


@dataclass(frozen=True)
class NewformCandidates(object):
    """
    Attributes:
        lhs: brute force sum
        candidates: name -> closed form
    """
    lhs: USeries
    candidates: Dict[str, USeries]


def newform_series(coeffs: SyntheticMultiplicative, n: int, mode: FormMode = FormMode.NEWFORM, level: Optional[Poly] = None) -> NewformCandidates:
    """
    Brute force sum_Q c(Q) sigma_nu(Q) |Q|^-s and the two candidate closed forms

    Newform mode: candidates L(s)L(s-nu)/zeta(2s-nu) ("ll_over_zeta") and L(s)L(s-nu) ("ll").
    Oldform mode (u(g) = v([[A, 0], [0, 1]] g), c(Q) = sqrt|A| c*(Q/A) if A | Q): both sides divided by
    sqrt|A| c*(1), candidates |A|^-s (1 + |A|^nu - c*(A) |A|^(nu-s)) / (1 - |A|^(nu-2s)) times the
    newform candidates of c*.

    :param coeffs: c (newform) or c* (oldform), normalized to c(1) = 1
    :param n: truncation in u
    :param mode: newform or oldform
    :param level: A, required in oldform mode
    :return: coefficients are Laurent polynomials in b = q^nu
    """
    check_truncation(n)
    q = coeffs.q

    shift_deg = 0
    if mode is FormMode.OLDFORM:
        if level is None or not level.is_monic or not is_irreducible(level):
            raise DomainError(f"oldform mode needs a monic irreducible level, got {level}")
        shift_deg = int(level.degree)

    terms: Dict[int, VPoly] = {}
    for deg, value, exps in _products(_relevant_primes(coeffs, n - shift_deg), coeffs, n - shift_deg):
        if not value:
            continue
        if mode is FormMode.OLDFORM:
            exps[level] = exps.get(level, 0) + 1
        sig = VPoly.constant(1)
        for p, k in exps.items():
            sig = sig * _sigma_prime_power(int(p.degree), k)
        key = deg + shift_deg
        terms[key] = terms.get(key, VPoly()) + sig * value
    lhs = USeries.from_dict(terms, n)

    ll = l_series(coeffs, n) * l_series(coeffs, n, shifted=True)
    inv_zeta = USeries.from_dict({0: 1, 2: VPoly({1: -q})}, n)
    candidates = {"ll_over_zeta": ll * inv_zeta, "ll": ll}

    if mode is FormMode.OLDFORM:
        a = shift_deg
        ca = coeffs.at_prime(level)
        num = USeries.from_dict({a: VPoly({0: 1, a: 1}), 2 * a: VPoly({a: -ca})}, n)
        den = USeries.from_dict({0: 1, 2 * a: VPoly({a: -1})}, n)
        prefactor = num / den
        candidates = {name: prefactor * series for name, series in candidates.items()}

    return NewformCandidates(lhs=lhs, candidates=candidates)


def _close(x: List[complex], y: List[complex], tol: float) -> Optional[int]:
    for k, (a, b) in enumerate(zip(x, y)):
        if abs(a - b) > tol * max(1.0, abs(a), abs(b)):
            return k
    return None


def verify_newform_series(coeffs: SyntheticMultiplicative, n: int, mode: FormMode = FormMode.NEWFORM, level: Optional[Poly] = None, nu: Optional[complex] = None, tol: float = 1e-9) -> IdentityReport:
    """
    Decide which candidate closed form (if any) the brute force series matches

    :param coeffs: synthetic coefficients
    :param n: truncation in u
    :param mode: newform or oldform
    :param level: A (oldform mode)
    :param nu: evaluate b = q^nu numerically instead of keeping b formal
    :param tol: relative tolerance of the numeric mode
    :return: verdict is the matching candidate, "none", or "ambiguous"
    """
    q = coeffs.q
    result = newform_series(coeffs, n, mode=mode, level=level)

    mismatch: Dict[str, Optional[int]] = {}
    if nu is None:
        for name, series in result.candidates.items():
            mismatch[name] = result.lhs.first_mismatch(series)
        lhs = result.lhs.to_text("b")
        rhs = {name: series.to_text("b") for name, series in result.candidates.items()}
    else:
        b = complex(q) ** nu
        lhs = result.lhs.evaluate_unit(b)
        rhs = {name: series.evaluate_unit(b) for name, series in result.candidates.items()}
        for name, values in rhs.items():
            mismatch[name] = _close(lhs, values, tol)

    matching = [name for name, k in mismatch.items() if k is None]
    verdict = matching[0] if len(matching) == 1 else ("none" if not matching else "ambiguous")
    log.info(f"{mode.value} series ({coeffs.rule.value} rule, N={n}): verdict {verdict}")

    return IdentityReport(
        identity=f"{mode.value}_series",
        parameters={
            "q": q,
            "N": n,
            "rule": coeffs.rule.value,
            "mode": mode.value,
            "A": level.to_text() if level is not None else None,
            "nu": nu,
            "primes": {p.to_text(): str(c) for p, c in coeffs.values.items()},
        },
        lhs=lhs,
        rhs=rhs.get(verdict, rhs["ll_over_zeta"]),
        verdict=verdict,
        first_mismatch=None if matching else min(k for k in mismatch.values()),
        extra={"candidates": rhs, "first_mismatch_per_candidate": mismatch},
    )
