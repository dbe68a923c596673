#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Optional,
    Sequence,
)

import logging
import random
from dataclasses import (
    dataclass,
    field,
)

from ffque.arith import (
    Laurent,
    Poly,
    bounded_elements,
    enumerate_up_to,
)
from ffque.cache import (
    Cache,
    Cache_Memory,
)
from ffque.char import (
    chi_twisted,
    integrate_unit,
)
from ffque.exceptions import DomainError
from ffque.tree import (
    TreeVertex,
    neighbors,
    vertex_of_matrix,
)
from .coeff import (
    coeff_closed,
    coeff_unfolded,
    vanishes,
)
from .direct import eval_direct

log = logging.getLogger(__name__)

# relative error accepted between closed-form and extracted coefficients
# (absolute below magnitude 1, where vanishing coefficients meet round-off)
MATCH_TOL = 1e-5


def _relative_error(x: complex, y: complex, floor: float = 0.0) -> float:
    scale = max(abs(x), abs(y), floor)
    return abs(x - y) / scale if scale > 0 else 0.0


def _required_depth(n: int, twist: Poly) -> int:
    # E at height n reads digits 1..-n-1, chi_Q reads digits 1..deg Q + 1
    need = max(0, -n - 1)
    if not twist.is_zero:
        need = max(need, int(twist.degree) + 1)
    return max(need, 1)


class _PointValues(object):
    """
    E(., s) on one horizontal line n, memoised per canonical vertex
    """

    def __init__(self, n: int, s: complex, level: Poly, tol: Optional[float], cache: Optional[Cache]) -> None:
        self.n = n
        self.s = s
        self.level = level
        self.tol = tol
        self.cache = cache if cache is not None else Cache_Memory()

    def __call__(self, x: Laurent) -> complex:
        return eval_direct(TreeVertex(self.n, x), self.s, self.level, self.tol, self.cache).value


def fourier_extract(n: int, twist: Poly, s: complex, level: Poly, depth: Optional[int] = None,
                    tol: Optional[float] = None, cache: Optional[Cache] = None) -> complex:
    """
    c(n, Q, s) = integral over k_inf / F_q[T] of E((n, x), s) conj(chi_Q(x)) dx, as an exact finite average

    :param n: height exponent
    :param twist: Q (any polynomial, unit multiples included)
    :param s: complex point, Re(s) > 1
    :param level: monic irreducible A
    :param depth: number of sampled digits (default: the least exact depth)
    :param tol: absolute tolerance of the underlying coset sums
    :param cache: memo for E values shared between calls
    :return:
    """
    need = _required_depth(n, twist)
    depth = need if depth is None else depth
    if depth < need:
        raise DomainError(f"depth {depth} below the {need} digits that E at n={n} and chi_Q with Q={twist} depend on")

    values = _PointValues(n, complex(s), level, tol, cache)

    def integrand(x: Laurent) -> complex:
        return values(x) * chi_twisted(twist, x).conjugate().to_complex()

    return integrate_unit(integrand, depth, level.q)


def _twists(n: int, level: Poly, source: str) -> List[Poly]:
    # monic Q whose coefficient can be nonzero at height n under the chosen description
    top = -2 - n if source != "closed" else int(level.degree) - 2 - n
    return list(enumerate_up_to(top, level.q)) if top >= 0 else []


def _coefficient(source: str, n: int, twist: Poly, s: complex, level: Poly, depth: int,
                 tol: Optional[float], cache: Cache) -> complex:
    if source == "closed":
        return coeff_closed(n, twist, s, level)
    if source == "unfolded":
        return coeff_unfolded(n, twist, s, level)
    if source == "extracted":
        return fourier_extract(n, twist, s, level, max(depth, _required_depth(n, twist)), tol, cache)
    raise DomainError(f"unknown coefficient source {source!r}")


@dataclass
class ParsevalReport(object):
    """
    Parseval comparison on the line n

    Attributes:
        n: height exponent
        s: complex point
        lhs: integral of |E|^2 over the line
        constant: |c(n, 0, s)|^2
        twisted: sum of |c(n, Q, s)|^2 over monic Q != 0
        kappa: unit multiplicity used (None when no Q contributes and none was given)
        residual: |lhs - constant - kappa * twisted|
        source: coefficient description used ("extracted", "unfolded" or "closed")
        num_twists: number of monic Q summed
    """
    n: int
    s: complex
    lhs: float
    constant: float
    twisted: float
    kappa: Optional[float]
    residual: float
    source: str
    num_twists: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "s": [self.s.real, self.s.imag],
            "lhs": self.lhs,
            "constant": self.constant,
            "twisted": self.twisted,
            "kappa": self.kappa,
            "residual": self.residual,
            "source": self.source,
            "num_twists": self.num_twists,
        }


def parseval_check(n: int, s: complex, level: Poly, depth: Optional[int] = None, kappa: Optional[float] = None,
                   source: str = "extracted", tol: Optional[float] = None,
                   cache: Optional[Cache] = None) -> ParsevalReport:
    """
    Compare the integral of |E((n, x), s)|^2 over x with |c(n,0,s)|^2 + kappa sum_{monic Q} |c(n,Q,s)|^2

    Without ``kappa`` the value that closes the identity on this line is reported (the calibration).

    :param n: height exponent
    :param s: complex point, Re(s) > 1
    :param level: monic irreducible A
    :param depth: sampling depth of the left hand side (default: least exact depth)
    :param kappa: unit multiplicity constant, or None to calibrate
    :param source: where the coefficients come from
    :param tol: absolute tolerance of the coset sums
    :param cache: memo for E values
    :return:
    """
    s = complex(s)
    cache = cache if cache is not None else Cache_Memory()
    need = _required_depth(n, Poly.zero(level.q))
    depth = need if depth is None else depth
    if depth < need:
        raise DomainError(f"depth {depth} below the {need} digits that E at n={n} depends on")

    values = _PointValues(n, s, level, tol, cache)
    lhs = integrate_unit(lambda x: abs(values(x)) ** 2, depth, level.q)

    constant = abs(_coefficient(source, n, Poly.zero(level.q), s, level, depth, tol, cache)) ** 2
    twists = _twists(n, level, source)
    twisted = sum(abs(_coefficient(source, n, t, s, level, depth, tol, cache)) ** 2 for t in twists)

    if kappa is None and twisted > 0:
        kappa = (lhs - constant) / twisted
    residual = abs(lhs - constant - (kappa or 0.0) * twisted)

    log.debug(f"Parseval n={n} s={s} A={level}: lhs={lhs:.12g} constant={constant:.12g} twisted={twisted:.12g} "
              f"kappa={kappa}")
    return ParsevalReport(n, s, lhs, constant, twisted, kappa, residual, source, len(twists))


@dataclass
class KappaCalibration(object):
    """
    Unit multiplicity constant fitted on several lines

    Attributes:
        kappa: mean of the per-line values
        per_line: n -> fitted value
        spread: max - min of the per-line values
    """
    kappa: float
    per_line: Dict[int, float] = field(default_factory=dict)
    spread: float = 0.0


def calibrate_kappa(s: complex, level: Poly, heights: Sequence[int] = (-2, -3), tol: Optional[float] = None,
                    cache: Optional[Cache] = None) -> KappaCalibration:
    """
    Fit kappa from Parseval with extracted coefficients on every line that has twisted terms

    :param s: complex point, Re(s) > 1
    :param level: monic irreducible A
    :param heights: lines to use (n <= -2 carry twisted terms)
    :param tol: absolute tolerance of the coset sums
    :param cache: memo for E values
    :return:
    """
    cache = cache if cache is not None else Cache_Memory()
    per_line = {}
    for n in heights:
        report = parseval_check(n, s, level, tol=tol, cache=cache)
        if report.kappa is not None:
            per_line[n] = report.kappa
    if not per_line:
        raise DomainError(f"no line among {list(heights)} carries twisted coefficients")

    values = list(per_line.values())
    out = KappaCalibration(sum(values) / len(values), per_line, max(values) - min(values))
    log.info(f"Calibrated kappa={out.kappa:.9f} on lines {sorted(per_line)} (spread {out.spread:.2e})")
    return out


@dataclass
class CoefficientRecord(object):
    """
    One grid point of the coefficient comparison

    Attributes:
        level: A
        n: height exponent
        twist: Q
        s: complex point
        closed: closed-form value
        unfolded: unfolded coset-sum value
        extracted: Fourier oracle value
        closed_error: relative error closed vs extracted
        unfolded_error: relative error unfolded vs extracted
        vanishing: the closed-form vanishing rule applies
    """
    level: Poly
    n: int
    twist: Poly
    s: complex
    closed: complex
    unfolded: complex
    extracted: complex
    closed_error: float
    unfolded_error: float
    vanishing: bool

    @property
    def closed_matches(self) -> bool:
        return self.closed_error <= MATCH_TOL

    @property
    def unfolded_matches(self) -> bool:
        return self.unfolded_error <= MATCH_TOL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "A": self.level.to_text(),
            "n": self.n,
            "Q": self.twist.to_text(),
            "s": [self.s.real, self.s.imag],
            "closed": [self.closed.real, self.closed.imag],
            "unfolded": [self.unfolded.real, self.unfolded.imag],
            "extracted": [self.extracted.real, self.extracted.imag],
            "closed_error": self.closed_error,
            "unfolded_error": self.unfolded_error,
            "closed_matches": self.closed_matches,
            "unfolded_matches": self.unfolded_matches,
            "vanishing": self.vanishing,
        }


def coefficient_report(levels: Iterable[Poly], heights: Iterable[int], max_twist_degree: int,
                       s_values: Iterable[complex], tol: Optional[float] = None) -> List[CoefficientRecord]:
    """
    Closed, unfolded and extracted coefficients over a grid of (A, n, Q, s)

    :param levels: monic irreducible levels
    :param heights: values of n
    :param max_twist_degree: largest deg Q (Q = 0 always included)
    :param s_values: points with Re(s) > 1
    :param tol: absolute tolerance of the coset sums
    :return:
    """
    records = []
    heights = list(heights)
    s_values = [complex(s) for s in s_values]
    for level in levels:
        twists = [Poly.zero(level.q)] + list(enumerate_up_to(max_twist_degree, level.q))
        for s in s_values:
            cache = Cache_Memory()
            for n in heights:
                for twist in twists:
                    closed = coeff_closed(n, twist, s, level)
                    unfolded = coeff_unfolded(n, twist, s, level)
                    extracted = fourier_extract(n, twist, s, level, tol=tol, cache=cache)
                    records.append(CoefficientRecord(
                        level, n, twist, s, closed, unfolded, extracted,
                        _relative_error(closed, extracted, 1.0), _relative_error(unfolded, extracted, 1.0),
                        vanishes(n, twist, level),
                    ))
    log.info(f"Coefficient report: {sum(r.unfolded_matches for r in records)}/{len(records)} unfolded and "
             f"{sum(r.closed_matches for r in records)}/{len(records)} closed values match the oracle")
    return records


def unit_twist_ratios(n: int, twist: Poly, s: complex, level: Poly, tol: Optional[float] = None) -> Dict[int, complex]:
    """
    c(n, lambda Q, s) / c(n, Q, s) for every lambda in F_q^x, extracted

    :param n: height exponent
    :param twist: monic Q
    :param s: complex point, Re(s) > 1
    :param level: monic irreducible A
    :param tol: absolute tolerance of the coset sums
    :return:
    """
    cache = Cache_Memory()
    base = fourier_extract(n, twist, s, level, tol=tol, cache=cache)
    if abs(base) == 0:
        raise DomainError(f"c({n}, {twist}) vanishes, no ratio defined")
    return {lam: fourier_extract(n, twist.scale(lam), s, level, tol=tol, cache=cache) / base
            for lam in range(1, level.q)}


@dataclass
class EigenReport(object):
    """
    Adjacency eigen relation at one vertex

    Attributes:
        vertex: the point g
        s: complex point
        neighbor_sum: sum of E over the q + 1 neighbors
        expected: (q^s + q^(1-s)) E(g, s)
        residual: relative residual
        tolerance: accepted residual
    """
    vertex: TreeVertex
    s: complex
    neighbor_sum: complex
    expected: complex
    residual: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.residual <= self.tolerance

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertex": self.vertex.to_text(),
            "s": [self.s.real, self.s.imag],
            "neighbor_sum": [self.neighbor_sum.real, self.neighbor_sum.imag],
            "expected": [self.expected.real, self.expected.imag],
            "residual": self.residual,
            "ok": self.ok,
        }


def adjacency_eigen_check(g: TreeVertex, s: complex, level: Poly, tol: float = 1e-5,
                          cache: Optional[Cache] = None) -> EigenReport:
    """
    Sum of E over the tree neighbors against (q^s + q^(1-s)) E(g, s)

    :param g: vertex
    :param s: complex point, Re(s) > 1
    :param level: monic irreducible A
    :param tol: accepted relative residual
    :param cache: memo for E values
    :return:
    """
    s = complex(s)
    q = level.q
    # the smallest leading term among g and its neighbors sets the absolute scale
    inner_tol = tol * 1e-3 * float(q) ** ((g.n - 1) * s.real)
    total = sum((eval_direct(w, s, level, inner_tol, cache).value for w in neighbors(g)), 0j)
    expected = (complex(q) ** s + complex(q) ** (1 - s)) * eval_direct(g, s, level, inner_tol, cache).value
    return EigenReport(g, s, total, expected, _relative_error(total, expected), tol)


@dataclass
class InvarianceRecord(object):
    """
    E at g and at gamma g

    Attributes:
        gamma: element of Gamma0(A)
        vertex: the point g
        image: gamma g
        value: E(g, s)
        image_value: E(gamma g, s)
        residual: relative difference
    """
    gamma: Any
    vertex: TreeVertex
    image: TreeVertex
    value: complex
    image_value: complex
    residual: float


def _sample_vertex(rng: random.Random, q: int) -> TreeVertex:
    # heights -2..1 with purely fractional x keep the images near the base vertex
    n = rng.randint(-2, 1)
    terms = {j: rng.randrange(q) for j in range(1, -n)}
    return TreeVertex(n, Laurent.from_terms(terms, q, max(-n, 1)))


def invariance_check(level: Poly, s: complex, samples: int = 20, seed: int = 0, degbound: int = 1,
                     tol: float = 1e-8) -> List[InvarianceRecord]:
    """
    E(gamma g, s) against E(g, s) for random gamma in Gamma0(A) (entry degrees <= degbound) and random g

    :param level: monic irreducible A
    :param s: complex point, Re(s) > 1
    :param samples: number of pairs
    :param seed: random seed
    :param degbound: entry degree bound of the sampled elements
    :param tol: absolute tolerance of the coset sums
    :return:
    """
    rng = random.Random(seed)
    elements = list(bounded_elements(level, degbound))
    cache = Cache_Memory()
    records = []
    for _ in range(samples):
        gamma = rng.choice(elements)
        g = _sample_vertex(rng, level.q)
        image = vertex_of_matrix(gamma, g)
        value = eval_direct(g, s, level, tol, cache).value
        image_value = eval_direct(image, s, level, tol, cache).value
        records.append(InvarianceRecord(gamma, g, image, value, image_value, _relative_error(value, image_value)))
    return records
