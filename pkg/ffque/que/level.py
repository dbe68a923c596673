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
)

import logging
import math
from dataclasses import dataclass

from ffque.arith import (
    Poly,
    irreducibles,
)
from ffque.config import CONFIG as C
from ffque.exceptions import DomainError
from .integral import (
    I1_excess_bound,
    compute_I,
)
from .predict import predict
from .weight import TestWeight

log = logging.getLogger(__name__)

CSV_COLUMNS = (
    "q", "A", "deg_A", "abs_A", "m", "t", "H0", "I1", "I2", "I", "predicted_leading", "scaled_I", "residual",
    "cusp", "scaled_I1", "scaled_I2", "scaled_I1_bound",
)


@dataclass
class LevelRecord(object):
    """
    One level of a sweep

    Attributes:
        level: A
        t: spectral parameter
        H0: total mass of psi
        m: index |A| + 1
        I1: constant term contribution
        I2: twisted contribution
        predicted_leading: residue-side leading term
        residual: deviation of scaled_I2 from the fitted model (None before the fit or for a single level)
        cusp: level independent part of I1
        I1_bound: bound for |I1 - cusp| (None when not known)
    """
    level: Poly
    t: float
    H0: float
    m: int
    I1: float
    I2: float
    predicted_leading: float
    residual: Optional[float] = None
    cusp: float = 0.0
    I1_bound: Optional[float] = None

    @property
    def q(self) -> int:
        return self.level.q

    @property
    def deg_A(self) -> int:
        return int(self.level.degree)

    @property
    def abs_A(self) -> int:
        return self.level.norm

    @property
    def I(self) -> float:
        return self.I1 + self.I2

    @property
    def log_abs_A(self) -> float:
        return math.log(self.abs_A)

    @property
    def scale(self) -> float:
        return self.m / self.H0

    @property
    def scaled_I1(self) -> float:
        """
        (m / H(0)) (I1 - cusp), bounded in deg A
        """
        return self.scale * (self.I1 - self.cusp)

    @property
    def scaled_I2(self) -> float:
        """
        (m / H(0)) I2, the part growing with log|A|
        """
        return self.scale * self.I2

    @property
    def scaled_I(self) -> float:
        """
        (m / H(0)) (I - cusp)
        """
        return self.scaled_I1 + self.scaled_I2

    @property
    def scaled_I1_bound(self) -> Optional[float]:
        return None if self.I1_bound is None else self.scale * self.I1_bound

    @property
    def I1_within_bound(self) -> bool:
        bound = self.scaled_I1_bound
        return bound is None or abs(self.scaled_I1) <= bound * (1 + 1e-9)

    def to_row(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "A": self.level.to_text(),
            "deg_A": self.deg_A,
            "abs_A": self.abs_A,
            "m": self.m,
            "t": self.t,
            "H0": self.H0,
            "I1": self.I1,
            "I2": self.I2,
            "I": self.I,
            "predicted_leading": self.predicted_leading,
            "scaled_I": self.scaled_I,
            "residual": "" if self.residual is None else self.residual,
            "cusp": self.cusp,
            "scaled_I1": self.scaled_I1,
            "scaled_I2": self.scaled_I2,
            "scaled_I1_bound": "" if self.I1_bound is None else self.scaled_I1_bound,
        }


def select_levels(q: int, degrees: Iterable[int]) -> List[Poly]:
    """
    The first monic irreducible of each degree, in enumeration order

    :param q: field size
    :param degrees: degrees of A
    :return:
    """
    out = []
    for d in degrees:
        if d < 1:
            raise DomainError(f"level degrees start at 1, got {d}")
        out.append(irreducibles(d, q)[0])
    return out


def compute_level(level: Poly, t: float, weight: TestWeight, kappa: Optional[float] = None,
                  model: Optional[str] = None) -> LevelRecord:
    """
    I1, I2 and the prediction for one level

    :param level: monic irreducible A
    :param t: spectral parameter
    :param weight: psi
    :param kappa: unit multiplicity constant (default ``resolve_kappa``)
    :param model: coefficient model (default ``QUE_MODEL``)
    :return:
    """
    if weight.mass == 0:
        raise DomainError(f"weight {weight} has zero mass, (m / H(0)) I is undefined")
    model = C["QUE_MODEL"] if model is None else model
    values = compute_I(level, t, weight, kappa, model)
    prediction = predict(level, t, weight)
    # the bound holds for the closed constant term, shared by the closed and leading models
    bound = None if model == "unfolded" else I1_excess_bound(level, weight)
    log.info(f"Level A={level} (deg {level.degree}): I1={values.I1:.9g} I2={values.I2:.9g} "
             f"predicted leading {prediction.leading:.9g}")
    return LevelRecord(level, t, prediction.H0, prediction.m, values.I1, values.I2, prediction.leading,
                       cusp=values.cusp, I1_bound=bound)
