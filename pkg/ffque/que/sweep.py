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
    Tuple,
)

import csv
import logging
import math
from dataclasses import (
    dataclass,
    field,
)
from pathlib import Path

import numpy as np

import ffque.controller
from ffque.config import CONFIG as C
from ffque.util import dump_json
from ffque.worker.job import JobType
from .integral import resolve_kappa
from .level import (
    CSV_COLUMNS,
    LevelRecord,
    select_levels,
)
from .predict import (
    residue_slope,
    target_slope,
)
from .weight import TestWeight

log = logging.getLogger(__name__)


# relative window for the fitted slope against ``residue_slope``
SLOPE_TOL = 0.2
# largest residual accepted, as a fraction of the growth over one degree
RESIDUAL_TOL = 0.1
# fewest levels for which the q^(2ita) oscillation is fitted as well
OSCILLATION_MIN_LEVELS = 5


@dataclass
class QueRun(object):
    """
    A level sweep and its regression of (m / H(0)) I2 against log|A|

    The twisted sum also carries the simple poles at s = +-2it: terms Re(C q^(-2ita)) of bounded size.
    With enough levels they are fitted alongside the line, as u cos(a theta) + v sin(a theta) with
    theta = 2 t log q, so that the slope measures the growth alone.

    Attributes:
        q: field size
        t: spectral parameter
        weight: psi
        kappa: unit multiplicity constant used for I2
        model: coefficient model
        records: per-level results, in degree order
        fitted_slope: least squares slope (None with fewer than two levels)
        intercept: least squares intercept (None with fewer than two levels)
        oscillation: fitted (u, v), or None when only a line was fitted
    """
    q: int
    t: float
    weight: TestWeight
    kappa: float
    model: str
    records: List[LevelRecord] = field(default_factory=list)
    fitted_slope: Optional[float] = None
    intercept: Optional[float] = None
    oscillation: Optional[Tuple[float, float]] = None

    @property
    def target_slope(self) -> float:
        return target_slope(self.q)

    @property
    def residue_slope(self) -> float:
        return residue_slope(self.q, self.kappa)

    @property
    def theta(self) -> float:
        return 2 * self.t * math.log(self.q)

    @property
    def max_residual(self) -> Optional[float]:
        values = [abs(r.residual) for r in self.records if r.residual is not None]
        return max(values) if values else None

    @property
    def slope_error(self) -> Optional[float]:
        """
        Relative deviation of the fitted slope from ``residue_slope``
        """
        if self.fitted_slope is None:
            return None
        return abs(self.fitted_slope - self.residue_slope) / self.residue_slope

    @property
    def target_ratio(self) -> Optional[float]:
        """
        fitted slope / target slope
        """
        if self.fitted_slope is None:
            return None
        return self.fitted_slope / self.target_slope

    @property
    def slope_ok(self) -> bool:
        return self.slope_error is not None and self.slope_error <= SLOPE_TOL

    @property
    def residuals_ok(self) -> bool:
        if self.max_residual is None:
            return False
        return self.max_residual <= RESIDUAL_TOL * self.residue_slope * math.log(self.q)

    @property
    def I1_ratio(self) -> Optional[float]:
        """
        max I1 / min I1 across the sweep
        """
        values = [r.I1 for r in self.records]
        if not values or min(values) <= 0:
            return None
        return max(values) / min(values)

    @property
    def max_scaled_I1(self) -> Optional[float]:
        values = [abs(r.scaled_I1) for r in self.records]
        return max(values) if values else None

    @property
    def I1_bounded(self) -> bool:
        """
        Every (m / H(0)) (I1 - cusp) within its bound
        """
        return all(r.I1_within_bound for r in self.records)

    def trend(self, record: LevelRecord) -> float:
        """
        (m / H(0)) I2 with the fitted oscillation removed
        """
        if self.oscillation is None:
            return record.scaled_I2
        u, v = self.oscillation
        a = record.deg_A
        return record.scaled_I2 - u * math.cos(a * self.theta) - v * math.sin(a * self.theta)

    @property
    def increasing(self) -> bool:
        """
        The trend increases with deg A from degree 2 on
        """
        values = [self.trend(r) for r in self.records if r.deg_A >= 2]
        return all(x < y for x, y in zip(values, values[1:]))

    def fit(self) -> None:
        """
        Least squares fit of (m / H(0)) I2 against log|A| (and the oscillation); residuals are filled in per record
        """
        if len(self.records) < 2:
            self.fitted_slope = None
            self.intercept = None
            self.oscillation = None
            for r in self.records:
                r.residual = None
            log.warning(f"Regression needs at least two levels, got {len(self.records)}: slope undefined")
            return

        x = np.array([r.log_abs_A for r in self.records])
        y = np.array([r.scaled_I2 for r in self.records])
        columns = [x, np.ones_like(x)]
        if len(self.records) >= OSCILLATION_MIN_LEVELS:
            a = np.array([r.deg_A for r in self.records], dtype=float)
            columns += [np.cos(a * self.theta), np.sin(a * self.theta)]
        design = np.column_stack(columns)
        coef, _, _, _ = np.linalg.lstsq(design, y, rcond=None)

        self.fitted_slope = float(coef[0])
        self.intercept = float(coef[1])
        self.oscillation = (float(coef[2]), float(coef[3])) if len(coef) == 4 else None
        for r, residual in zip(self.records, y - design @ coef):
            r.residual = float(residual)

    def summary(self) -> Dict[str, Any]:
        return {
            "fitted_slope": self.fitted_slope,
            "target_slope": self.target_slope,
            "residue_slope": self.residue_slope,
            "max_residual": self.max_residual,
            "kappa": self.kappa,
        }

    def details(self) -> Dict[str, Any]:
        return {
            **self.summary(),
            "q": self.q,
            "t": self.t,
            "psi": self.weight.to_text(),
            "model": self.model,
            "intercept": self.intercept,
            "oscillation": self.oscillation,
            "slope_error": self.slope_error,
            "target_ratio": self.target_ratio,
            "I1_ratio": self.I1_ratio,
            "max_scaled_I1": self.max_scaled_I1,
            "I1_bounded": self.I1_bounded,
            "increasing": self.increasing,
            "levels": [r.level.to_text() for r in self.records],
        }


def que_sweep(q: int, t: float, degrees: Iterable[int], weight: TestWeight, kappa: Optional[float] = None,
              model: Optional[str] = None, num_workers: Optional[int] = None) -> QueRun:
    """
    Compute I for one irreducible A per degree and regress (m / H(0)) I2 against log|A|

    :param q: field size
    :param t: spectral parameter
    :param degrees: degrees of A
    :param weight: psi
    :param kappa: unit multiplicity constant (default ``resolve_kappa``, q - 1 unless ``QUE_KAPPA`` is set)
    :param model: coefficient model (default ``QUE_MODEL``)
    :param num_workers: worker processes (default ``FFQ_NUM_WORKERS``, 0 runs inline)
    :return:
    """
    kappa = resolve_kappa(q, kappa)
    model = C["QUE_MODEL"] if model is None else model
    levels = select_levels(q, degrees)
    log.info(f"Sweeping {len(levels)} levels at q={q} t={t} psi={weight} kappa={kappa} ({model})")

    payloads = [{"level": a, "t": t, "weight": weight, "kappa": kappa, "model": model} for a in levels]
    with ffque.controller.Controller(num_workers=num_workers) as controller:
        records = controller.run(payloads, JobType.Level)

    run = QueRun(q, t, weight, kappa, model, records)
    run.fit()
    log.info(f"Fitted slope {run.fitted_slope} against {run.residue_slope:.6f} "
             f"(target {run.target_slope:.6f}, max residual {run.max_residual})")
    return run


def write_csv(run: QueRun, path: Path) -> int:
    """
    One row per level with the columns of ``CSV_COLUMNS``

    :param run: sweep
    :param path: target file
    :return: number of rows written
    """
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for r in run.records:
            writer.writerow(r.to_row())
    log.info(f"Wrote {len(run.records)} rows to '{path}'")
    return len(run.records)


def write_summary(run: QueRun, path: Path) -> None:
    Path(path).write_bytes(dump_json(run.details()))
    log.info(f"Wrote sweep summary to '{path}'")
