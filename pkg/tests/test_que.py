#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import csv
import math
import orjson
import pytest

from fractions import Fraction
from pathlib import Path

from ffque.arith import Poly
from ffque.config import (
    CONFIG as C,
    validate_config,
)
from ffque.exceptions import (
    DomainError,
    ResourceError,
)
from ffque.que import (
    CSV_COLUMNS,
    SLOPE_TOL,
    QueRun,
    TestWeight,
    compute_I,
    compute_level,
    g0_bracket,
    g0_closed,
    mellin,
    mellin_inverse,
    predict,
    que_sweep,
    resolve_kappa,
    run_suite,
    run_verification_suite,
    select_levels,
    target_slope,
    write_csv,
    write_summary,
)


def test_weight() -> None:
    w = TestWeight.parse("0:1, 1:1/2")
    assert w.support == {0: Fraction(1), 1: Fraction(1, 2)}
    assert w.mass == Fraction(3, 2)
    assert w(1) == Fraction(1, 2)
    assert w(7) == 0
    assert w.to_text() == "0:1,1:1/2"
    assert TestWeight.parse(w.to_text()) == w
    assert TestWeight.delta(2).support == {2: 1}

    for text in ("", "0:0", "0", "a:1", "0:1/0"):
        with pytest.raises(DomainError):
            TestWeight.parse(text)


def test_mellin(q5: int) -> None:
    w = TestWeight({0: Fraction(1), 1: Fraction(1)})
    assert abs(mellin(w, 0, q5) - 2) < 1e-12
    assert abs(mellin(w, 1, q5) - (1 + 1 / q5)) < 1e-12
    for n in (-1, 0, 1, 2):
        assert abs(mellin_inverse(w, n, q5) - float(w(n))) <= 1e-9
    assert abs(mellin_inverse(w, 1, q5, points=8) - 1) <= 1e-9

    with pytest.raises(DomainError):
        mellin_inverse(w, 0, q5, points=1)


def test_prediction(q5: int, t5: Poly) -> None:
    assert abs(target_slope(q5) - 0.37280) < 1e-5
    for t in (0.3, 1.0, 2.5):
        assert abs(g0_bracket(q5, t, q5) - g0_closed(q5, t, q5)) <= 1e-10 * g0_closed(q5, t, q5)

    w = TestWeight.parse("0:1,1:1/2")
    p = predict(t5, 1.0, w)
    assert p.m == q5 + 1
    assert p.H0 == 1.5
    assert abs(p.leading - target_slope(q5) * math.log(q5) * 1.5 / 6) < 1e-12
    assert p.g0_ok

    with pytest.raises(DomainError):
        predict(t5, 0.0, w)
    with pytest.raises(DomainError):
        predict(t5, math.pi / math.log(q5), w)


def test_compute_I(q5: int, t5: Poly) -> None:
    w = TestWeight.parse("0:1,-2:1")
    base = compute_I(t5, 1.0, w, 1.0, "closed")
    # deg Q <= a - 2 - n at n = -2: the monic Q of degree 0 and 1
    assert base.num_twists == 1 + q5
    assert base.I == base.I1 + base.I2
    assert base.I1 > 0 and base.I2 > 0

    doubled = compute_I(t5, 1.0, w, 2.0, "closed")
    assert doubled.I1 == base.I1
    assert abs(doubled.I2 - 2 * base.I2) <= 1e-12 * base.I2

    shifted = compute_I(t5, 1.0 + math.pi / math.log(q5), w, 1.0, "closed")
    mirrored = compute_I(t5, -1.0, w, 1.0, "closed")
    assert abs(shifted.I - base.I) <= 1e-9 * base.I
    assert abs(mirrored.I - base.I) <= 1e-12 * base.I

    assert compute_I(t5, 1.0, w, 1.0, "unfolded").num_twists == 1
    assert compute_I(t5, 1.0, TestWeight.delta(0), 1.0, "closed").num_twists == 0
    leading = compute_I(t5, 1.0, w, 1.0, "leading")
    assert leading.I1 == base.I1

    with pytest.raises(DomainError):
        compute_I(t5, 1.0, w, 1.0, "bogus")
    with pytest.raises(ResourceError):
        compute_I(t5, 1.0, TestWeight.delta(-9), 1.0, "closed", max_twist_degree=7)
    with pytest.raises(DomainError):
        compute_I(t5 ** 2, 1.0, w, 1.0, "closed")


def test_levels(q5: int, t5: Poly) -> None:
    assert select_levels(q5, [1, 2]) == [t5, t5 ** 2 + t5 + 1]
    with pytest.raises(DomainError):
        select_levels(q5, [0, 1])

    w = TestWeight.parse("0:1,1:1/2")
    record = compute_level(t5, 1.0, w, 1.0, "closed")
    assert record.deg_A == 1 and record.abs_A == q5
    assert record.m == q5 + 1
    assert record.H0 == 1.5
    assert record.I == record.I1 + record.I2
    assert record.cusp == 1 + 0.5 * q5
    assert abs(record.scaled_I - record.m / record.H0 * (record.I - record.cusp)) <= 1e-9 * abs(record.scaled_I)
    assert abs(record.scaled_I2 - record.m / record.H0 * record.I2) <= 1e-12 * record.scaled_I2
    assert record.I1_within_bound
    assert record.residual is None
    assert tuple(record.to_row()) == CSV_COLUMNS

    with pytest.raises(DomainError):
        compute_level(t5, 1.0, TestWeight({0: Fraction(1), 1: Fraction(-1)}), 1.0)


def test_sweep(q5: int, tmp_path: Path) -> None:
    w = TestWeight.delta(0)
    run = que_sweep(q5, 1.0, [1, 2, 3], w, kappa=1.0, model="closed", num_workers=0)
    assert [r.deg_A for r in run.records] == [1, 2, 3]
    assert run.fitted_slope is not None
    assert all(r.residual is not None for r in run.records)
    assert set(run.summary()) == {"fitted_slope", "target_slope", "residue_slope", "max_residual", "kappa"}
    assert run.oscillation is None
    assert run.details()["levels"] == [r.level.to_text() for r in run.records]

    path = tmp_path / "que.csv"
    assert write_csv(run, path) == 3
    with open(path, newline="", encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    assert [int(r["deg_A"]) for r in rows] == [1, 2, 3]
    assert tuple(rows[0]) == CSV_COLUMNS

    path = tmp_path / "que.json"
    write_summary(run, path)
    summary = orjson.loads(path.read_bytes())
    assert summary["fitted_slope"] == run.fitted_slope
    assert summary["model"] == "closed"

    single = QueRun(q5, 1.0, w, 1.0, "closed", run.records[:1])
    single.fit()
    assert single.fitted_slope is None
    assert single.slope_error is None
    assert single.max_residual is None


def test_suites() -> None:
    cfg = validate_config(dict(C))
    result = run_suite("index", cfg)
    assert result.passed
    assert result.failures == []
    assert result.to_dict()["name"] == "index"

    status, summary = run_verification_suite(cfg, ["index"], num_workers=0)
    assert status == 0
    assert summary["passed"]
    assert summary["failed_suites"] == []
    assert summary["q"] == cfg["FFQ_Q"]

    with pytest.raises(DomainError):
        run_suite("bogus", cfg)


def test_default_kappa(q5: int) -> None:
    level = select_levels(q5, [3])[0]
    w = TestWeight.delta(0)
    assert C["QUE_KAPPA"] is None
    assert resolve_kappa(q5) == q5 - 1
    assert resolve_kappa(q5, 2.5) == 2.5

    default = compute_I(level, 1.0, w, model="leading")
    single = compute_I(level, 1.0, w, 1.0, "leading")
    assert default.kappa == q5 - 1
    assert default.I1 == single.I1
    assert abs(default.I2 - (q5 - 1) * single.I2) <= 1e-12 * default.I2
    assert compute_level(level, 1.0, w, model="leading").I2 == default.I2


def test_sweep_slope(q5: int) -> None:
    w = TestWeight.delta(0)
    run = que_sweep(q5, 1.0, range(1, 7), w, model="leading", num_workers=0)
    assert run.kappa == q5 - 1
    assert abs(run.residue_slope - 2 * (q5 - 1) * target_slope(q5)) <= 1e-12
    assert run.oscillation is not None

    # the exact twisted sums grow at the full residue slope, within a few percent from degree 6 on
    assert run.slope_ok
    assert run.slope_error <= 0.05
    assert run.residuals_ok
    assert run.increasing
    assert run.target_ratio > 1 + SLOPE_TOL

    # (m / H(0)) (I1 - cusp) stays below a bound independent of deg A
    assert run.I1_bounded
    assert run.max_scaled_I1 <= 25
    assert all(r.cusp == 1 for r in run.records)
    assert all(r.scaled_I1_bound <= 25 for r in run.records)

    # a line without the oscillation terms misses the slope at t = 1, where q^(2it) is close to -1
    line = QueRun(q5, 1.0, w, run.kappa, "leading", run.records[:4])
    line.fit()
    assert line.oscillation is None
    assert not line.slope_ok


def test_que_suite() -> None:
    cfg = validate_config(dict(C))
    result = run_suite("que", cfg)
    assert result.passed, result.failures
    names = {c.name: c for c in result.checks}
    assert names["slope within 20% of kappa (1 + 1/q) / log q"].hard
    assert names["(m / H(0)) (I1 - cusp) within its bound"].hard
    assert not names["slope within 20% of (1 + 1/q) / (2 log q)"].hard
