#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from sqlalchemy import select

from ffque.arith import (
    Poly,
    irreducibles,
)
from ffque.db import (
    ResultDB,
    build_url,
    url_from_config,
)
from ffque.config import CONFIG as C
from ffque.que import (
    CheckResult,
    LevelRecord,
    QueRun,
    SuiteResult,
    TestWeight,
)


def _sample_run(q: int) -> QueRun:
    levels = [Poly.T(q), irreducibles(2, q)[0], irreducibles(3, q)[0]]
    records = [
        LevelRecord(a, 1.0, 1.0, a.norm + 1, I1=0.5 * k, I2=0.25 * k * k, predicted_leading=0.1 * k)
        for k, a in enumerate(levels, start=1)
    ]
    run = QueRun(q, 1.0, TestWeight.delta(0), 1.0, "closed", records)
    run.fit()
    return run


def test_dbm(dbm: ResultDB, q5: int) -> None:
    run = _sample_run(q5)
    run_id = dbm.store_sweep(run, batch_size=2)

    rows = dbm.sweep_levels(run_id)
    assert [r["deg_A"] for r in rows] == [1, 2, 3]
    assert rows[0]["A"] == "T"
    assert [r["I1"] for r in rows] == [r.I1 for r in run.records]
    assert [r["scaled_I"] for r in rows] == [r.scaled_I for r in run.records]

    with dbm.session() as session:
        stored = session.execute(
            select(dbm.orm.SweepRun)
                .filter(dbm.orm.SweepRun.id == run_id)
        ).scalar()

        assert stored.model == "closed"
        assert stored.psi == "0:1"
        assert stored.fitted_slope == run.fitted_slope
        assert len(stored.levels) == 3

    assert dbm.sweep_levels(run_id + 1000) == []


def test_dbm_suites(dbm: ResultDB) -> None:
    results = [
        SuiteResult("index", [CheckResult("index", True)], 0.5),
        SuiteResult("tree", [CheckResult("path", False), CheckResult("band", False, hard=False)], 1.5),
    ]
    ids = dbm.store_suites({"suites": [r.to_dict() for r in results]})
    assert len(ids) == 2

    with dbm.session() as session:
        records = session.execute(
            select(dbm.orm.SuiteRecord)
                .filter(dbm.orm.SuiteRecord.id.in_(ids))
                .order_by(dbm.orm.SuiteRecord.id)
        ).scalars().all()

        assert [r.suite for r in records] == ["index", "tree"]
        assert [r.passed for r in records] == [True, False]
        assert [r.failures for r in records] == [0, 1]
        assert records[1].data["failures"] == ["path"]


def test_url() -> None:
    assert build_url("sqlite", "ffque.db") == "sqlite:///ffque.db"
    assert build_url("sqlite", "") == "sqlite://"
    assert build_url("postgresql", "db", "localhost", 5432, "user", "pw") == "postgresql://user:pw@localhost:5432/db"
    assert url_from_config({**C, "DB_DRIVER": "sqlite", "DB_DATABASE": "x.db"}) == "sqlite:///x.db"
