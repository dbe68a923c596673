#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import pytest

from ffque.arith import (
    Poly,
    irreducibles,
)
from ffque.cache import Cache_Memory
from ffque.controller import (
    Controller,
    ControllerState,
)
from ffque.exceptions import FFQueError
from ffque.que import (
    LevelRecord,
    SuiteResult,
    TestWeight,
)
from ffque.worker import (
    Job,
    JobType,
    execute_job,
)


def _payload(level: Poly) -> dict:
    return {"level": level, "t": 1.0, "weight": TestWeight.delta(0), "kappa": 1.0, "model": "closed"}


def test_execute_job(c: Cache_Memory, t5: Poly) -> None:
    result = execute_job(Job(id=0, type=JobType.Level, payload=_payload(t5)), c)
    assert result.error is None
    assert isinstance(result.data, LevelRecord)
    assert result.data.level == t5

    result = execute_job(Job(id=1, type=JobType.Suite, payload={"name": "index", "cfg": {"FFQ_Q": 5}}), c)
    assert isinstance(result.data, SuiteResult)
    assert result.data.passed

    # domain errors become failed results
    result = execute_job(Job(id=2, type=JobType.Level, payload=_payload(t5 ** 2)), c)
    assert result.data is None
    assert result.error.startswith("DomainError")


def test_controller_inline(q5: int, t5: Poly) -> None:
    levels = [t5, irreducibles(2, q5)[0]]
    with Controller(num_workers=0, cache=Cache_Memory()) as controller:
        assert controller.inline
        assert controller.state == ControllerState.RUNNING
        records = controller.run([_payload(a) for a in levels], JobType.Level)
        assert [r.level for r in records] == levels

        # ids keep counting across runs
        assert controller.submit(JobType.Level, _payload(t5)) == 2
        assert len(controller.wait()) == 3

        with pytest.raises(FFQueError):
            controller.run([_payload(t5), _payload(t5 ** 2)], JobType.Level)
    assert controller.state == ControllerState.TERMINATING


def test_controller_pool(q5: int) -> None:
    levels = [irreducibles(d, q5)[0] for d in (1, 2, 3)]
    with Controller(num_workers=2) as controller:
        assert not controller.inline
        records = controller.run([_payload(a) for a in levels], JobType.Level)
    # results are released in submission order
    assert [r.level for r in records] == levels
    assert all(r.I1 > 0 for r in records)
