#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import logging
import pytest

import ffque.cache
import ffque.db
from ffque.arith import Poly
from ffque.config import CONFIG as C

log = logging.getLogger(__name__)


def pytest_configure(config):
    logging.basicConfig(level=C["LOG_LEVEL"], format=C["LOG_FORMAT"], datefmt=C["LOG_DATE_FORMAT"])


@pytest.fixture(scope="session")
def c() -> ffque.cache.Cache:
    return ffque.cache.Cache_Memory()


@pytest.fixture(scope="session")
def dbm() -> ffque.db.ResultDB:
    """
    In-memory SQlite database for testing
    """
    db = ffque.db.ResultDB(
        conn="sqlite://",
        verbose=C["DB_DEBUG"],
    )
    db.create_schema()
    return db


@pytest.fixture(scope="session")
def q5() -> int:
    return 5


@pytest.fixture(scope="session")
def t5(q5: int) -> Poly:
    return Poly.T(q5)
