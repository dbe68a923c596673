#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import logging
import math
import pytest

from pathlib import Path

from ffque.config import (
    CONFIG as C,
    is_prime,
    load_config,
    parse_config,
    validate_config,
)
from ffque.exceptions import ConfigError


def test_defaults() -> None:
    cfg = validate_config(dict(C))
    assert cfg["FFQ_Q"] == 5
    assert cfg["QUE_MODEL"] == "leading"
    assert cfg["QUE_KAPPA"] is None
    assert cfg["FFQ_NUM_WORKERS"] >= 0
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(7919) and not is_prime(7917) and not is_prime(7919 ** 2)


def test_parse_config() -> None:
    text = """
# sweep settings
q = 7
t = 0.5
workers = 2
kappa = 6
psi = 0:1,1:1/2
model = unfolded
deg_max = 4
LOG_LEVEL = debug
DB_SCHEMA = none
"""
    cfg = parse_config(text)
    assert cfg["FFQ_Q"] == 7
    assert cfg["FFQ_T"] == 0.5
    assert cfg["FFQ_NUM_WORKERS"] == 2
    assert cfg["QUE_KAPPA"] == 6.0
    assert cfg["QUE_PSI"] == "0:1,1:1/2"
    assert cfg["QUE_MODEL"] == "unfolded"
    assert cfg["QUE_DEG_MAX"] == 4
    assert cfg["LOG_LEVEL"] == logging.DEBUG
    assert cfg["DB_SCHEMA"] is None
    # the base configuration is not modified
    assert C["FFQ_Q"] == 5


def test_parse_config_errors() -> None:
    with pytest.raises(ConfigError) as e:
        parse_config("q = 7\nthis line has no separator\n")
    assert e.value.line == 2

    with pytest.raises(ConfigError) as e:
        parse_config("\n# comment\nbogus = 1\n")
    assert e.value.line == 3
    assert e.value.field == "BOGUS"

    with pytest.raises(ConfigError) as e:
        parse_config("t = 1\nq = abc\n")
    assert e.value.line == 2
    assert e.value.field == "FFQ_Q"

    # validation errors point at the line that set the key
    with pytest.raises(ConfigError) as e:
        parse_config("t = 1\nq = 9\n")
    assert e.value.line == 2
    assert e.value.field == "FFQ_Q"


@pytest.mark.parametrize("key, value", [
    ("FFQ_Q", 3),
    ("FFQ_Q", 25),
    ("FFQ_T", 0.0),
    ("FFQ_T", math.pi / math.log(5)),
    ("COSET_MAX_DEGREE", 0),
    ("EISENSTEIN_TOL", -1e-3),
    ("QUE_DEG_MIN", 0),
    ("QUE_DEG_MAX", -1),
    ("QUE_MODEL", "exact"),
    ("QUE_KAPPA", 0.0),
    ("FFQ_NUM_WORKERS", -1),
])
def test_validate_config(key: str, value: object) -> None:
    with pytest.raises(ConfigError) as e:
        validate_config({**C, key: value})
    assert e.value.field in (key, "QUE_DEG_MAX")


def test_load_config(tmp_path: Path) -> None:
    path = tmp_path / "ffque.conf"
    path.write_text("q = 11\nt = 2.0\n", encoding="utf-8")
    cfg = load_config(str(path))
    assert cfg["FFQ_Q"] == 11
    assert cfg["FFQ_T"] == 2.0
