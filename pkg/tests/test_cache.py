#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import pytest
import redis

from ffque.arith import Poly
from ffque.cache import (
    Cache,
    Cache_Dummy,
    Cache_Memory,
    Cache_Redis,
    build_cache,
    make_key,
)
from ffque.config import CONFIG as C
from ffque.exceptions import ConfigError


def _check_roundtrip(c: Cache) -> None:
    # check service availability
    assert c.ping()

    key = "_test_cache"
    values = [
        b"test",
        False,
        "test",
        1234,
        1234.5,
        complex(1.5, -0.25),
        ["a", 2, "xyz", True],
        ("a", 2, "xyz", True),
        {"a", 2, "xyz", True},
        {"a": 1, "b": "xyz", "c": True},
        Poly([1, 2, 3], 5),
    ]
    for value in values:
        c.set(key, value)
        assert c.get(key) == value
        assert key in c

    # check entry removal
    c.remove(key)
    assert c.get(key) is None
    assert key not in c

    # default value
    assert c.get("_wrong_key") is None
    assert c.get("_wrong_key", [1, 2, 3]) == [1, 2, 3]

    calls = []

    def compute() -> int:
        calls.append(1)
        return 42

    assert c.get_or_compute("_test_compute", compute) == 42
    assert c.get_or_compute("_test_compute", compute) == 42
    assert len(calls) == 1

    c.flush()
    assert c.get("_test_compute") is None


def test_cache(c: Cache_Memory) -> None:
    _check_roundtrip(c)


def test_memory_stats() -> None:
    c = Cache_Memory()
    c.set("a", 1)
    c.get("a")
    c.get("b")
    assert c.stats == {"size": 1, "hits": 1, "misses": 1}
    c.flush()
    assert c.stats["size"] == 0


def test_dummy() -> None:
    c = Cache_Dummy()
    assert c.ping()
    c.set("a", 1)
    assert c.get("a") is None
    assert c.get("a", 2) == 2
    assert c.get_or_compute("a", lambda: 3) == 3
    assert "a" not in c


def test_make_key(t5: Poly) -> None:
    assert make_key("eis", 5, t5 + 1, 2.0) == "eis|5|T+1|2.0"
    assert make_key("eis", t5) != make_key("eis", t5 + 1)


def test_build_cache() -> None:
    assert isinstance(build_cache({**C, "CACHE_BACKEND": "memory"}), Cache_Memory)
    assert isinstance(build_cache({**C, "CACHE_BACKEND": "None"}), Cache_Dummy)
    assert isinstance(build_cache({**C, "CACHE_BACKEND": "redis"}), Cache_Redis)

    with pytest.raises(ConfigError) as e:
        build_cache({**C, "CACHE_BACKEND": "disk"})
    assert e.value.field == "CACHE_BACKEND"


def test_redis() -> None:
    c = build_cache({**C, "CACHE_BACKEND": "redis"})
    try:
        c.ping()
    except redis.exceptions.ConnectionError:
        pytest.skip("redis server not reachable")
    _check_roundtrip(c)
