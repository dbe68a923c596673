#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import numpy as np
import orjson
import pytest

from fractions import Fraction

from ffque.arith import Poly
from ffque.util import (
    batched,
    dump_json,
    parse_complex,
    parse_int_list,
    timeit,
    to_jsonable,
)


def test_parse_int_list() -> None:
    assert parse_int_list("1-3,6") == [1, 2, 3, 6]
    assert parse_int_list("5, 2,2") == [2, 5]
    assert parse_int_list("-3,0") == [-3, 0]
    assert parse_int_list("") == []

    for text in ("4-2", "a", "1-"):
        with pytest.raises(ValueError):
            parse_int_list(text)


def test_parse_complex() -> None:
    assert parse_complex("2") == 2
    assert parse_complex("2+0i") == 2
    assert parse_complex("2.5+i") == complex(2.5, 1)
    assert parse_complex("0.5 - 0.7i") == complex(0.5, -0.7)
    assert parse_complex("-i") == -1j
    assert parse_complex("1.5+0.5j") == complex(1.5, 0.5)

    with pytest.raises(ValueError):
        parse_complex("1+x")


def test_batched() -> None:
    assert list(batched([1, 2, 3, 4, 5], size=2)) == [[1, 2], [3, 4], [5]]
    assert list(batched([], size=3)) == []


def test_dump_json(q5: int) -> None:
    payload = {"slope": np.float64(0.25), "values": np.arange(3), "psi": Fraction(1, 2), "A": Poly.T(q5), 1: True}
    data = orjson.loads(dump_json(payload))
    assert data == {"slope": 0.25, "values": [0, 1, 2], "psi": "1/2", "A": "T", "1": True}
    assert b"\n" not in dump_json(payload, indent=False)
    assert to_jsonable({"x": Fraction(3)}) == {"x": "3"}


def test_timeit() -> None:
    @timeit
    def add(a: int, b: int) -> int:
        return a + b

    assert add(2, 3) == 5
    assert add.__name__ == "add"
