#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Iterator,
    List,
    Sequence,
    TypeVar,
)

import functools
import logging
import time

import orjson

log = logging.getLogger(__name__)

__all__ = ["timeit", "batched", "parse_int_list", "parse_complex", "dump_json", "to_jsonable"]

T = TypeVar("T")


def timeit(func: callable) -> callable:
    """
    Decorator for measuring a function's running time

    :param func: function
    :return:
    """
    @functools.wraps(func)
    def measure_time(*args, **kwargs):
        start_time = time.time()
        result = func(*args, **kwargs)
        elapsed = time.time() - start_time
        log.info(f"Processing time of '{func.__qualname__}()': {elapsed:.4f} seconds.")
        return result

    return measure_time


def batched(a: Sequence[T], size: int = 8) -> Iterator[Sequence[T]]:
    """
    Yield successive evenly-sized chunks from a sequence (the last one may be shorter)

    :param a: source sequence
    :param size: chunk size
    :return:
    """
    assert size > 0
    for i in range(0, len(a), size):
        yield a[i:i + size]


def parse_int_list(text: str) -> List[int]:
    """
    Parse "1,2,5" or a range "1-4" (or a mix, "1-3,6") into a sorted list of unique integers

    :param text: comma separated values
    :return:
    """
    out = set()
    for part in (p.strip() for p in text.split(",")):
        if not part:
            continue
        head, sep, tail = part.partition("-")
        if sep and head:
            lo, hi = int(head), int(tail)
            if hi < lo:
                raise ValueError(f"empty range '{part}'")
            out.update(range(lo, hi + 1))
        else:
            out.add(int(part))
    return sorted(out)


def parse_complex(text: str) -> complex:
    """
    Parse "2", "2+0i", "2.5+i", "0.5-0.7i" or "-i"; "j" is accepted in place of "i"

    :param text: complex number in a + bi form
    :return:
    """
    value = text.strip().replace(" ", "").replace("I", "i").replace("i", "j")
    if value.endswith("j") and (len(value) == 1 or value[-2] in "+-"):
        value = value[:-1] + "1j"
    try:
        return complex(value)
    except ValueError as e:
        raise ValueError(f"not a complex number: {text!r}") from e


def dump_json(obj: Any, indent: bool = True) -> bytes:
    """
    Serialize with orjson; numpy scalars and arrays are native, anything else unknown
    (Fraction, Poly, ...) is written through ``str``

    :param obj: payload
    :param indent: pretty print with two spaces
    :return:
    """
    option = orjson.OPT_SERIALIZE_NUMPY | orjson.OPT_NON_STR_KEYS
    if indent:
        option |= orjson.OPT_INDENT_2
    return orjson.dumps(obj, default=str, option=option)


def to_jsonable(obj: Any) -> Any:
    return orjson.loads(dump_json(obj, indent=False))
