#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Dict,
    Optional,
)

from .base import (
    Cache,
    TKey,
    TValue,
)


class Cache_Memory(Cache):
    """
    Process-local dictionary cache with hit/miss counters
    """

    def __init__(self) -> None:
        self._cache = {}
        self._hits = 0
        self._misses = 0

    def set(self, name: TKey, value: TValue, ttl: Optional[int] = None) -> Any:
        self._cache[name] = value

    def get(self, name: TKey, default: Any = None) -> Any:
        try:
            value = self._cache[name]
        except KeyError:
            self._misses += 1
            return default
        self._hits += 1
        return value

    def remove(self, name: TKey) -> Any:
        self._cache.pop(name, None)

    def ping(self) -> Any:
        return True

    def flush(self) -> Any:
        self._cache = {}

    @property
    def stats(self) -> Dict[str, int]:
        return {"size": len(self._cache), "hits": self._hits, "misses": self._misses}
