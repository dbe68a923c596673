#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Optional,
)

import pickle
import redis

from .base import (
    Cache,
    TKey,
    TValue,
)


class Cache_Redis(Cache):
    """
    Redis-backed cache shared between worker processes

    Note: values are pickled (protocol 5); every key is stored under the ``prefix`` namespace
    """

    def __init__(self, host: str, port: int, password: Optional[str], db: int, prefix: str = "ffque:") -> None:
        self._prefix = prefix
        self._redis = redis.Redis(
            host=host,
            port=int(port),
            password=password,
            db=int(db),
        )

    def _key(self, name: TKey) -> TKey:
        if isinstance(name, bytes):
            return self._prefix.encode("utf-8") + name
        return self._prefix + name

    def set(self, name: TKey, value: TValue, ttl: Optional[int] = None) -> Any:
        self._redis.set(self._key(name), pickle.dumps(value, protocol=5), ex=ttl)

    def get(self, name: TKey, default: Any = None) -> Any:
        raw = self._redis.get(self._key(name))
        if raw is None:
            return default
        return pickle.loads(raw)

    def remove(self, name: TKey) -> Any:
        self._redis.delete(self._key(name))

    def ping(self) -> Any:
        return self._redis.ping()

    def flush(self) -> Any:
        keys = list(self._redis.scan_iter(match=f"{self._prefix}*"))
        if keys:
            self._redis.delete(*keys)
