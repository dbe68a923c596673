#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Callable,
    Optional,
    Union,
)

import abc
import logging

log = logging.getLogger(__name__)

TKey = Union[bytes, str]
TValue = Union[bytes, bool, str, int, float, complex, list, tuple, set, dict]


def make_key(namespace: str, *parts: Any) -> str:
    """
    Cache key from a namespace and the text forms of its parts (``to_text()`` where available)

    :param namespace: kind of value, e.g. "eis"
    :param parts: polynomials, vertices, numbers
    :return:
    """
    texts = [p.to_text() if hasattr(p, "to_text") else repr(p) for p in parts]
    return "|".join([namespace, *texts])


class Cache(abc.ABC):
    """
    Memo store for expensive intermediate values (Eisenstein sums, coefficient tables)

    Keys are text; values are any picklable object.
    """

    def __contains__(self, key: TKey) -> bool:
        return self.get(key) is not None

    def get_or_compute(self, name: TKey, compute: Callable[[], TValue], ttl: Optional[int] = None) -> TValue:
        """
        Return the value at key ``name``, computing and storing it on a miss

        :param name: key
        :param compute: producer of the value
        :param ttl: expiry in seconds (backends without expiry ignore it)
        :return:
        """
        value = self.get(name)
        if value is None:
            value = compute()
            self.set(name, value, ttl=ttl)
        return value

    @abc.abstractmethod
    def set(self, name: TKey, value: TValue, ttl: Optional[int] = None) -> Any:
        """
        Set the value at key ``name`` to ``value``

        :param name:
        :param value:
        :param ttl: sets an expire flag on key ``name`` for ``ttl`` seconds
        :return:
        """
        raise NotImplementedError

    @abc.abstractmethod
    def get(self, name: TKey, default: Any = None) -> Any:
        """
        Return the value at key ``name``, or ``default = None`` if the key doesn't exist

        :param name: key
        :param default: default value
        :return:
        """
        raise NotImplementedError

    @abc.abstractmethod
    def remove(self, name: TKey) -> Any:
        raise NotImplementedError

    @abc.abstractmethod
    def ping(self) -> Any:
        raise NotImplementedError

    @abc.abstractmethod
    def flush(self) -> Any:
        """
        Delete every key of this cache

        :return:
        """
        raise NotImplementedError


class Cache_Dummy(Cache):
    """
    Cache that stores nothing, every lookup is a miss
    """

    def __init__(self, *args, **kwargs) -> None:
        pass

    def set(self, name: TKey, value: TValue, ttl: Optional[int] = None) -> Any:
        return True

    def get(self, name: TKey, default: Any = None) -> Any:
        return default

    def remove(self, name: TKey) -> Any:
        return True

    def ping(self) -> Any:
        return True

    def flush(self) -> Any:
        return True
