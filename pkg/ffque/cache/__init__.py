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

import logging

from ffque.config import CONFIG as C
from ffque.exceptions import ConfigError
from .base import (
    Cache,
    Cache_Dummy,
    make_key,
)
from .memory import Cache_Memory
from .redis import Cache_Redis

log = logging.getLogger(__name__)


def build_cache(cfg: Optional[Dict[str, Any]] = None) -> Cache:
    """
    Cache backend selected by ``CACHE_BACKEND`` ("memory", "redis" or "none")

    :param cfg: configuration (default: ``CONFIG``)
    :return:
    """
    cfg = C if cfg is None else cfg
    backend = str(cfg["CACHE_BACKEND"]).lower()
    log.debug(f"Using '{backend}' cache backend")
    if backend == "memory":
        return Cache_Memory()
    if backend == "redis":
        return Cache_Redis(
            host=cfg["REDIS_HOST"],
            port=cfg["REDIS_PORT"],
            password=cfg["REDIS_PASSWORD"],
            db=cfg["REDIS_DATABASE"],
        )
    if backend == "none":
        return Cache_Dummy()
    raise ConfigError(f"unknown cache backend {backend!r}", field="CACHE_BACKEND")
