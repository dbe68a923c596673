#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import logging
import sys

from sqlalchemy import select

import ffque.cache
import ffque.db
import ffque.db.orm as orm
from ffque.arith import Poly
from ffque.config import CONFIG as C
from ffque.config import validate_config
from ffque.eisenstein import coeff_closed
from ffque.util.misc import timeit

log = logging.getLogger(__name__)

MIN_PYTHON = (3, 10)
if sys.version_info < MIN_PYTHON:
    sys.exit("Python {}.{} or later is required!".format(*MIN_PYTHON))


@timeit
def main() -> int:
    """
    Simple testing script to ensure the environment is working.

    :return:
    """
    logging.basicConfig(level=C["LOG_LEVEL"], format=C["LOG_FORMAT"], datefmt=C["LOG_DATE_FORMAT"])

    # check configuration
    cfg = validate_config(C)

    # check arithmetic (constant term at A = T, s = 2)
    value = coeff_closed(0, Poly.zero(cfg["FFQ_Q"]), 2, Poly.T(cfg["FFQ_Q"]))
    log.info(f"c(0, 0, 2) at A = T: {value}")

    # check database
    db = ffque.db.ResultDB(verbose=cfg["DB_DEBUG"])
    db.create_schema()

    # load any table to ensure the models were created
    with db.session() as session:
        session.execute(
            select(orm.SweepRun)
            .limit(1)
        ).scalar()

    # check cache
    cache = ffque.cache.build_cache(cfg)
    cache.ping()

    return 0


if __name__ == "__main__":
    sys.exit(main())
