#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import logging
import sys
from pathlib import Path

import pidfile

import ffque.db
from ffque.config import CONFIG as C
from ffque.que import (
    TestWeight,
    que_sweep,
    write_csv,
    write_summary,
)
from ffque.util.misc import timeit

log = logging.getLogger("main")

MIN_PYTHON = (3, 10)
if sys.version_info < MIN_PYTHON:
    sys.exit("Python {}.{} or later is required!".format(*MIN_PYTHON))


@timeit
def main() -> int:
    """
    Level sweep with the settings of ``ffque/config.py`` (or their env variables), stored in the result database.
    """
    logging.basicConfig(
        level=C["LOG_LEVEL"],
        format=C["LOG_FORMAT"],
        datefmt=C["LOG_DATE_FORMAT"],
        handlers=[
            # logging.FileHandler(filename="sweep.log", mode="w"),
            logging.StreamHandler(),
        ]
    )

    db = ffque.db.ResultDB(verbose=C["DB_DEBUG"])
    db.create_schema()

    run = que_sweep(
        q=C["FFQ_Q"],
        t=C["FFQ_T"],
        degrees=range(C["QUE_DEG_MIN"], C["QUE_DEG_MAX"] + 1),
        weight=TestWeight.parse(C["QUE_PSI"]),
        kappa=C["QUE_KAPPA"],
        model=C["QUE_MODEL"],
        num_workers=C["FFQ_NUM_WORKERS"],
    )

    outdir = Path(C["OUTPUT_DIR"])
    outdir.mkdir(parents=True, exist_ok=True)
    write_csv(run, outdir / f"que_q{run.q}_t{run.t:g}.csv")
    write_summary(run, outdir / f"que_q{run.q}_t{run.t:g}.json")
    db.store_sweep(run)

    return 0


if __name__ == "__main__":
    try:
        with pidfile.PIDFile("ffque.sweep.pid"):
            sys.exit(main())
    except pidfile.AlreadyRunningError:
        print("Already running. Exiting.")
        sys.exit(1)
