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
from ffque.config import (
    load_config,
    validate_config,
)
from ffque.exceptions import ConfigError
from ffque.que import run_verification_suite
from ffque.util.misc import (
    dump_json,
    timeit,
)

log = logging.getLogger("main")

MIN_PYTHON = (3, 10)
if sys.version_info < MIN_PYTHON:
    sys.exit("Python {}.{} or later is required!".format(*MIN_PYTHON))


@timeit
def main() -> int:
    """
    Full verification battery. An optional first argument names a flat ``key = value`` config file.

    :return: 0 iff every hard check passed, 2 on configuration errors
    """
    logging.basicConfig(level=C["LOG_LEVEL"], format=C["LOG_FORMAT"], datefmt=C["LOG_DATE_FORMAT"])

    try:
        cfg = load_config(sys.argv[1]) if len(sys.argv) > 1 else validate_config(C)
    except ConfigError as e:
        log.error(f"Invalid configuration: {e}")
        return 2

    status, summary = run_verification_suite(cfg)

    outdir = Path(cfg["OUTPUT_DIR"])
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "suite_summary.json").write_bytes(dump_json(summary))

    db = ffque.db.ResultDB(verbose=cfg["DB_DEBUG"])
    db.create_schema()
    db.store_suites(summary)

    if status != 0:
        log.error(f"Hard checks failed in {summary['failed_suites']}")
    return status


if __name__ == "__main__":
    try:
        with pidfile.PIDFile("ffque.suite.pid"):
            sys.exit(main())
    except pidfile.AlreadyRunningError:
        print("Already running. Exiting.")
        sys.exit(1)
