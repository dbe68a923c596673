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
import multiprocessing as mp
import os
import queue
import signal
import threading

import ffque.que.level
import ffque.que.suite
from ffque.cache import (
    Cache,
    build_cache,
)
from ffque.config import CONFIG as C
from ffque.exceptions import FFQueError
from .job import (
    Job,
    JobResult,
    JobType,
)

log = logging.getLogger(__name__)


def execute_job(job: Job, cache: Optional[Cache] = None) -> JobResult:
    """
    Run one job in the current process

    Note: domain, precision and resource errors become a failed result; anything else propagates

    :param job: job
    :param cache: memo handed to the suites
    :return:
    """
    try:
        if job.type == JobType.Level:
            p = job.payload
            data = ffque.que.level.compute_level(p["level"], p["t"], p["weight"], p["kappa"], p.get("model"))
        elif job.type == JobType.Suite:
            data = ffque.que.suite.run_suite(job.payload["name"], job.payload["cfg"], cache)
        else:
            raise TypeError(job.type)
    except FFQueError as e:
        log.error(f"{job} failed: {e}")
        return JobResult(id=job.id, type=job.type, error=f"{type(e).__name__}: {e}")
    return JobResult(id=job.id, type=job.type, data=data)


class WorkerCompute(mp.Process):

    def __init__(
        self,
        queue_jobs: mp.JoinableQueue,
        queue_results: mp.JoinableQueue,
        terminating: mp.Event,
        cfg: Optional[Dict[str, Any]] = None,
        *args,
        **kwargs
    ) -> None:
        """
        Compute worker process (sweep levels and verification suites)

        The settings of the parent are shipped along, so resource bounds and cache backend chosen
        at run time (config file, CLI options) also hold inside the worker.

        :param queue_jobs: in queue
        :param queue_results: out queue
        :param terminating: event to trigger shutdown
        :param cfg: settings snapshot (default: the current ``CONFIG``)
        """
        super().__init__(*args, **kwargs)

        self.queue_jobs = queue_jobs
        self.queue_results = queue_results
        self.terminating = terminating
        self.terminating_local = None
        self.started = mp.Event()

        self.cfg = dict(C) if cfg is None else dict(cfg)
        self.cache = None

    @property
    def stopping(self) -> bool:
        return self.terminating.is_set() or self.terminating_local.is_set()

    def _init_process(self) -> None:
        # rename process MainThread
        threading.current_thread().name = mp.current_process().name
        self.terminating_local = threading.Event()

        def _signal_handler(signum, frame):
            log.critical(f"Received {signal.Signals(signum).name} ({signum}). Terminating!")
            self.terminating_local.set()

        signal.signal(signal.SIGHUP, _signal_handler)
        signal.signal(signal.SIGINT, signal.SIG_IGN)
        signal.signal(signal.SIGTERM, _signal_handler)

        # spawned processes start from the module defaults
        C.update(self.cfg)
        if not logging.getLogger().handlers:
            logging.basicConfig(level=C["LOG_LEVEL"], format=C["LOG_FORMAT"], datefmt=C["LOG_DATE_FORMAT"])

        try:
            self.cache = build_cache(self.cfg)
        except Exception:
            self.terminating.set()
            raise

        self.started.set()

    def run(self) -> None:
        """
        Note: Only code inside run() executes in the new process!
        """
        self._init_process()
        log.info(f"Starting worker process ({os.getpid()}, cache {type(self.cache).__name__})")

        done = 0
        try:
            while not self.stopping:
                try:
                    job = self.queue_jobs.get(timeout=1.0)
                except queue.Empty:
                    continue

                log.info(f"Processing {job}")
                self.queue_results.put(execute_job(job, self.cache))
                self.queue_jobs.task_done()
                done += 1

        except Exception:
            log.critical("Encountered unexpected error in worker. Terminating!", stack_info=True, exc_info=True)
            self.terminating.set()
            raise

        log.info(f"Terminating worker process ({os.getpid()}) after {done} jobs")
