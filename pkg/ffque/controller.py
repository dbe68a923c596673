#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Callable,
    Dict,
    List,
    Optional,
)

import enum
import logging
import multiprocessing as mp
import operator
import queue
import signal
import threading

import ffque.worker.compute
from ffque.cache import (
    Cache,
    build_cache,
)
from ffque.config import CONFIG as C
from ffque.exceptions import FFQueError
from ffque.worker.job import (
    Job,
    JobResult,
    JobType,
)

log = logging.getLogger(__name__)


class SignalContext(object):

    def __init__(self, signals: List[signal.Signals], handler: Callable):
        self._signals = set(signals)
        self._handler = handler
        self._cache = {}

    def __enter__(self):
        # register signal handlers
        for sig in self._signals:
            self._cache[sig] = signal.signal(sig, self._handler)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        # restore previous signal handlers
        for k, v in self._cache.items():
            signal.signal(k, v)
        self._cache = {}


class ControllerState(enum.Enum):
    UNKNOWN = 0
    INIT = enum.auto()
    RUNNING = enum.auto()
    TERMINATING = enum.auto()


class Controller(object):
    """
    Runs sweep levels and verification suites, either inline or on a pool of worker processes.

    Has several concurrent elements (with ``num_workers`` > 0):
    a) Main process:
       - MainThread: runs the controller, submits jobs to the shared job queue
       - ResultHandler thread: gets job results from the shared queue and releases them in job id order
    b) Worker processes, each:
       - gets jobs from the shared job queue
       - adds results to the shared result queue

    With ``num_workers`` = 0 every job is executed during ``submit`` in the calling thread.
    """

    MAX_RESULT_STORAGE_SIZE = 1000

    def __init__(self, num_workers: Optional[int] = None, cache: Optional[Cache] = None,
                 cfg: Optional[Dict[str, Any]] = None) -> None:
        """
        :param num_workers: number of worker processes (default ``FFQ_NUM_WORKERS``, 0 runs inline)
        :param cache: memo used by inline jobs (workers build their own from ``cfg``)
        :param cfg: settings handed to the workers (default: the current ``CONFIG``)
        """
        self._num_workers = C["FFQ_NUM_WORKERS"] if num_workers is None else num_workers
        assert self._num_workers >= 0
        self._cfg = dict(C) if cfg is None else dict(cfg)
        self._cache = cache if cache is not None else build_cache(self._cfg)

        self._queue_jobs = mp.JoinableQueue(maxsize=100)
        self._queue_results = mp.JoinableQueue(maxsize=100)

        self._job_counter = 0
        self._result_counter = 0
        self._results: List[JobResult] = []

        self._state = ControllerState.INIT
        self._terminating = mp.Event()
        self._terminating_local = threading.Event()

        self._result_handler = threading.Thread(
            name="ResultHandler",
            target=self._handle_results,
            args=(),
            daemon=False,
        )

        self._workers = []
        for i in range(self._num_workers):
            w = ffque.worker.compute.WorkerCompute(
                name=f"Worker-C{i:02}",
                daemon=False,
                queue_jobs=self._queue_jobs,
                queue_results=self._queue_results,
                terminating=self._terminating,
                cfg=self._cfg,
            )
            self._workers.append(w)

    @property
    def inline(self) -> bool:
        return self._num_workers == 0

    @property
    def state(self) -> ControllerState:
        return self._state

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.stop()

    def start(self) -> None:
        """
        Start the controller

        :return:
        """
        log.info(f"Starting Controller ({self._num_workers} workers)")

        if not self.inline:
            self._result_handler.start()
            for w in self._workers:
                w.start()
            for w in self._workers:
                w.started.wait(timeout=30)
                assert w.started.is_set()
        self._state = ControllerState.RUNNING

    def stop(self) -> None:
        """
        Terminate the controller

        :return:
        """
        log.info("Terminating Controller")

        if not self.inline and self._state == ControllerState.RUNNING:
            self._terminating.set()
            self._result_handler.join()
            for w in self._workers:
                w.join()

        if self._job_counter != self._result_counter:
            log.warning(f"Number of jobs does not match results ({self._job_counter} != {self._result_counter})!")

        self._state = ControllerState.TERMINATING

    @staticmethod
    def _find_non_consecutive(a: list, key: callable = None) -> int:
        """
        Find the index of the first non-consecutive element in a list

        Note: list has to contain only unique elements

        :param a: target list
        :param key: function to extract comparison key
        :return:
        """
        if len(a) == 0:
            return 0
        elif len(a) == 1:
            return 1
        else:  # len(a) > 1
            for i, j in enumerate(a):
                if key(a[0]) + i != key(j):
                    return i
            # all elements consecutive
            return len(a)

    def _handle_signal(self, signum, frame) -> None:
        log.critical(f"Received {signal.Signals(signum).name} ({signum}) '{signal.strsignal(signum)}'. Terminating!")
        self._terminating_local.set()
        self._terminating.set()

    def _release(self, job_result: JobResult) -> None:
        self._results.append(job_result)
        self._result_counter += 1
        log.info(f"Released {job_result} ({self._result_counter}/{self._job_counter})")

    def _handle_results(self) -> None:
        """
        Continuously get job results from ``queue_results`` and release them in job id order.

        Algorithm:
        - keep a local, sorted list 'storage' of job results that arrived out of order
        - first look in 'storage': if it starts with the next id, release every consecutive element
        - next look in the queue: release the result if it has the next id, else park it in 'storage'

        Note: This will run in a separate thread in the main process
        """
        log.info("Starting result handler thread")

        # temporary list of out of order job results
        storage = []

        try:
            while not self._terminating.is_set() or self._result_counter < self._job_counter:
                if self._terminating_local.is_set():
                    break
                assert len(storage) < Controller.MAX_RESULT_STORAGE_SIZE

                storage_id = storage[0].id if len(storage) > 0 else None

                # a) process elements in the 'storage' first
                if self._result_counter == storage_id:
                    pos = Controller._find_non_consecutive(storage, key=operator.attrgetter("id"))
                    for job_result in list(storage[:pos]):
                        self._release(job_result)
                        self._queue_results.task_done()
                    del storage[:pos]

                # b) process elements in the queue
                try:
                    job_result = self._queue_results.get(timeout=1.0)
                except queue.Empty:
                    continue

                if self._result_counter == job_result.id:
                    self._release(job_result)
                    self._queue_results.task_done()
                else:
                    assert job_result.id > self._result_counter
                    storage.append(job_result)
                    storage.sort(key=operator.attrgetter("id"))

        except Exception:
            log.critical("Encountered unexpected error in result handler thread. Terminating!", stack_info=True, exc_info=True)
            self._terminating.set()
            raise

        log.info("Terminating Result Handler")

    def submit(self, type_: JobType, payload: Dict[str, Any]) -> int:
        """
        Queue a job (or run it right away when inline)

        :param type_: job type
        :param payload: job arguments
        :return: job id
        """
        assert self._state == ControllerState.RUNNING
        job = Job(id=self._job_counter, type=type_, payload=payload)
        self._job_counter += 1

        if self.inline:
            self._release(ffque.worker.compute.execute_job(job, self._cache))
        else:
            self._queue_jobs.put(job)
        return job.id

    def wait(self) -> List[JobResult]:
        """
        Block until every submitted job has a released result

        :return: all results so far, in job id order
        """
        if not self.inline:
            with SignalContext([signal.SIGINT, signal.SIGTERM], self._handle_signal):
                while self._result_counter < self._job_counter:
                    if self._terminating.is_set():
                        raise FFQueError(f"controller terminated with {self._job_counter - self._result_counter} "
                                         f"jobs outstanding")
                    self._terminating_local.wait(timeout=0.2)
        return list(self._results)

    def run(self, jobs: List[Dict[str, Any]], type_: JobType) -> List[Any]:
        """
        Submit jobs of one type, wait for them and return their data in submission order

        :param jobs: payloads
        :param type_: job type
        :return:
        """
        first = self._job_counter
        for payload in jobs:
            self.submit(type_, payload)
        results = self.wait()[first:]

        failed = [r for r in results if r.error is not None]
        if failed:
            raise FFQueError("; ".join(f"job {r.id}: {r.error}" for r in failed))
        return [r.data for r in results]
