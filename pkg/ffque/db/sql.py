#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Dict,
    List,
    Optional,
)

import logging

from sqlalchemy import (
    create_engine,
    select,
)
from sqlalchemy.orm import sessionmaker
from sqlalchemy.pool import StaticPool

import ffque.que
from ffque.util import (
    batched,
    to_jsonable,
)
from . import orm
from .misc import url_from_config

log = logging.getLogger(__name__)


class ResultDB(object):

    def __init__(self, conn: Optional[str] = None, verbose: bool = False) -> None:
        """
        Manages sqlalchemy engine and session factory for sweep and suite results.

        Note: This should only be instantiated once per process.

        :param conn: connection string (default: built from the ``DB_*`` settings)
        :param verbose: enable sqlalchemy verbosity
        """
        conn = url_from_config() if conn is None else conn
        assert isinstance(conn, str)
        assert isinstance(verbose, bool)

        kwargs = {}
        if conn in ("sqlite://", "sqlite:///:memory:"):
            # one shared connection, otherwise every session sees an empty database
            kwargs = {"connect_args": {"check_same_thread": False}, "poolclass": StaticPool}
        self._engine = create_engine(conn, echo=False, **kwargs)

        if verbose:
            logging.getLogger("sqlalchemy.engine").setLevel(logging.DEBUG)

        self._session = sessionmaker(
            bind=self._engine,
            autoflush=True,
            expire_on_commit=False,
        )

    @property
    def engine(self):
        return self._engine

    @property
    def session(self):
        """
        Factory session object

        The returned object should be used in a context.

        Usage:

        # auto commits the transaction, closes the session
        with ResultDB.session.begin() as session:
            session.add(some_object)

        """
        return self._session

    @property
    def orm(self):
        """
        Convenience reference to the orm module
        """
        return orm

    def create_schema(self) -> None:
        orm.Base.metadata.create_all(self._engine)
        log.info(f"Created tables {sorted(orm.Base.metadata.tables)}")

    def store_sweep(self, run: "ffque.que.QueRun", batch_size: int = 50) -> int:
        """
        Persist a fitted sweep with one row per level

        :param run: sweep
        :param batch_size: level rows per flush
        :return: id of the new ``SweepRun``
        """
        with self._session.begin() as session:
            obj = orm.SweepRun(
                q=run.q,
                t=run.t,
                psi=run.weight.to_text(),
                kappa=run.kappa,
                model=run.model,
                fitted_slope=run.fitted_slope,
                intercept=run.intercept,
                target_slope=run.target_slope,
                residue_slope=run.residue_slope,
                max_residual=run.max_residual,
            )
            session.add(obj)
            session.flush()

            for chunk in batched(run.records, size=batch_size):
                session.add_all([
                    orm.SweepLevel(
                        run_id=obj.id,
                        A=r.level.to_text(),
                        deg_A=r.deg_A,
                        abs_A=r.abs_A,
                        m=r.m,
                        H0=r.H0,
                        I1=r.I1,
                        I2=r.I2,
                        predicted_leading=r.predicted_leading,
                        scaled_I=r.scaled_I,
                        scaled_I2=r.scaled_I2,
                        residual=r.residual,
                    ) for r in chunk
                ])
                session.flush()
            run_id = obj.id

        log.info(f"Stored sweep {run_id} ({len(run.records)} levels)")
        return run_id

    def store_suites(self, summary: Dict[str, Any]) -> List[int]:
        """
        Persist the per-suite entries of a verification summary

        :param summary: output of ``run_verification_suite``
        :return: ids of the new ``SuiteRecord`` rows
        """
        with self._session.begin() as session:
            objs = [
                orm.SuiteRecord(
                    suite=s["name"],
                    passed=s["passed"],
                    failures=len(s["failures"]),
                    seconds=s["seconds"],
                    data=to_jsonable(s),
                ) for s in summary["suites"]
            ]
            session.add_all(objs)
            session.flush()
            ids = [o.id for o in objs]

        log.info(f"Stored {len(ids)} suite records")
        return ids

    def sweep_levels(self, run_id: int) -> List[Dict[str, Any]]:
        """
        Level rows of one stored sweep, in degree order
        """
        with self._session() as session:
            rows = session.execute(
                select(orm.SweepLevel).where(orm.SweepLevel.run_id == run_id).order_by(orm.SweepLevel.deg_A)
            ).scalars().all()
            return [{"A": r.A, "deg_A": r.deg_A, "I1": r.I1, "I2": r.I2, "scaled_I": r.scaled_I,
                     "scaled_I2": r.scaled_I2, "residual": r.residual} for r in rows]
