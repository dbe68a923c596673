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

import enum
from dataclasses import (
    dataclass,
    field,
)


class JobType(enum.Enum):
    Level = 0
    Suite = enum.auto()


@dataclass
class Job(object):
    """
    Unit of work for a compute worker

    Payloads:
        Level: {"level": Poly, "t": float, "weight": TestWeight, "kappa": float, "model": str}
        Suite: {"name": str, "cfg": dict}

    Note: The unique job id is used to release results in submission order.

    Attributes:
        id: unique, consecutive identifier
        type: job type
        payload: picklable job arguments
    """
    id: int
    type: JobType
    payload: Dict[str, Any] = field(default_factory=dict)

    def __repr__(self) -> str:
        return f"Job(id={self.id} type={self.type.name})"


@dataclass
class JobResult(object):
    """
    Outcome of a job; ``error`` is set instead of ``data`` when the job raised

    Note: The result id always matches the id of the corresponding job.

    Attributes:
        id: unique, consecutive identifier
        type: job type
        data: LevelRecord (Level) or SuiteResult (Suite)
        error: message of the exception raised by the job
    """
    id: int
    type: JobType
    data: Any = None
    error: Optional[str] = None

    def __repr__(self) -> str:
        return f"JobResult(id={self.id} type={self.type.name}{' failed' if self.error else ''})"
