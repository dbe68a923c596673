#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from .job import (
    Job,
    JobResult,
    JobType,
)
from .compute import (
    WorkerCompute,
    execute_job,
)
