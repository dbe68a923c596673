#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from .weight import (
    TestWeight,
    mellin,
    mellin_inverse,
)
from .integral import (
    COEFFICIENT_MODELS,
    I1_excess_bound,
    IValues,
    compute_I,
    cusp_term,
    resolve_kappa,
)
from .predict import (
    Prediction,
    g0_bracket,
    g0_closed,
    predict,
    predicted_leading,
    residue_slope,
    target_slope,
)
from .level import (
    CSV_COLUMNS,
    LevelRecord,
    compute_level,
    select_levels,
)
# suite before sweep: the worker pool imports the suite module while the sweep is loading
from .suite import (
    SUITES,
    CheckResult,
    SuiteResult,
    run_suite,
    run_verification_suite,
)
from .sweep import (
    OSCILLATION_MIN_LEVELS,
    SLOPE_TOL,
    QueRun,
    que_sweep,
    write_csv,
    write_summary,
)
