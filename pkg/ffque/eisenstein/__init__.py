#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from .index import (
    index_gamma0,
    index_gamma0_enumerated,
    order_pgl2_residue,
)
from .coset import (
    CosetRep,
    cosets_from_matrices,
    enumerate_cosets,
)
from .direct import (
    EisensteinEvaluator,
    EisensteinValue,
    GroupPoint,
    eval_cosets,
    eval_direct,
)
from .coeff import (
    EisCoeffTable,
    coeff_closed,
    coeff_unfolded,
    coefficient_table,
    vanishes,
)
from .fourier import (
    MATCH_TOL,
    CoefficientRecord,
    EigenReport,
    InvarianceRecord,
    KappaCalibration,
    ParsevalReport,
    adjacency_eigen_check,
    calibrate_kappa,
    coefficient_report,
    fourier_extract,
    invariance_check,
    parseval_check,
    unit_twist_ratios,
)
