#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from .vpoly import VPoly
from .series import (
    USeries,
    geometric,
)
from .report import IdentityReport
from .identities import (
    inner_count_brute,
    totient_series,
    verify_constant_series,
    verify_level_series,
    verify_ramanujan_series,
    zeta_series,
    zeta_series_enumerated,
)
from .ramanujan_identity import (
    divisor_square_enumerated,
    divisor_square_series,
    ramanujan_identity_closed,
    ramanujan_identity_tail,
    verify_ramanujan_identity,
)
from .newform import (
    ExtensionRule,
    FormMode,
    SyntheticMultiplicative,
    l_series,
    newform_series,
    verify_newform_series,
)
from .whittaker import (
    NSums,
    geometric_n_sums,
    whittaker,
)
