#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from .cyclotomic import CycInt
from .multiplicative import (
    ONE_MINUS_2S,
    ONE_MINUS_S,
    Exponent,
    evaluate_formal,
    mobius,
    sigma,
    sigma_formal,
    sigma_symbolic,
    totient,
    totient_brute,
)
from .ramanujan import (
    DiscrepancyRow,
    admissible_fractions,
    check_level,
    mismatches,
    ramanujan_brute,
    ramanujan_closed,
    ramanujan_discrepancies,
    write_discrepancies,
)
