#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from .character import (
    Character,
    chi,
    chi_twisted,
)
from .integrate import (
    UnitIntervalSample,
    integrate_unit,
    unit_samples,
)
