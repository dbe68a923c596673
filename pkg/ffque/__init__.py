#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

__version__ = "0.1.0"
