#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import Optional


class FFQueError(Exception):
    """
    Base class of all errors raised on purpose by the library
    """


class DomainError(FFQueError, ValueError):
    """
    Input outside the mathematical domain of an operation (zero divisor, non-monic argument,
    pole of a closed formula, singular spectral parameter, ...)
    """


class PrecisionError(FFQueError, ArithmeticError):
    """
    A truncated Laurent series does not carry enough terms for the requested coefficient
    """


class ResourceError(FFQueError, RuntimeError):
    """
    An enumeration or summation would exceed its configured bound

    Note: never silently truncated
    """


class ConfigError(FFQueError, ValueError):

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None) -> None:
        """
        Invalid configuration value or malformed config file

        :param message: human readable description
        :param line: line number in the config file (1-based), if known
        :param field: offending key, if known
        """
        self.line = line
        self.field = field

        prefix = []
        if line is not None:
            prefix.append(f"line {line}")
        if field is not None:
            prefix.append(f"field '{field}'")

        super().__init__(f"{', '.join(prefix)}: {message}" if prefix else message)
