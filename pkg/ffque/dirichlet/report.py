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
from dataclasses import (
    asdict,
    dataclass,
    field,
)
from fractions import Fraction

import orjson

from .series import USeries

log = logging.getLogger(__name__)

# verdicts that count as a failure of a hard check
FAILING = ("mismatch", "none")


@dataclass
class IdentityReport(object):
    """
    Outcome of one identity check

    Attributes:
        identity: short name of the identity
        parameters: inputs (already rendered as text or numbers)
        lhs: per-coefficient left hand side (text), or sampled values
        rhs: per-coefficient right hand side, same layout as ``lhs``
        verdict: "match", "mismatch", or the name of the matching candidate ("none" if no candidate matches)
        first_mismatch: first differing coefficient index, if any
        extra: identity specific details (candidates, tail bounds, cross-checks)
    """
    identity: str
    parameters: Dict[str, Any]
    lhs: List[Any]
    rhs: List[Any]
    verdict: str
    first_mismatch: Optional[int] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict not in FAILING

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> bytes:
        return orjson.dumps(self.to_dict(), default=_default, option=orjson.OPT_SORT_KEYS)

    @classmethod
    def compare(cls, identity: str, parameters: Dict[str, Any], lhs: USeries, rhs: USeries, var: str = "v") -> "IdentityReport":
        """
        Exact coefficientwise comparison of two series

        :param identity: name
        :param parameters: inputs
        :param lhs: left hand side
        :param rhs: right hand side
        :param var: name of the formal unit in the text output
        :return:
        """
        k = lhs.first_mismatch(rhs)
        report = cls(
            identity=identity,
            parameters=parameters,
            lhs=lhs.to_text(var),
            rhs=rhs.to_text(var),
            verdict="match" if k is None else "mismatch",
            first_mismatch=k,
        )
        log.debug(f"{identity} {parameters}: {report.verdict}")
        return report


def _default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    raise TypeError(f"cannot serialize {type(obj).__name__}")
