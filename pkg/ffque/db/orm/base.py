#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import datetime

from sqlalchemy import (
    Column,
    DateTime,
    Integer,
    MetaData,
)
from sqlalchemy.orm import declarative_base

from ffque.config import CONFIG as C

__all__ = ["Base", "BaseModel", "BaseModelAdded"]

Base = declarative_base(
    metadata=MetaData(
        schema=C["DB_SCHEMA"],
    ),
)


def _utcnow() -> datetime.datetime:
    return datetime.datetime.now(datetime.timezone.utc)


class BaseModel(object):
    id = Column(Integer, primary_key=True, unique=True, autoincrement=True)


class BaseModelAdded(BaseModel):
    date_added = Column(DateTime(timezone=True), default=_utcnow)
