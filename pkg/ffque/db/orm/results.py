#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from sqlalchemy import (
    JSON,
    Boolean,
    Column,
    Float,
    ForeignKey,
    Integer,
    String,
)
from sqlalchemy.orm import relationship

from .base import (
    Base,
    BaseModelAdded,
)

__all__ = ["SweepRun", "SweepLevel", "SuiteRecord"]


class SweepRun(BaseModelAdded, Base):
    __tablename__ = "sweep_run"

    q = Column(Integer, nullable=False)
    t = Column(Float, nullable=False)
    psi = Column(String(256), nullable=False)
    kappa = Column(Float, nullable=False)
    model = Column(String(16), nullable=False)
    fitted_slope = Column(Float)
    intercept = Column(Float)
    target_slope = Column(Float, nullable=False)
    residue_slope = Column(Float, nullable=False)
    max_residual = Column(Float)

    levels = relationship("SweepLevel", back_populates="run", cascade="all, delete-orphan",
                          order_by="SweepLevel.deg_A")

    def __repr__(self) -> str:
        return f"SweepRun(id={self.id}, q={self.q}, t={self.t}, model={self.model}, levels={len(self.levels)})"


class SweepLevel(BaseModelAdded, Base):
    __tablename__ = "sweep_level"

    run_id = Column(Integer, ForeignKey(SweepRun.id, ondelete="CASCADE"), nullable=False, index=True)
    A = Column(String(256), nullable=False)
    deg_A = Column(Integer, nullable=False)
    abs_A = Column(Integer, nullable=False)
    m = Column(Integer, nullable=False)
    H0 = Column(Float, nullable=False)
    I1 = Column(Float, nullable=False)
    I2 = Column(Float, nullable=False)
    predicted_leading = Column(Float, nullable=False)
    scaled_I = Column(Float, nullable=False)
    scaled_I2 = Column(Float, nullable=False)
    residual = Column(Float)

    run = relationship("SweepRun", back_populates="levels")

    def __repr__(self) -> str:
        return f"SweepLevel(run={self.run_id}, A={self.A}, I={self.I1 + self.I2:.9g})"


class SuiteRecord(BaseModelAdded, Base):
    __tablename__ = "suite_record"

    suite = Column(String(64), nullable=False, index=True)
    passed = Column(Boolean, nullable=False)
    failures = Column(Integer, nullable=False)
    seconds = Column(Float, nullable=False)
    data = Column(JSON, nullable=False)

    def __repr__(self) -> str:
        return f"SuiteRecord(id={self.id}, suite={self.suite}, passed={self.passed})"
