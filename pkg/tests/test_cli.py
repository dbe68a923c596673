#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

import orjson
import pytest

from click.testing import CliRunner
from pathlib import Path

from ffque.cli import main


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner(mix_stderr=False)


def _json(output: str) -> dict:
    return orjson.loads(output)


def test_eisenstein_coeff(runner: CliRunner) -> None:
    result = runner.invoke(main, ["eisenstein", "coeff", "--A", "T", "--s", "2+0i", "--n", "0"])
    assert result.exit_code == 0, result.output
    data = _json(result.output)
    assert abs(data["value_re"] - 629 / 624) < 1e-12
    assert data["value_im"] == 0
    assert data["truncation_bound"] == 0

    result = runner.invoke(main, ["eisenstein", "coeff", "--A", "T", "--s", "2", "--n", "0", "--source", "unfolded"])
    assert abs(_json(result.output)["value_re"] - (1 + 1 / 30)) < 1e-12

    # pole of the closed formula
    result = runner.invoke(main, ["eisenstein", "coeff", "--A", "T", "--s", "0", "--n", "0"])
    assert result.exit_code == 1
    assert "q^(2as) = 1" in result.stderr

    result = runner.invoke(main, ["eisenstein", "coeff", "--A", "2T", "--s", "2", "--n", "0"])
    assert result.exit_code == 2


def test_eisenstein_eval_index(runner: CliRunner) -> None:
    result = runner.invoke(main, ["eisenstein", "eval", "--A", "T", "--g", "n=0,x=0", "--s", "2"])
    assert result.exit_code == 0, result.output
    assert abs(_json(result.output)["value_re"] - (1 + 1 / 30)) <= 1e-6

    result = runner.invoke(main, ["eisenstein", "eval", "--A", "T", "--g", "n=0", "--s", "2"])
    assert result.exit_code == 2

    result = runner.invoke(main, ["eisenstein", "index", "--A", "T"])
    data = _json(result.output)
    assert data["m"] == data["m_enumerated"] == 6
    assert data["order_formula"] == data["order_enumerated"] == 120


def test_que(runner: CliRunner, tmp_path: Path) -> None:
    result = runner.invoke(main, ["que", "predict", "--A", "T", "--t", "1.0", "--psi", "0:1"])
    assert result.exit_code == 0, result.output
    assert _json(result.output)["m"] == 6

    out = tmp_path / "sweep"
    result = runner.invoke(main, ["que", "sweep", "--degrees", "1-3", "--psi", "0:1", "--kappa", "1",
                                  "--model", "closed", "--workers", "0", "--out", str(out)])
    assert result.exit_code == 0, result.output
    data = _json(result.output)
    assert data["fitted_slope"] is not None
    assert (out / "que_q5_t1.csv").exists()
    assert (out / "que_q5_t1.json").exists()

    # q must be a prime > 3
    result = runner.invoke(main, ["que", "sweep", "--q", "4", "--degrees", "1"])
    assert result.exit_code == 2
    assert "FFQ_Q" in result.stderr

    summary = tmp_path / "suite.json"
    result = runner.invoke(main, ["que", "suite", "--suite", "index", "--workers", "0", "--out", str(summary)])
    assert result.exit_code == 0, result.output
    assert _json(result.output)["passed"]
    assert orjson.loads(summary.read_bytes())["suites"][0]["name"] == "index"


def test_identities(runner: CliRunner, tmp_path: Path) -> None:
    result = runner.invoke(main, ["identities", "ramanujan-series", "--Q", "T+1"])
    assert result.exit_code == 0, result.output
    assert _json(result.output)["verdict"] == "match"

    result = runner.invoke(main, ["identities", "level-series", "--Q", "T", "--A", "T+1"])
    assert result.exit_code == 0, result.output

    result = runner.invoke(main, ["identities", "newform", "--degree", "2"])
    assert result.exit_code == 0, result.output
    assert _json(result.output)["verdict"] == "ll"

    path = tmp_path / "discrepancies.csv"
    result = runner.invoke(main, ["identities", "discrepancy", "--x-degree", "1", "--q-degree", "1",
                                  "--out", str(path)])
    assert result.exit_code == 0, result.output
    data = _json(result.output)
    assert data["mismatches_A_not_dividing_X"] == 0
    assert path.exists()


def test_spectrum(runner: CliRunner, tmp_path: Path) -> None:
    result = runner.invoke(main, ["spectrum", "--depth", "3", "--degbound", "2", "--out", str(tmp_path)])
    assert result.exit_code == 0, result.output
    data = _json(result.output)
    assert data["perron_ok"]
    assert data["manifest"]["subgroup"] == "GAMMA0"
    assert (tmp_path / "adjacency.txt").exists()
    assert (tmp_path / "manifest.json").exists()
