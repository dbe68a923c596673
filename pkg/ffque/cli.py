#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Dict,
    Optional,
    Tuple,
)

import logging
from pathlib import Path

import click

from ffque import __version__
from ffque.arith import (
    Poly,
    irreducibles,
)
from ffque.config import CONFIG as C
from ffque.config import (
    check_spectral_parameter,
    load_config,
    validate_config,
)
from ffque.db import ResultDB
from ffque.dirichlet import (
    ExtensionRule,
    FormMode,
    SyntheticMultiplicative,
    geometric_n_sums,
    verify_constant_series,
    verify_level_series,
    verify_newform_series,
    verify_ramanujan_identity,
    verify_ramanujan_series,
)
from ffque.eisenstein import (
    calibrate_kappa,
    coeff_closed,
    coeff_unfolded,
    eval_direct,
    fourier_extract,
    index_gamma0,
    index_gamma0_enumerated,
    order_pgl2_residue,
)
from ffque.exceptions import (
    ConfigError,
    FFQueError,
)
from ffque.func import (
    mismatches,
    ramanujan_discrepancies,
    write_discrepancies,
)
from ffque.que import (
    TestWeight,
    predict,
    que_sweep,
    run_verification_suite,
    write_csv,
    write_summary,
)
from ffque.tree import (
    Subgroup,
    TreeVertex,
    adjacency_spectrum,
    build_quotient,
    write_adjacency,
    write_manifest,
)
from ffque.util import (
    dump_json,
    parse_complex,
    parse_int_list,
    timeit,
)

log = logging.getLogger(__name__)


class ConfigFailure(click.ClickException):
    exit_code = 2


class FFQueGroup(click.Group):
    """
    Click group that turns library errors into click exceptions (config errors exit with status 2)
    """

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except ConfigError as e:
            raise ConfigFailure(str(e)) from e
        except FFQueError as e:
            raise click.ClickException(str(e)) from e


class ComplexParam(click.ParamType):
    name = "complex"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> complex:
        if isinstance(value, complex):
            return value
        try:
            return parse_complex(str(value))
        except ValueError as e:
            self.fail(str(e), param, ctx)


COMPLEX = ComplexParam()


def _emit(obj: Any) -> None:
    click.echo(dump_json(obj).decode("utf-8"))


def _poly(text: str, q: int) -> Poly:
    try:
        return Poly.parse(text, q)
    except ValueError as e:
        raise click.BadParameter(str(e)) from e


def _monic(text: str, q: int) -> Poly:
    p = _poly(text, q)
    if not p.is_monic:
        raise click.BadParameter(f"{text} is not monic")
    return p


def _complex_dict(value: complex) -> Dict[str, float]:
    return {"value_re": value.real, "value_im": value.imag}


def _settings(q: Optional[int], t: Optional[float], config: Optional[str]) -> Dict[str, Any]:
    cfg = load_config(config) if config is not None else dict(C)
    if q is not None:
        cfg["FFQ_Q"] = q
    if t is not None:
        cfg["FFQ_T"] = t
    return validate_config(cfg)


q_option = click.option("--q", "q", type=int, default=None, help="Field size, a prime > 3 (default FFQ_Q)")


@click.group(cls=FFQueGroup)
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=None, help="Override LOG_LEVEL")
@click.version_option(version=__version__, prog_name="ffque")
def main(log_level: Optional[str]) -> None:
    """Exact arithmetic for Eisenstein series over F_q[T]."""
    level = C["LOG_LEVEL"] if log_level is None else logging.getLevelName(log_level.upper())
    logging.basicConfig(level=level, format=C["LOG_FORMAT"], datefmt=C["LOG_DATE_FORMAT"])


# --- eisenstein -------------------------------------------------------------------------------------

@main.group(cls=FFQueGroup)
def eisenstein() -> None:
    """Eisenstein series on Gamma0(A)."""


@eisenstein.command("coeff")
@q_option
@click.option("--A", "level", required=True, help="Monic irreducible level")
@click.option("--s", "s", type=COMPLEX, required=True, help="Complex point, e.g. 2+0i")
@click.option("--n", "n", type=int, required=True, help="Height exponent")
@click.option("--Q", "twist", default="0", show_default=True, help="Twist, monic or 0")
@click.option("--source", type=click.Choice(["closed", "unfolded", "extracted"]), default="closed",
              show_default=True, help="Closed formulas, unfolded coset sum or numeric Fourier integral")
@click.option("--tol", type=float, default=None, help="Coset sum tolerance for --source extracted")
def eisenstein_coeff(q: Optional[int], level: str, s: complex, n: int, twist: str, source: str,
                     tol: Optional[float]) -> None:
    """Fourier coefficient c(n, Q, s)."""
    q = C["FFQ_Q"] if q is None else q
    a = _monic(level, q)
    x = _poly(twist, q)
    if source == "closed":
        value, bound = coeff_closed(n, x, s, a), 0.0
    elif source == "unfolded":
        value, bound = coeff_unfolded(n, x, s, a), 0.0
    else:
        value = fourier_extract(n, x, s, a, tol=tol)
        bound = C["EISENSTEIN_TOL"] if tol is None else tol
    _emit({**_complex_dict(value), "truncation_bound": bound, "A": a.to_text(), "n": n, "Q": x.to_text(),
           "s": str(s), "source": source})


@eisenstein.command("eval")
@q_option
@click.option("--A", "level", required=True, help="Monic irreducible level")
@click.option("--g", "point", required=True, help="Tree point n=<int>,x=<Laurent>")
@click.option("--s", "s", type=COMPLEX, required=True, help="Complex point with Re(s) > 1")
@click.option("--tol", type=float, default=None, help="Relative truncation tolerance (default EISENSTEIN_TOL)")
def eisenstein_eval(q: Optional[int], level: str, point: str, s: complex, tol: Optional[float]) -> None:
    """Direct coset sum E(g, s) with a certified truncation bound."""
    q = C["FFQ_Q"] if q is None else q
    a = _monic(level, q)
    try:
        g = TreeVertex.parse(point, q)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--g") from e
    _emit(eval_direct(g, s, a, tol).to_dict())


@eisenstein.command("index")
@q_option
@click.option("--A", "level", required=True, help="Monic irreducible level")
@click.option("--enumerate/--no-enumerate", "enumerated", default=True, show_default=True,
              help="Also count the residue group by enumeration")
def eisenstein_index(q: Optional[int], level: str, enumerated: bool) -> None:
    """Index m of Gamma0(A) in Gamma0(1) and the order of PGL2 over F_q[T]/A."""
    q = C["FFQ_Q"] if q is None else q
    a = _monic(level, q)
    out = {"A": a.to_text(), "abs_A": a.norm, "m": index_gamma0(a), "order_formula": a.norm * (a.norm ** 2 - 1)}
    if enumerated:
        out["m_enumerated"] = index_gamma0_enumerated(a)
        out["order_enumerated"] = order_pgl2_residue(a)
    _emit(out)


# --- que --------------------------------------------------------------------------------------------

@main.group(cls=FFQueGroup)
def que() -> None:
    """Level aspect QUE harness."""


@que.command("sweep")
@q_option
@click.option("--t", "t", type=float, default=None, help="Spectral parameter (default FFQ_T)")
@click.option("--deg-min", type=int, default=None, help="Smallest deg A (default QUE_DEG_MIN)")
@click.option("--deg-max", type=int, default=None, help="Largest deg A (default QUE_DEG_MAX)")
@click.option("--degrees", default=None, help="Explicit degree list, e.g. 1-4,6 (overrides --deg-min/--deg-max)")
@click.option("--psi", default=None, help="Test weight support list n:value (default QUE_PSI)")
@click.option("--kappa", type=float, default=None, help="Unit multiplicity constant (default QUE_KAPPA, else q - 1)")
@click.option("--calibrate", is_flag=True, default=False, help="Fit kappa by Parseval at A = T, s = 2 first")
@click.option("--model", type=click.Choice(["closed", "leading", "unfolded"]), default=None,
              help="Coefficient model (default QUE_MODEL)")
@click.option("--workers", type=int, default=None, help="Worker processes, 0 runs inline (default FFQ_NUM_WORKERS)")
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None, help="Flat key = value file")
@click.option("--out", type=click.Path(file_okay=False), default=None, help="Output directory (default OUTPUT_DIR)")
@click.option("--db", "store", is_flag=True, default=False, help="Store the sweep in the result database")
@timeit
def que_sweep_cmd(q: Optional[int], t: Optional[float], deg_min: Optional[int], deg_max: Optional[int],
                  degrees: Optional[str], psi: Optional[str], kappa: Optional[float], calibrate: bool,
                  model: Optional[str], workers: Optional[int], config: Optional[str], out: Optional[str],
                  store: bool) -> None:
    """Compute I per level and regress (m / H(0)) I2 against log|A|."""
    cfg = _settings(q, t, config)
    q, t = cfg["FFQ_Q"], cfg["FFQ_T"]
    if degrees is not None:
        try:
            degree_list = parse_int_list(degrees)
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint="--degrees") from e
    else:
        lo = cfg["QUE_DEG_MIN"] if deg_min is None else deg_min
        hi = cfg["QUE_DEG_MAX"] if deg_max is None else deg_max
        degree_list = list(range(lo, hi + 1))
    weight = TestWeight.parse(cfg["QUE_PSI"] if psi is None else psi)

    if calibrate:
        kappa = calibrate_kappa(2, Poly.T(q)).kappa
        log.info(f"Using calibrated kappa={kappa:.9f}")

    run = que_sweep(q, t, degree_list, weight, kappa=cfg["QUE_KAPPA"] if kappa is None else kappa,
                    model=cfg["QUE_MODEL"] if model is None else model,
                    num_workers=cfg["FFQ_NUM_WORKERS"] if workers is None else workers)

    outdir = Path(cfg["OUTPUT_DIR"] if out is None else out)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = f"que_q{q}_t{t:g}"
    write_csv(run, outdir / f"{stem}.csv")
    write_summary(run, outdir / f"{stem}.json")
    if store:
        db = ResultDB()
        db.create_schema()
        db.store_sweep(run)
    _emit(run.summary())


@que.command("suite")
@q_option
@click.option("--t", "t", type=float, default=None, help="Spectral parameter (default FFQ_T)")
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None, help="Flat key = value file")
@click.option("--suite", "names", multiple=True, help="Run only these suites (repeatable)")
@click.option("--workers", type=int, default=None, help="Worker processes, 0 runs inline (default FFQ_NUM_WORKERS)")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON summary to this file")
@click.option("--db", "store", is_flag=True, default=False, help="Store the suite records in the result database")
@click.pass_context
@timeit
def que_suite_cmd(ctx: click.Context, q: Optional[int], t: Optional[float], config: Optional[str],
                  names: Tuple[str, ...], workers: Optional[int], out: Optional[str], store: bool) -> None:
    """Run the verification battery; exit status 1 iff a hard check fails."""
    cfg = _settings(q, t, config)
    status, summary = run_verification_suite(cfg, names or None, workers)
    if out is not None:
        Path(out).write_bytes(dump_json(summary))
    if store:
        db = ResultDB()
        db.create_schema()
        db.store_suites(summary)
    _emit({k: v for k, v in summary.items() if k != "suites"})
    ctx.exit(status)


@que.command("predict")
@q_option
@click.option("--A", "level", required=True, help="Monic irreducible level")
@click.option("--t", "t", type=float, default=None, help="Spectral parameter (default FFQ_T)")
@click.option("--psi", default=None, help="Test weight support list n:value (default QUE_PSI)")
def que_predict(q: Optional[int], level: str, t: Optional[float], psi: Optional[str]) -> None:
    """Residue side leading term and the G(0) cross-check."""
    q = C["FFQ_Q"] if q is None else q
    t = C["FFQ_T"] if t is None else t
    check_spectral_parameter(t, q)
    weight = TestWeight.parse(C["QUE_PSI"] if psi is None else psi)
    _emit(predict(_monic(level, q), t, weight).to_dict())


# --- identities -------------------------------------------------------------------------------------

@main.group(cls=FFQueGroup)
def identities() -> None:
    """Formal Dirichlet series identities and Ramanujan sums."""


def _report(report) -> None:
    click.echo(report.to_json().decode("utf-8"))
    if not report.ok:
        raise click.exceptions.Exit(1)


@identities.command("ramanujan-series")
@q_option
@click.option("--Q", "twist", required=True, help="Twist, monic or 0")
@click.option("--n", "n", type=int, default=6, show_default=True, help="u-degree truncation")
def identities_ramanujan_series(q: Optional[int], twist: str, n: int) -> None:
    """sum_X C_X(Q) |X|^-s = sigma_{1-s}(Q) / zeta(s)."""
    q = C["FFQ_Q"] if q is None else q
    _report(verify_ramanujan_series(_poly(twist, q), n))


@identities.command("level-series")
@q_option
@click.option("--Q", "twist", required=True, help="Twist, monic or 0")
@click.option("--A", "level", required=True, help="Monic irreducible level")
@click.option("--n", "n", type=int, default=6, show_default=True, help="u-degree truncation")
def identities_level_series(q: Optional[int], twist: str, level: str, n: int) -> None:
    """Ramanujan series restricted to A | X."""
    q = C["FFQ_Q"] if q is None else q
    _report(verify_level_series(_poly(twist, q), _monic(level, q), n))


@identities.command("constant-series")
@q_option
@click.option("--A", "level", required=True, help="Monic irreducible level")
@click.option("--n", "n", type=int, default=6, show_default=True, help="u-degree truncation")
def identities_constant_series(q: Optional[int], level: str, n: int) -> None:
    """Totient series behind the constant term."""
    q = C["FFQ_Q"] if q is None else q
    _report(verify_constant_series(_monic(level, q), n))


@identities.command("newform")
@q_option
@click.option("--degree", type=int, default=3, show_default=True, help="Largest prime degree carrying values")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed of the synthetic coefficients")
@click.option("--rule", type=click.Choice([r.value for r in ExtensionRule]), default=ExtensionRule.COMPLETE.value,
              show_default=True, help="Extension to prime powers")
@click.option("--mode", type=click.Choice([m.value for m in FormMode]), default=FormMode.NEWFORM.value,
              show_default=True, help="Newform or oldform variant")
@click.option("--A", "level", default=None, help="Level for the oldform variant")
@click.option("--n", "n", type=int, default=8, show_default=True, help="u-degree truncation")
@click.option("--nu", type=COMPLEX, default=None, help="Evaluate at b = q^nu instead of formally")
def identities_newform(q: Optional[int], degree: int, seed: int, rule: str, mode: str, level: Optional[str], n: int,
                       nu: Optional[complex]) -> None:
    """Which closed form matches sum_Q c(Q) sigma_nu(Q) |Q|^-s."""
    q = C["FFQ_Q"] if q is None else q
    coeffs = SyntheticMultiplicative.random(q, degree, ExtensionRule(rule), seed)
    a = _monic(level, q) if level is not None else None
    _report(verify_newform_series(coeffs, n, FormMode(mode), a, nu))


@identities.command("ramanujan-identity")
@q_option
@click.option("--t", "t", type=float, default=None, help="Spectral parameter (default FFQ_T)")
@click.option("--s", "s_samples", type=COMPLEX, multiple=True, required=True, help="Sample point (repeatable)")
@click.option("--n", "n", type=int, default=15, show_default=True, help="Degree truncation")
def identities_ramanujan_identity(q: Optional[int], t: Optional[float], s_samples: Tuple[complex, ...],
                                  n: int) -> None:
    """sum_Q |sigma_{2it}(Q)|^2 |Q|^-(s+1) against its closed product."""
    q = C["FFQ_Q"] if q is None else q
    t = C["FFQ_T"] if t is None else t
    _report(verify_ramanujan_identity(t, list(s_samples), n, q))


@identities.command("nsums")
@q_option
@click.option("--a", "a", type=int, required=True, help="deg A")
@click.option("--deg-Q", "deg_q", type=int, required=True, help="deg Q")
@click.option("--s", "s", type=COMPLEX, required=True, help="Complex point")
@click.option("--t", "t", type=float, default=None, help="Spectral parameter (default FFQ_T)")
def identities_nsums(q: Optional[int], a: int, deg_q: int, s: complex, t: Optional[float]) -> None:
    """Closed, derived and direct values of the two geometric n-sums."""
    q = C["FFQ_Q"] if q is None else q
    t = C["FFQ_T"] if t is None else t
    sums = geometric_n_sums(a, deg_q, s, t, q)
    _emit(sums)
    if not all(v for k, v in sums.verdicts.items() if k != "second_printed"):
        raise click.exceptions.Exit(1)


@identities.command("discrepancy")
@q_option
@click.option("--A", "levels", multiple=True, help="Level (repeatable, default T and T+1)")
@click.option("--x-degree", type=int, default=3, show_default=True, help="Largest deg X")
@click.option("--q-degree", type=int, default=3, show_default=True, help="Largest deg Q")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV report path")
def identities_discrepancy(q: Optional[int], levels: Tuple[str, ...], x_degree: int, q_degree: int,
                           out: Optional[str]) -> None:
    """Ramanujan sums by enumeration against the closed form."""
    q = C["FFQ_Q"] if q is None else q
    a_list = [_monic(x, q) for x in levels] or [Poly.T(q), Poly.T(q) + 1]
    rows = list(ramanujan_discrepancies(a_list, x_degree, q_degree))
    if out is not None:
        write_discrepancies(rows, Path(out))
    bad = mismatches(rows)
    _emit({
        "rows": len(rows),
        "mismatches": len(bad),
        "mismatches_A_divides_X": sum(1 for r in bad if r.domain == "A|X"),
        "mismatches_A_not_dividing_X": sum(1 for r in bad if r.domain != "A|X"),
    })


# --- spectrum ---------------------------------------------------------------------------------------

@main.command("spectrum")
@q_option
@click.option("--A", "level", default=None, help="Level (default: first irreducible of degree 1, T)")
@click.option("--depth", type=int, default=6, show_default=True, help="Exploration radius")
@click.option("--degbound", type=int, default=None, help="Stabiliser degree bound (default ORBIT_MAX_DEGREE)")
@click.option("--subgroup", type=click.Choice(["gamma0", "gamma"]), default="gamma0", show_default=True)
@click.option("--out", type=click.Path(file_okay=False), default=None, help="Write adjacency list and manifest here")
def spectrum(q: Optional[int], level: Optional[str], depth: int, degbound: Optional[int], subgroup: str,
             out: Optional[str]) -> None:
    """Adjacency spectrum of a truncated quotient of the tree."""
    q = C["FFQ_Q"] if q is None else q
    a = _monic(level, q) if level is not None else irreducibles(1, q)[0]
    degbound = C["ORBIT_MAX_DEGREE"] if degbound is None else degbound
    graph = build_quotient(a, depth, degbound, Subgroup[subgroup.upper()])
    report = adjacency_spectrum(graph)
    if out is not None:
        outdir = Path(out)
        outdir.mkdir(parents=True, exist_ok=True)
        write_adjacency(graph, outdir / "adjacency.txt")
        write_manifest(graph, outdir / "manifest.json")
    _emit({**report.to_dict(), "manifest": {k: v for k, v in graph.manifest().items() if k != "vertices"}})


if __name__ == "__main__":
    main()
