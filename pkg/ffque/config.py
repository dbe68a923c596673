#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import (
    Any,
    Callable,
    Dict,
    Optional,
)

import logging
import math
import os
from pathlib import Path

import sympy

from ffque.exceptions import (
    ConfigError,
    DomainError,
)

log = logging.getLogger(__name__)


DEFAULT = {
    # Logging settings
    "LOG_LEVEL": logging.INFO,
    "LOG_FORMAT": "%(asctime)s.%(msecs)04d %(levelname)-5s [%(threadName)-10s %(process)5d] %(name)s: %(message)s",
    "LOG_DATE_FORMAT": "%H:%M:%S",

    # Arithmetic settings
    "FFQ_Q": os.getenv("FFQ_Q", 5),
    "FFQ_T": os.getenv("FFQ_T", 1.0),

    # Resource bounds (enumerations raise ResourceError beyond these)
    "RAMANUJAN_MAX_DEGREE": os.getenv("RAMANUJAN_MAX_DEGREE", 6),
    "INTEGRATE_MAX_DEPTH": os.getenv("INTEGRATE_MAX_DEPTH", 7),
    "EISENSTEIN_MAX_DEGREE": os.getenv("EISENSTEIN_MAX_DEGREE", 64),
    "EISENSTEIN_TOL": os.getenv("EISENSTEIN_TOL", 1e-10),
    "COSET_MAX_DEGREE": os.getenv("COSET_MAX_DEGREE", 4),
    "PGL2_MAX_NORM": os.getenv("PGL2_MAX_NORM", 125),
    "QUOTIENT_MAX_VERTICES": os.getenv("QUOTIENT_MAX_VERTICES", 5000),
    "ORBIT_MAX_DEGREE": os.getenv("ORBIT_MAX_DEGREE", 2),
    "SERIES_MAX_DEGREE": os.getenv("SERIES_MAX_DEGREE", 24),

    # QUE harness settings
    "QUE_DEG_MIN": os.getenv("QUE_DEG_MIN", 1),
    "QUE_DEG_MAX": os.getenv("QUE_DEG_MAX", 6),
    "QUE_PSI": os.getenv("QUE_PSI", "0:1"),
    "QUE_KAPPA": os.getenv("QUE_KAPPA", None),  # None: q - 1
    "QUE_MODEL": os.getenv("QUE_MODEL", "leading"),
    "QUE_MAX_TWIST_DEGREE": os.getenv("QUE_MAX_TWIST_DEGREE", 7),

    # Database settings
    "DB_DRIVER": os.getenv("DB_DRIVER", "sqlite"),
    "DB_HOST": os.getenv("DB_HOST", "localhost"),
    "DB_PORT": os.getenv("DB_PORT", 5432),
    "DB_USERNAME": os.getenv("DB_USERNAME", "root"),
    "DB_PASSWORD": os.getenv("DB_PASSWORD", "password"),
    "DB_DATABASE": os.getenv("DB_DATABASE", "ffque.db"),
    "DB_SCHEMA": os.getenv("DB_SCHEMA", None),

    "DB_DEBUG": False,

    # Cache settings ("memory" or "redis")
    "CACHE_BACKEND": os.getenv("CACHE_BACKEND", "memory"),
    "REDIS_HOST": os.getenv("REDIS_HOST", "localhost"),
    "REDIS_PORT": os.getenv("REDIS_PORT", 6379),
    "REDIS_PASSWORD": os.getenv("REDIS_PASSWORD", None),
    "REDIS_DATABASE": os.getenv("REDIS_DATABASE", 0),

    # Controller settings (0 runs every job inline)
    "FFQ_NUM_WORKERS": os.getenv("FFQ_NUM_WORKERS", 0),

    # Output settings
    "OUTPUT_DIR": os.getenv("OUTPUT_DIR", "."),
}

CONFIG = dict(DEFAULT)


def _to_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _to_level(value: Any) -> int:
    if isinstance(value, int):
        return value
    text = str(value).strip()
    if text.isdigit():
        return int(text)
    level = logging.getLevelName(text.upper())
    if not isinstance(level, int):
        raise ValueError(f"unknown log level: {value!r}")
    return level


def _to_optional_str(value: Any) -> Optional[str]:
    if value is None:
        return None
    text = str(value).strip()
    return text if text and text.lower() != "none" else None


def _to_optional_float(value: Any) -> Optional[float]:
    text = _to_optional_str(value)
    return None if text is None else float(text)


TYPES: Dict[str, Callable[[Any], Any]] = {
    "LOG_LEVEL": _to_level,
    "LOG_FORMAT": str,
    "LOG_DATE_FORMAT": str,
    "FFQ_Q": int,
    "FFQ_T": float,
    "RAMANUJAN_MAX_DEGREE": int,
    "INTEGRATE_MAX_DEPTH": int,
    "EISENSTEIN_MAX_DEGREE": int,
    "EISENSTEIN_TOL": float,
    "COSET_MAX_DEGREE": int,
    "PGL2_MAX_NORM": int,
    "QUOTIENT_MAX_VERTICES": int,
    "ORBIT_MAX_DEGREE": int,
    "SERIES_MAX_DEGREE": int,
    "QUE_DEG_MIN": int,
    "QUE_DEG_MAX": int,
    "QUE_PSI": str,
    "QUE_KAPPA": _to_optional_float,
    "QUE_MODEL": str,
    "QUE_MAX_TWIST_DEGREE": int,
    "DB_DRIVER": str,
    "DB_HOST": str,
    "DB_PORT": int,
    "DB_USERNAME": str,
    "DB_PASSWORD": str,
    "DB_DATABASE": str,
    "DB_SCHEMA": _to_optional_str,
    "DB_DEBUG": _to_bool,
    "CACHE_BACKEND": str,
    "REDIS_HOST": str,
    "REDIS_PORT": int,
    "REDIS_PASSWORD": _to_optional_str,
    "REDIS_DATABASE": int,
    "FFQ_NUM_WORKERS": int,
    "OUTPUT_DIR": str,
}

# short names accepted in config files
ALIASES = {
    "q": "FFQ_Q",
    "t": "FFQ_T",
    "workers": "FFQ_NUM_WORKERS",
    "kappa": "QUE_KAPPA",
    "psi": "QUE_PSI",
    "model": "QUE_MODEL",
    "deg_min": "QUE_DEG_MIN",
    "deg_max": "QUE_DEG_MAX",
}

QUE_MODELS = ("closed", "leading", "unfolded")


def is_prime(n: int) -> bool:
    """
    Primality of the field size

    :param n: candidate
    :return:
    """
    return bool(sympy.isprime(n))


def check_spectral_parameter(t: float, q: int) -> None:
    """
    Reject t = 0 and every t with q^{2it} = 1, i.e. t in the lattice (pi / log q) Z

    :param t: spectral parameter
    :param q: field size
    :return:
    """
    if t == 0 or abs(math.sin(t * math.log(q))) < 1e-12:
        raise DomainError(f"t must lie in R^x outside the lattice (pi/log q)Z = (pi/{math.log(q):.6f})Z, got t={t}")


def validate_config(cfg: Dict[str, Any]) -> Dict[str, Any]:
    """
    Cast every known key to its type and enforce the standing assumptions (q prime > 3,
    t nonzero and nonsingular, positive bounds).

    :param cfg: raw configuration (values may be strings)
    :return: typed copy
    """
    out = dict(cfg)
    for key, cast in TYPES.items():
        if key not in out:
            continue
        try:
            out[key] = cast(out[key])
        except (TypeError, ValueError) as e:
            raise ConfigError(f"invalid value {out[key]!r} ({e})", field=key) from e

    q = out["FFQ_Q"]
    if not (is_prime(q) and q > 3):
        raise ConfigError("q must be prime > 3", field="FFQ_Q")

    t = out["FFQ_T"]
    if t == 0 or abs(math.sin(t * math.log(q))) < 1e-12:
        raise ConfigError(f"t must be nonzero with q^(2it) != 1 (t in R^x), got {t}", field="FFQ_T")

    for key in ("RAMANUJAN_MAX_DEGREE", "INTEGRATE_MAX_DEPTH", "EISENSTEIN_MAX_DEGREE", "COSET_MAX_DEGREE",
                "PGL2_MAX_NORM", "QUOTIENT_MAX_VERTICES", "ORBIT_MAX_DEGREE", "SERIES_MAX_DEGREE",
                "QUE_MAX_TWIST_DEGREE"):
        if out[key] <= 0:
            raise ConfigError("must be positive", field=key)

    if out["EISENSTEIN_TOL"] <= 0:
        raise ConfigError("must be positive", field="EISENSTEIN_TOL")

    if out["QUE_DEG_MIN"] < 1 or out["QUE_DEG_MAX"] < out["QUE_DEG_MIN"]:
        raise ConfigError("degree range must satisfy 1 <= QUE_DEG_MIN <= QUE_DEG_MAX", field="QUE_DEG_MAX")

    if out["QUE_KAPPA"] is not None and out["QUE_KAPPA"] <= 0:
        raise ConfigError("must be positive", field="QUE_KAPPA")

    if out["QUE_MODEL"] not in QUE_MODELS:
        raise ConfigError(f"unknown coefficient model (expected one of {QUE_MODELS})", field="QUE_MODEL")

    if out["FFQ_NUM_WORKERS"] < 0:
        raise ConfigError("must not be negative", field="FFQ_NUM_WORKERS")

    return out


def parse_config(text: str, base: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    Parse a flat ``key = value`` configuration text on top of ``base`` (default: ``CONFIG``).

    Note: blank lines and lines starting with ``#`` are ignored; inline comments are not supported

    :param text: file content
    :param base: configuration the file overrides
    :return: validated configuration
    """
    cfg = dict(CONFIG if base is None else base)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        if "=" not in line:
            raise ConfigError("expected 'key = value'", line=lineno)

        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError("missing key", line=lineno)

        key = ALIASES.get(key, ALIASES.get(key.lower(), key.upper()))
        if key not in TYPES:
            raise ConfigError("unknown key", line=lineno, field=key)

        try:
            cfg[key] = TYPES[key](value)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"invalid value {value!r} ({e})", line=lineno, field=key) from e

    try:
        return validate_config(cfg)
    except ConfigError as e:
        # attach the line of the offending key, if the file set it
        if e.field is not None and e.line is None:
            for lineno, raw in enumerate(text.splitlines(), start=1):
                head = raw.split("=", 1)[0].strip()
                if head and ALIASES.get(head, ALIASES.get(head.lower(), head.upper())) == e.field:
                    raise ConfigError(str(e).split(": ", 1)[-1], line=lineno, field=e.field) from e
        raise


def load_config(path: str, base: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    Load and validate a flat ``key = value`` config file

    :param path: file path
    :param base: configuration the file overrides
    :return:
    """
    log.info(f"Loading configuration from '{path}'")
    return parse_config(Path(path).read_text(encoding="utf-8"), base=base)


# environment overrides arrive as strings
CONFIG.update({key: TYPES[key](value) for key, value in CONFIG.items() if key in TYPES})
