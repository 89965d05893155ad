"""Eigenvalue inequalities for magnetic Schroedinger operators.

Configs may be passed as dicts, JSON strings or paths to JSON files. Reports
come back as dicts with the same layout as the ``magspec verify`` output.
"""

from __future__ import annotations

import json
import os
from typing import Any, Mapping, Union

import numpy as np

from ._core import (
    SCHEMA_VERSION,
    DomainError,
    Error,
    InputError,
    NumericalError,
    TruncationError,
    bessel_j,
    bessel_zero,
    box_spectrum,
    chiti_constant,
    chiti_constant_closed,
    disk_spectrum,
    h_constant,
    heat_constant,
    legendre_transform_riesz,
    riesz_mean,
    unit_ball_volume,
)
from . import _core

Config = Union[Mapping[str, Any], str, os.PathLike]

__all__ = [
    "SCHEMA_VERSION",
    "DomainError",
    "Error",
    "InputError",
    "NumericalError",
    "TruncationError",
    "bessel_j",
    "bessel_zero",
    "box_spectrum",
    "chiti_constant",
    "chiti_constant_closed",
    "chiti_ratio",
    "compute_spectrum",
    "constants",
    "convergence_study",
    "disk_spectrum",
    "eigenpairs",
    "exit_code",
    "h_constant",
    "heat_constant",
    "legendre_transform_riesz",
    "load_config",
    "riesz_mean",
    "run_scenario",
    "unit_ball_volume",
]


def _text(config: Config) -> tuple[str, str]:
    """JSON text and the directory that relative paths resolve against."""
    if isinstance(config, Mapping):
        return json.dumps(config), "."
    path = os.fspath(config)
    if isinstance(config, os.PathLike) or not path.lstrip().startswith("{"):
        with open(path, encoding="utf-8") as fh:
            return fh.read(), os.path.dirname(os.path.abspath(path))
    return path, "."


def load_config(config: Config) -> dict:
    """Validated config with every default filled in."""
    return json.loads(_core.normalize_config(*_text(config)))


def constants(d: int, p_list=(1.0, 2.0)) -> dict:
    return json.loads(_core.constants_json(d, list(p_list)))


def compute_spectrum(config: Config) -> np.ndarray:
    return np.asarray(_core.compute_spectrum(*_text(config)))


def eigenpairs(config: Config):
    """(values, vectors, h, measure) for a grid scenario; vectors[i] is the
    i-th eigenfunction at the interior nodes, unit norm in sum |v|^2 h^2."""
    values, vectors, h, measure = _core.eigenpairs(*_text(config))
    return np.asarray(values), vectors, h, measure


def chiti_ratio(omega, h: float, lam: float, d: int = 2, p: float = 2.0) -> float:
    """sup|omega| / (C_d(p) lam^{d/2p} ||omega||_p); at most 1 for eigenfunctions."""
    return _core.chiti_ratio(np.asarray(omega, dtype=complex), h, lam, d, p)


def run_scenario(config: Config, include_timing: bool = True) -> dict:
    text, base = _text(config)
    return json.loads(_core.run_scenario(text, base, include_timing))


def convergence_study(config: Config, levels: int = 3) -> dict:
    text, base = _text(config)
    return json.loads(_core.convergence_study(text, levels, base))


def exit_code(report: Mapping[str, Any]) -> int:
    """0 pass, 1 hard violation, 3 a check could not be evaluated."""
    return _core.exit_code(json.dumps(report))
