"""Case configuration, error norms, convergence tables and output files."""

import csv
import json
import logging
import math
import os
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from . import _backend
from .geometry import BUILTIN_INTERFACES, builtin_profile, load_profile
from .oracles import flat_exact
from .solver import ProblemParams, solve_interface

logger = logging.getLogger(__name__)

SOLUTION_COLUMNS = ("x", "h", "phi", "dphi_dtau", "dphi_dnu_1", "dphi_dnu_2")
TABLE_COLUMNS = (
    "n", "error_phi", "eoc_phi", "error_dtau", "eoc_dtau", "error_dnu1", "eoc_dnu1",
)


class ConfigError(ValueError):
    """Raised for an invalid case configuration."""


@dataclass(frozen=True)
class CaseConfig:
    """One run of the solver: interface, physics, resolution and outputs."""

    interface: str = "flat"
    h0: Optional[float] = None
    L: float = 1.0
    A: float = 1.0
    eps1: float = 8.0
    eps2: float = 1.0
    n: Tuple[int, ...] = (64,)
    mode: str = "solve"
    reference: str = "self"
    out: str = "out"

    def __post_init__(self):
        n = (self.n,) if isinstance(self.n, int) else tuple(int(v) for v in self.n)
        object.__setattr__(self, "n", n)
        if self.h0 is None:
            object.__setattr__(self, "h0", 0.03 * self.L)
        self.validate()

    def validate(self):
        kind = self.interface
        if not (kind in BUILTIN_INTERFACES or kind.startswith("file:")):
            raise ConfigError(f"interface must be flat, sine, cosine or file:<path>, got {kind!r}")
        if kind.startswith("file:") and not kind[5:]:
            raise ConfigError("file interface needs a path")
        if not self.L > 0:
            raise ConfigError("L must be positive")
        if not self.h0 > 0:
            raise ConfigError("h0 must be positive")
        if not (self.eps1 > 0 and self.eps2 > 0):
            raise ConfigError("eps1 and eps2 must be positive")
        if self.mode not in ("solve", "convergence"):
            raise ConfigError(f"mode must be solve or convergence, got {self.mode!r}")
        if self.reference not in ("analytic", "self"):
            raise ConfigError(f"reference must be analytic or self, got {self.reference!r}")
        if self.reference == "analytic" and self.interface != "flat":
            raise ConfigError("analytic reference is only available for the flat interface")
        if not self.n:
            raise ConfigError("at least one n is required")
        for v in self.n:
            if v < 8 or v % 2:
                raise ConfigError(f"n must be even and >= 8, got {v}")
        if self.mode == "convergence":
            if any(b != 2 * a for a, b in zip(self.n, self.n[1:])):
                raise ConfigError("convergence n-list must double at each step")

    def profile(self):
        if self.interface.startswith("file:"):
            return load_profile(self.interface[5:], self.L)
        return builtin_profile(self.interface, self.h0, self.L)

    def params(self):
        return ProblemParams.cosine(self.eps1, self.eps2, self.L, self.A)


@dataclass
class ConvergenceRow:
    n: int
    error_phi: float
    error_dtau: float
    error_dnu1: float
    eoc_phi: Optional[float] = None
    eoc_dtau: Optional[float] = None
    eoc_dnu1: Optional[float] = None


def discrete_l2_error(approx, reference):
    """Relative discrete l2 error ``||approx - ref|| / ||ref||``.

    A reference on the doubled grid is restricted to the coincident
    (even-indexed) nodes.
    """
    approx = np.asarray(approx, dtype=float)
    reference = np.asarray(reference, dtype=float)
    if reference.size == 2 * approx.size:
        reference = reference[::2]
    if reference.shape != approx.shape:
        raise ValueError("approximation and reference live on different grids")
    norm = np.linalg.norm(reference)
    if norm == 0.0:
        raise ValueError("reference has zero norm")
    return float(np.linalg.norm(approx - reference) / norm)


def eoc(previous_error, error):
    """``log2(Error(n/2) / Error(n))``: positive while errors fall."""
    if previous_error is None:
        return None
    if previous_error <= 0 or error <= 0:
        return math.nan
    return math.log2(previous_error / error)


def _analytic_reference(config, params, sol):
    x, h0 = sol.grid.x, config.h0
    p = (x, np.full_like(x, h0))
    return (
        flat_exact(params, h0, p, 1),
        flat_exact(params, h0, p, 1, "dx"),
        flat_exact(params, h0, p, 1, "dy"),
    )


def convergence_study(config, solutions=None):
    """Errors and EOCs of phi, dphi/dtau and dphi_1/dnu over the n-list.

    ``solutions`` (dict n -> InterfaceSolution) is filled in as a cache.
    """
    profile, params = config.profile(), config.params()
    solutions = {} if solutions is None else solutions

    def get(n):
        if n not in solutions:
            solutions[n] = solve_interface(profile, params, n)
        return solutions[n]

    rows: List[ConvergenceRow] = []
    prev = None
    for n in config.n:
        sol = get(n)
        if config.reference == "analytic":
            ref = _analytic_reference(config, params, sol)
        else:
            fine = get(2 * n)
            ref = (fine.phi, fine.dphi_dtau, fine.dphi_dnu_1)
        errs = [
            discrete_l2_error(v, r)
            for v, r in zip((sol.phi, sol.dphi_dtau, sol.dphi_dnu_1), ref)
        ]
        row = ConvergenceRow(n, *errs)
        if prev is not None:
            row.eoc_phi = eoc(prev.error_phi, row.error_phi)
            row.eoc_dtau = eoc(prev.error_dtau, row.error_dtau)
            row.eoc_dnu1 = eoc(prev.error_dnu1, row.error_dnu1)
        rows.append(row)
        prev = row
    return rows


def _fmt(v):
    return "" if v is None else format(float(v), ".17g")


def write_solution_csv(path, sol):
    g = sol.grid
    cols = (g.x, g.h, sol.phi, sol.dphi_dtau, sol.dphi_dnu_1, sol.dphi_dnu_2)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SOLUTION_COLUMNS)
        for row in zip(*cols):
            w.writerow([_fmt(v) for v in row])


def write_analytic_csv(path, config, params, x):
    """Exact flat-interface potential and derivatives at ``x`` (plot data)."""
    h0 = config.h0
    p = (x, np.full_like(x, h0))
    cols = (
        x,
        np.full_like(x, h0),
        flat_exact(params, h0, p, 1),
        flat_exact(params, h0, p, 1, "dx"),
        flat_exact(params, h0, p, 1, "dy"),
        flat_exact(params, h0, p, 2, "dy"),
    )
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SOLUTION_COLUMNS)
        for row in zip(*cols):
            w.writerow([_fmt(v) for v in row])


def write_table_csv(path, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(TABLE_COLUMNS)
        for r in rows:
            w.writerow([r.n] + [_fmt(getattr(r, c)) for c in TABLE_COLUMNS[1:]])


def _json_safe(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def run_case(config):
    """Run a configured case and write its outputs to ``config.out``.

    Returns the list of files written.  Data files are deterministic;
    ``summary.json`` also records wall-clock timings.
    """
    try:
        os.makedirs(config.out, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"cannot create output directory {config.out!r}: {exc}") from exc
    profile, params = config.profile(), config.params()
    written = []
    timings = {}
    residuals = {}
    solutions = {}
    t_start = time.perf_counter()

    if config.mode == "solve":
        for n in config.n:
            t0 = time.perf_counter()
            sol = solve_interface(profile, params, n)
            timings[f"solve_n{n}"] = time.perf_counter() - t0
            residuals[str(n)] = sol.residuals
            path = os.path.join(config.out, f"solution_n{n}.csv")
            write_solution_csv(path, sol)
            written.append(path)
            if config.interface == "flat":
                path = os.path.join(config.out, f"analytic_n{n}.csv")
                write_analytic_csv(path, config, params, sol.grid.x)
                written.append(path)
        rows = None
    else:
        t0 = time.perf_counter()
        rows = convergence_study(config, solutions)
        timings["convergence_study"] = time.perf_counter() - t0
        residuals = {str(n): s.residuals for n, s in sorted(solutions.items())}
        path = os.path.join(config.out, "convergence.csv")
        write_table_csv(path, rows)
        written.append(path)

    timings["total"] = time.perf_counter() - t_start
    summary = {
        "config": asdict(config),
        "backend": _backend.get_backend(),
        "profile_modes": profile.n_modes,
        "residuals": residuals,
        "timings_s": timings,
    }
    if rows is not None:
        summary["convergence"] = [
            {k: _json_safe(v) for k, v in asdict(r).items()} for r in rows
        ]
    path = os.path.join(config.out, "summary.json")
    with open(path, "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    written.append(path)
    logger.info("wrote %d files to %s", len(written), config.out)
    return written
