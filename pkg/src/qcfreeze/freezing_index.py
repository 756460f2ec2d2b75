"""Trajectories of correlation measures versus noise, and the freezing index.

A trajectory samples one measure (discord or work deficit) along a grid
of channel strengths gamma.  Effective-freezing intervals are maximal
stretches on which the measure stays within a tolerance delta of its
value at the interval start; the freezing index eta_f condenses them
into one number in [0, 1]:

    eta_f = ( sum_i  Qbar_i * (1 - gamma_1i) * integral_i Q dgamma )^(1/4)

with Qbar_i the mean value over interval i, gamma_1i its onset, and the
integral running over the interval.  A measure pinned at 1 on the whole
range gives eta_f = 1; no intervals give 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .channels import ChannelKind, apply_local_channel, evolve_correlators
from .correlations import discord_full, discord_multipartite, work_deficit_full
from .freezing import FreezingReport
from .states import CorrelatorState, DensityMatrix, DiagonalState, _as_matrix

__all__ = [
    "Trajectory",
    "FreezingInterval",
    "default_gamma_grid",
    "sample_trajectory",
    "detect_intervals",
    "freezing_index",
    "exact_index",
]

_trapz = getattr(np, "trapezoid", None) or np.trapz


@dataclass(frozen=True)
class Trajectory:
    """Measure samples along an ascending gamma grid."""

    gammas: np.ndarray
    values: np.ndarray
    measure: str = "qd"
    label: str = ""

    def __post_init__(self) -> None:
        g = np.asarray(self.gammas, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if g.ndim != 1 or g.shape != v.shape:
            raise ValueError("gammas and values must be 1-d arrays of equal length")
        if g.size == 0:
            raise ValueError("empty trajectory")
        if np.any(np.diff(g) <= 0.0):
            raise ValueError("gamma grid must be strictly ascending")
        if g[0] < -1e-12 or g[-1] > 1.0 + 1e-12:
            raise ValueError("gamma grid must lie in [0, 1]")
        if v.min() < -1e-9:
            raise ValueError(f"negative measure value {v.min():.3e}")
        object.__setattr__(self, "gammas", g)
        object.__setattr__(self, "values", np.clip(v, 0.0, None))

    def __len__(self) -> int:
        return self.gammas.size


@dataclass(frozen=True)
class FreezingInterval:
    """Maximal stretch where the measure stays within delta of its onset value."""

    gamma1: float
    gamma2: float
    mean_value: float
    start_index: int = field(default=0, compare=False)
    stop_index: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if not self.gamma1 < self.gamma2:
            raise ValueError("interval needs gamma1 < gamma2")

    @property
    def width(self) -> float:
        return self.gamma2 - self.gamma1


def default_gamma_grid(step: float = 1e-3) -> np.ndarray:
    """Uniform grid over [0, 1] with the given step."""
    if not 0.0 < step <= 0.5:
        raise ValueError(f"step={step} outside (0, 0.5]")
    return np.linspace(0.0, 1.0, int(round(1.0 / step)) + 1)


def sample_trajectory(
    state: "CorrelatorState | DiagonalState | DensityMatrix | np.ndarray",
    channel: "ChannelKind | str" = ChannelKind.BIT_FLIP,
    measure: str = "qd",
    gamma_grid: "Sequence[float] | np.ndarray | None" = None,
    method: str = "hybrid",
    grid_shape: "tuple[int, int] | None" = None,
    label: str = "",
) -> Trajectory:
    """Evaluate a correlation measure along a noise-strength grid.

    Correlator states evolve through the closed-form correlator map;
    diagonal multiqubit states use the closed-form multipartite discord;
    anything else goes through the Kraus channel on every qubit and the
    optimizing measure routines.
    """
    if measure not in ("qd", "qwd"):
        raise ValueError(f"unknown measure {measure!r}")
    kind = ChannelKind.parse(channel)
    grid = default_gamma_grid() if gamma_grid is None else np.asarray(gamma_grid, float)

    if isinstance(state, DiagonalState):
        if measure != "qd":
            raise ValueError("diagonal multiqubit states support the discord measure only")
        values = [discord_multipartite(state, g, kind) for g in grid]
        return Trajectory(grid, np.array(values), measure, label)

    optimize = discord_full if measure == "qd" else work_deficit_full

    def evaluate(obj) -> float:
        return optimize(obj, method=method, grid_shape=grid_shape).value

    values = np.empty(grid.size)
    if isinstance(state, CorrelatorState):
        for i, g in enumerate(grid):
            values[i] = evaluate(evolve_correlators(state, kind, float(g)))
    else:
        mat = _as_matrix(state)
        for i, g in enumerate(grid):
            values[i] = evaluate(apply_local_channel(mat, kind, float(g)))
    return Trajectory(grid, values, measure, label)


def detect_intervals(
    traj: Trajectory, delta: float = 0.01, min_width: float = 0.02
) -> list[FreezingInterval]:
    """Greedy left-to-right detection of effective-freezing intervals.

    Each interval is anchored at its first sample: it extends while
    |Q(gamma) - Q(gamma1)| <= delta (inclusive comparison), so a drift of
    exactly delta still belongs to the running interval.  Scanning
    resumes after the interval, making the result non-overlapping.
    Intervals narrower than min_width are dropped.
    """
    if delta <= 0.0:
        raise ValueError(f"delta={delta} must be positive")
    g = traj.gammas
    v = traj.values
    n = g.size
    out: list[FreezingInterval] = []
    i = 0
    while i < n:
        anchor = v[i]
        j = i
        while j + 1 < n and abs(v[j + 1] - anchor) <= delta:
            j += 1
        width = g[j] - g[i]
        if j > i and width >= min_width:
            mean = float(_trapz(v[i : j + 1], g[i : j + 1])) / width
            out.append(FreezingInterval(float(g[i]), float(g[j]), mean, i, j))
        i = j + 1
    return out


def freezing_index(
    traj: Trajectory, delta: float = 0.01, min_width: float = 0.02
) -> float:
    """Fourth root of the summed interval weights (module docstring)."""
    intervals = detect_intervals(traj, delta, min_width)
    total = 0.0
    for it in intervals:
        integral = float(
            _trapz(
                traj.values[it.start_index : it.stop_index + 1],
                traj.gammas[it.start_index : it.stop_index + 1],
            )
        )
        total += it.mean_value * (1.0 - it.gamma1) * integral
    return total**0.25 if total > 0.0 else 0.0


def exact_index(
    reports: "FreezingReport | tuple | Iterable[FreezingReport | tuple]",
) -> float:
    """Freezing index of exactly frozen intervals.

    Accepts freezing reports (interval [0, gamma_f] at the frozen value)
    or explicit (value, gamma1, gamma2) triples, or any iterable mix.
    On an exact interval the measure is constant, so the integral term
    is value * width with no quadrature involved.
    """
    if isinstance(reports, FreezingReport) or (
        isinstance(reports, tuple)
        and len(reports) == 3
        and not isinstance(reports[0], (FreezingReport, tuple))
    ):
        reports = [reports]
    total = 0.0
    for item in reports:
        if isinstance(item, FreezingReport):
            if not item.satisfied:
                continue
            value, g1, g2 = item.frozen_value, 0.0, item.gamma_f
        else:
            value, g1, g2 = item
        if g2 <= g1:
            continue
        total += value * (1.0 - g1) * value * (g2 - g1)
    return total**0.25 if total > 0.0 else 0.0
