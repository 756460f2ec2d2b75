"""Exact-freezing conditions, terminal solvers, and derived scans.

A canonical two-qubit state (diagonal correlators plus magnetizations
along the flip axis) evolving under independent local bit flips has a
discord or work-deficit trajectory that either departs from its initial
value immediately or stays exactly constant up to a terminal noise
strength gamma_f.  This module decides which, computes the frozen value
and the terminal, and provides the derived scans: the complementarity
audit of frozen value plus terminal, the freezing phase diagram over the
transverse-correlator / magnetization plane, and a non-convexity witness
for the set of freezing states.

All checkers work in the bit-flip frame, where the flip axis is x and
the state reads (c11, c22, c33, c10, c01).  For phase or bit-phase
flips, relabel the state first with ``channels.relabel_for_channel``;
the conditions are identical after the flip axis is swapped into the x
slot.

With F(y) = 2(h2((1+y)/2) - 1) the condition sets are, per measure and
branch (the branch names which transverse correlator stays free; the
other is locked to the product with the flip-axis correlator):

* discord, branch "zz" (c33 free, c22 locked):
    (i)   c22 = -c11 c33  and  c10 = c11 c01
    (ii)  c33^2 + c01^2 <= 1
    (iii) F(sqrt(c33^2 + c01^2)) <= F(c11) + F(c01) - F(c10)
  frozen value (F(c10) - F(c11))/2, terminal gamma_f solving
    F(sqrt(c01^2 + c33^2 (1-gamma)^4)) = F(c11) + F(c01) - F(c10).
* discord, branch "yy": c22 and c33 exchanged throughout.
* work deficit: same clauses (i) and (ii); clause (iii) and the
  terminal equation lose the -F(c10) term on the right-hand side, and
  the frozen value is -F(c11)/2.

Clause (i) is evaluated in cross-multiplied form (no magnetization
ratios), so it is vacuously true for states with zero magnetizations.

For diagonal 2n-qubit states (three full-length correlators c1, c2, c3
under bit flips on every qubit) the analogue reads: branch "zz" locks
c2 = (-1)^n c1 c3 and needs |c3| > |c1|; the discord between the first
qubit and the rest then freezes at -F(c1)/2 until
gamma_f = 1 - (|c1|/|c3|)^(1/2n).  Branch "yy" exchanges c2 and c3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .channels import ChannelKind
from .states import (
    CorrelatorState,
    DiagonalState,
    _f_abs,
    canonical_state,
)

__all__ = [
    "FreezingReport",
    "ComplementarityAudit",
    "PhaseDiagram",
    "NonconvexityWitness",
    "CLAUSE_TOL",
    "check_ns_discord",
    "check_ns_workdeficit",
    "check_ns_multipartite",
    "freezing_terminal",
    "sample_freezing_states",
    "complementarity_audit",
    "phase_diagram",
    "nonconvexity_witness",
]

#: equality tolerance for the cross-multiplied clause (i)
CLAUSE_TOL = 1e-9

#: bisection iterations; 2^-48 is well below the 1e-10 terminal tolerance
_BISECT_ITERS = 48

_STATUS_NONPHYSICAL = "nonphysical"
_STATUS_NOFREEZE = "nofreeze"
_STATUS_FREEZE = "freeze"


@dataclass(frozen=True)
class FreezingReport:
    """Outcome of an exact-freezing check.

    ``clauses`` maps "i", "ii", "iii" (as listed in the module docstring)
    to their truth values for the reported branch.  ``branch`` is "zz" or
    "yy" depending on which transverse correlator is free; when no branch
    passes clause (i) the structurally closer one is reported.
    """

    measure: str
    satisfied: bool
    branch: "str | None"
    frozen_value: "float | None"
    gamma_f: "float | None"
    clauses: dict[str, bool]
    diagnostics: tuple[str, ...] = ()


def _f_arr(y: np.ndarray) -> np.ndarray:
    """Vectorized F(|y|) = 2(h2((1+|y|)/2) - 1)."""
    y = np.clip(np.abs(y), 0.0, 1.0)
    p = 0.5 * (1.0 + y)
    q = 0.5 * (1.0 - y)
    with np.errstate(divide="ignore", invalid="ignore"):
        ent = -(
            np.where(p > 0.0, p * np.log2(np.where(p > 0.0, p, 1.0)), 0.0)
            + np.where(q > 0.0, q * np.log2(np.where(q > 0.0, q, 1.0)), 0.0)
        )
    return 2.0 * (ent - 1.0)


def _terminal_root_arr(c_free: np.ndarray, c01: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Roots of F(sqrt(c01^2 + c_free^2 (1-g)^4)) = rhs, elementwise.

    The left side increases monotonically with g (the decaying term only
    shrinks the argument of F), so bisection on [0, 1] is safe.  Entries
    whose equation has no root in (0, 1] (left side stays below rhs
    everywhere) come back as exactly 1.0.
    """
    c_free = np.asarray(c_free, dtype=float)
    c01, rhs = np.broadcast_arrays(
        np.asarray(c01, dtype=float), np.asarray(rhs, dtype=float)
    )
    c_free = np.broadcast_to(c_free, c01.shape)

    def lhs(g: np.ndarray) -> np.ndarray:
        return _f_arr(np.sqrt(c01**2 + c_free**2 * (1.0 - g) ** 4))

    lo = np.zeros_like(c01)
    hi = np.ones_like(c01)
    no_root = lhs(hi) < rhs
    for _ in range(_BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        below = lhs(mid) <= rhs  # still frozen at mid
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    root = 0.5 * (lo + hi)
    return np.where(no_root, 1.0, root)


def _terminal_root(c_free: float, c01: float, rhs: float) -> tuple[float, bool]:
    """Scalar terminal root; second element flags the no-root case."""
    arr = _terminal_root_arr(np.array([c_free]), np.array([c01]), np.array([rhs]))
    g = float(arr[0])
    no_root = _f_abs(c01) < rhs  # limit of the left side at g = 1
    return g, bool(no_root)


def _branch_views(s: CorrelatorState) -> Iterator[tuple[str, float, float]]:
    """(branch name, free transverse correlator, locked one)."""
    yield "zz", s.c33, s.c22
    yield "yy", s.c22, s.c33


def _check_canonical(s: CorrelatorState, measure: str) -> FreezingReport:
    diagnostics: list[str] = []
    if not s.is_canonical:
        return FreezingReport(
            measure=measure,
            satisfied=False,
            branch=None,
            frozen_value=None,
            gamma_f=None,
            clauses={"i": False, "ii": False, "iii": False},
            diagnostics=(
                "state has magnetization components transverse to the flip axis; "
                "the exact-freezing conditions only cover the canonical family",
            ),
        )
    if s.c01 == 0.0 and s.c10 != 0.0:
        diagnostics.append(
            "magnetization ratio c10/c01 undefined (c01 = 0 with c10 != 0); "
            "clause (i) cannot hold"
        )

    f_c11 = _f_abs(s.c11)
    f_c10 = _f_abs(s.c10)
    f_c01 = _f_abs(s.c01)
    rhs = f_c11 + f_c01 - (f_c10 if measure == "qd" else 0.0)

    branch_clauses: dict[str, dict[str, bool]] = {}
    candidates: list[tuple[str, float]] = []
    for name, c_free, c_locked in _branch_views(s):
        clause_i = bool(
            abs(c_locked + s.c11 * c_free) <= CLAUSE_TOL
            and abs(s.c10 - s.c11 * s.c01) <= CLAUSE_TOL
        )
        radius2 = c_free**2 + s.c01**2
        clause_ii = bool(radius2 <= 1.0 + 1e-12)
        clause_iii = bool(_f_abs(math.sqrt(min(radius2, 1.0))) <= rhs)
        branch_clauses[name] = {"i": clause_i, "ii": clause_ii, "iii": clause_iii}
        if clause_i and clause_ii and clause_iii:
            candidates.append((name, c_free))

    frozen = 0.5 * (f_c10 - f_c11) if measure == "qd" else -0.5 * f_c11

    best: "tuple[str, float] | None" = None
    for name, c_free in candidates:
        gamma_f, no_root = _terminal_root(c_free, s.c01, rhs)
        if no_root:
            diagnostics.append(
                f"branch {name}: terminal equation has no root in (0, 1]; "
                "the state stays frozen over the whole noise range"
            )
        if best is None or gamma_f > best[1]:
            best = (name, gamma_f)

    if best is not None and best[1] > 1e-12:
        return FreezingReport(
            measure=measure,
            satisfied=True,
            branch=best[0],
            frozen_value=frozen,
            gamma_f=best[1],
            clauses=branch_clauses[best[0]],
            diagnostics=tuple(diagnostics),
        )

    if best is not None:
        diagnostics.append("terminal at gamma = 0: the frozen interval is empty")
    name = next((n for n in ("zz", "yy") if branch_clauses[n]["i"]), "zz")
    return FreezingReport(
        measure=measure,
        satisfied=False,
        branch=name,
        frozen_value=None,
        gamma_f=None,
        clauses=branch_clauses[name],
        diagnostics=tuple(diagnostics),
    )


def check_ns_discord(s: CorrelatorState) -> FreezingReport:
    """Necessary-and-sufficient exact-freezing check for discord.

    Bit-flip frame assumed; see the module docstring for the clauses and
    for handling of the other flip channels.
    """
    return _check_canonical(s, "qd")


def check_ns_workdeficit(s: CorrelatorState) -> FreezingReport:
    """Necessary-and-sufficient exact-freezing check for the work deficit."""
    return _check_canonical(s, "qwd")


def check_ns_multipartite(d: DiagonalState) -> FreezingReport:
    """Exact-freezing check for diagonal 2n-qubit states under bit flips.

    Freezing of the discord between the first qubit and the rest: one
    transverse full-length correlator must dominate the bit-flip one and
    the other must equal their parity-signed product (module docstring).
    """
    parity = -1.0 if d.n_pairs % 2 else 1.0
    diagnostics: list[str] = []
    if d.c2 == 0.0 and d.c3 == 0.0:
        diagnostics.append("both transverse correlators vanish; nothing decays")

    candidates: list[tuple[str, dict[str, bool], float]] = []
    fallback: "tuple[str, dict[str, bool]] | None" = None
    for name, c_free, c_locked in (("zz", d.c3, d.c2), ("yy", d.c2, d.c3)):
        clause_i = abs(c_locked - parity * d.c1 * c_free) <= CLAUSE_TOL
        clause_ii = abs(c_free) <= 1.0 + 1e-12
        clause_iii = abs(c_free) > abs(d.c1)
        clauses = {"i": clause_i, "ii": clause_ii, "iii": clause_iii}
        if clause_i and fallback is None:
            fallback = (name, clauses)
        if clause_i and clause_ii and clause_iii:
            candidates.append((name, clauses, c_free))

    if candidates:
        name, clauses, c_free = max(candidates, key=lambda t: abs(t[2]))
        gamma_f = 1.0 - (abs(d.c1) / abs(c_free)) ** (1.0 / d.n_qubits)
        return FreezingReport(
            measure="qd",
            satisfied=True,
            branch=name,
            frozen_value=-0.5 * _f_abs(d.c1),
            gamma_f=gamma_f,
            clauses=clauses,
            diagnostics=tuple(diagnostics),
        )

    name, clauses = fallback if fallback is not None else (
        "zz",
        {
            "i": False,
            "ii": abs(d.c3) <= 1.0 + 1e-12,
            "iii": abs(d.c3) > abs(d.c1),
        },
    )
    return FreezingReport(
        measure="qd",
        satisfied=False,
        branch=name,
        frozen_value=None,
        gamma_f=None,
        clauses=clauses,
        diagnostics=tuple(diagnostics),
    )


def freezing_terminal(
    state: "CorrelatorState | DiagonalState", measure: str = "qd"
) -> float:
    """Terminal noise strength of the exact-freezing interval.

    Raises ValueError when the state does not pass the corresponding
    freezing check (there is no frozen interval to terminate).
    """
    if measure not in ("qd", "qwd"):
        raise ValueError(f"unknown measure {measure!r}")
    if isinstance(state, DiagonalState):
        if measure != "qd":
            raise ValueError("diagonal multiqubit freezing is defined for discord only")
        report = check_ns_multipartite(state)
    elif measure == "qd":
        report = check_ns_discord(state)
    else:
        report = check_ns_workdeficit(state)
    if not report.satisfied or report.gamma_f is None:
        raise ValueError(
            f"state does not satisfy the exact-freezing conditions for {measure}: "
            + "; ".join(report.diagnostics or ("clause check failed",))
        )
    return report.gamma_f


# ---------------------------------------------------------------------------
# sampling and audits


def _sample_arrays(
    rng: np.random.Generator, count: int, measure: str
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized rejection sampler for branch-"zz" freezing states.

    Returns (c11, c33, c01) arrays; c22 and c10 follow from clause (i).
    Under clause (i) the canonical-state positivity conditions reduce to
    c33^2 + c01^2 <= 1, so clause (ii) is exactly the physical boundary.
    """
    out11 = np.empty(0)
    out33 = np.empty(0)
    out01 = np.empty(0)
    while out11.size < count:
        m = max(4096, 4 * (count - out11.size))
        c11 = rng.uniform(-1.0, 1.0, m)
        c33 = rng.uniform(-1.0, 1.0, m)
        c01 = rng.uniform(-1.0, 1.0, m)
        radius2 = c33**2 + c01**2
        keep = radius2 <= 1.0
        c10 = c11 * c01
        rhs = _f_arr(c11) + _f_arr(c01)
        if measure == "qd":
            rhs = rhs - _f_arr(c10)
        # strict inequality keeps the terminal away from zero
        keep &= _f_arr(np.sqrt(np.clip(radius2, 0.0, 1.0))) < rhs
        out11 = np.concatenate([out11, c11[keep]])
        out33 = np.concatenate([out33, c33[keep]])
        out01 = np.concatenate([out01, c01[keep]])
    return out11[:count], out33[:count], out01[:count]


def sample_freezing_states(
    count: int, seed: "int | np.random.Generator" = 0, measure: str = "qd"
) -> list[CorrelatorState]:
    """Random canonical states passing the exact-freezing check."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    c11, c33, c01 = _sample_arrays(rng, count, measure)
    return [
        canonical_state(a, -a * c, c, a * b, b)
        for a, c, b in zip(c11.tolist(), c33.tolist(), c01.tolist())
    ]


@dataclass(frozen=True)
class ComplementarityAudit:
    """Extremal frozen-value-plus-terminal sum over sampled freezing states."""

    measure: str
    count: int
    max_sum: float
    argmax_state: CorrelatorState
    argmax_frozen: float
    argmax_gamma_f: float


def complementarity_audit(
    count: int = 10_000,
    seed: "int | np.random.Generator" = 0,
    measure: str = "qd",
) -> ComplementarityAudit:
    """Audit the bound frozen value + terminal <= 1 over random freezing states.

    The sum approaches 1 only near c11 -> 0 (vanishing frozen value,
    terminal -> 1) and |c11| = |c33| = 1 (unit frozen value, terminal 0).
    """
    if measure not in ("qd", "qwd"):
        raise ValueError(f"unknown measure {measure!r}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    c11, c33, c01 = _sample_arrays(rng, count, measure)
    c10 = c11 * c01
    rhs = _f_arr(c11) + _f_arr(c01)
    if measure == "qd":
        rhs = rhs - _f_arr(c10)
        frozen = 0.5 * (_f_arr(c10) - _f_arr(c11))
    else:
        frozen = -0.5 * _f_arr(c11)
    gamma_f = _terminal_root_arr(c33, c01, rhs)
    sums = frozen + gamma_f
    i = int(np.argmax(sums))
    return ComplementarityAudit(
        measure=measure,
        count=count,
        max_sum=float(sums[i]),
        argmax_state=canonical_state(
            float(c11[i]),
            float(-c11[i] * c33[i]),
            float(c33[i]),
            float(c10[i]),
            float(c01[i]),
        ),
        argmax_frozen=float(frozen[i]),
        argmax_gamma_f=float(gamma_f[i]),
    )


# ---------------------------------------------------------------------------
# phase diagram


@dataclass(frozen=True)
class PhaseDiagram:
    """Freezing status over the (free transverse correlator, magnetization) plane.

    The grid is built with clause (i) imposed: the locked correlator and
    the measured-qubit magnetization are derived from (c11, c33, c01).
    Arrays are flat, c33-major.  ``status`` holds "nonphysical",
    "nofreeze", or "freeze"; ``gamma_f`` and ``frozen_value`` are NaN
    outside freezing points.  For phase or bit-phase flip channels the
    axes refer to the relabeled frame (flip axis in the x slot).
    """

    c11: float
    measure: str
    channel: ChannelKind
    grid_step: float
    c33: np.ndarray
    c01: np.ndarray
    status: np.ndarray
    gamma_f: np.ndarray
    frozen_value: np.ndarray

    def __len__(self) -> int:
        return self.c33.size

    def rows(self) -> Iterator[tuple[float, float, str, float, float]]:
        for i in range(self.c33.size):
            yield (
                float(self.c33[i]),
                float(self.c01[i]),
                str(self.status[i]),
                float(self.gamma_f[i]),
                float(self.frozen_value[i]),
            )

    def freezing_fraction(self) -> float:
        return float(np.mean(self.status == _STATUS_FREEZE))


def phase_diagram(
    c11: float,
    grid_step: float = 0.005,
    measure: str = "qd",
    channel: "ChannelKind | str" = ChannelKind.BIT_FLIP,
) -> PhaseDiagram:
    """Scan the freezing condition over the transverse plane at fixed c11.

    Every grid point is completed to a canonical state via clause (i);
    physicality then reduces to the unit disk c33^2 + c01^2 <= 1, and
    clause (iii) carves the freezing region out of it.
    """
    if measure not in ("qd", "qwd"):
        raise ValueError(f"unknown measure {measure!r}")
    if not -1.0 <= c11 <= 1.0:
        raise ValueError(f"c11={c11} outside [-1, 1]")
    if grid_step <= 0.0 or grid_step > 1.0:
        raise ValueError(f"grid_step={grid_step} outside (0, 1]")
    kind = ChannelKind.parse(channel)

    n = int(round(2.0 / grid_step)) + 1
    axis = np.linspace(-1.0, 1.0, n)
    c33, c01 = [a.ravel() for a in np.meshgrid(axis, axis, indexing="ij")]

    radius2 = c33**2 + c01**2
    physical = radius2 <= 1.0 + 1e-12
    c10 = c11 * c01
    rhs = _f_abs(c11) + _f_arr(c01)
    if measure == "qd":
        rhs = rhs - _f_arr(c10)
    # strict (iii): boundary points have an empty frozen interval
    freezing = physical & (_f_arr(np.sqrt(np.clip(radius2, 0.0, 1.0))) < rhs)

    status = np.where(
        physical,
        np.where(freezing, _STATUS_FREEZE, _STATUS_NOFREEZE),
        _STATUS_NONPHYSICAL,
    )
    gamma_f = np.full(c33.shape, np.nan)
    frozen_value = np.full(c33.shape, np.nan)
    if freezing.any():
        gamma_f[freezing] = _terminal_root_arr(c33[freezing], c01[freezing], rhs[freezing])
        if measure == "qd":
            frozen_value[freezing] = 0.5 * (_f_arr(c10[freezing]) - _f_abs(c11))
        else:
            frozen_value[freezing] = -0.5 * _f_abs(c11)
    return PhaseDiagram(
        c11=c11,
        measure=measure,
        channel=kind,
        grid_step=grid_step,
        c33=c33,
        c01=c01,
        status=status,
        gamma_f=gamma_f,
        frozen_value=frozen_value,
    )


# ---------------------------------------------------------------------------
# non-convexity


@dataclass(frozen=True)
class NonconvexityWitness:
    """Two freezing states whose even mixture leaves the freezing set."""

    state_a: CorrelatorState
    state_b: CorrelatorState
    weight: float
    mixture: CorrelatorState
    violated_clause: str
    residual: float


def _mix(a: CorrelatorState, b: CorrelatorState, p: float) -> CorrelatorState:
    return CorrelatorState(
        c11=p * a.c11 + (1 - p) * b.c11,
        c22=p * a.c22 + (1 - p) * b.c22,
        c33=p * a.c33 + (1 - p) * b.c33,
        c10=p * a.c10 + (1 - p) * b.c10,
        c01=p * a.c01 + (1 - p) * b.c01,
    )


def nonconvexity_witness(
    seed: int = 0, measure: str = "qd", min_residual: float = 1e-3
) -> NonconvexityWitness:
    """Find two freezing states whose equal-weight mixture fails clause (i).

    Mixing is linear in the correlators while clause (i) is bilinear, so
    a generic pair works; the sampler is deterministic for a fixed seed.
    """
    rng = np.random.default_rng(seed)
    for _ in range(64):
        a, b = sample_freezing_states(2, rng, measure)
        mixed = _mix(a, b, 0.5)
        residual = max(
            abs(mixed.c22 + mixed.c11 * mixed.c33),
            abs(mixed.c10 - mixed.c11 * mixed.c01),
        )
        check = check_ns_discord if measure == "qd" else check_ns_workdeficit
        if residual > min_residual and not check(mixed).satisfied:
            return NonconvexityWitness(
                state_a=a,
                state_b=b,
                weight=0.5,
                mixture=mixed,
                violated_clause="i",
                residual=residual,
            )
    raise RuntimeError("no witness pair found; widen the search")
