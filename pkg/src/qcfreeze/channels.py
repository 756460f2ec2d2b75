"""Local flip channels in Kraus form and their closed-form correlator action.

Each channel applies, independently on every qubit,

    rho -> (1 - gamma/2) rho + (gamma/2) s_i rho s_i

where s_i is the Pauli matrix of the flip axis (x for bit flip, y for
bit-phase flip, z for phase flip) and gamma in [0, 1] plays the role of a
parametrized time.  A Markovian exponential ramp gamma(t) = 1 - exp(-G t)
is provided for callers that think in real time.

On the correlator families the action is diagonal: Pauli components along
the flip axis are left alone, every other component picks up one factor of
(1 - gamma) per affected qubit.  Both the exact matrix route and the
closed-form route are implemented; they are checked against each other in
the tests.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from .states import (
    PAULI,
    CorrelatorState,
    DensityMatrix,
    DiagonalState,
    _as_matrix,
)

__all__ = [
    "ChannelKind",
    "kraus_pair",
    "apply_local_channel",
    "evolve_correlators",
    "evolve_diagonal",
    "gamma_from_time",
    "relabel_for_channel",
]


class ChannelKind(Enum):
    """Flip channel selector; the value is the preserved Pauli axis."""

    BIT_FLIP = 1
    BIT_PHASE_FLIP = 2
    PHASE_FLIP = 3

    @classmethod
    def parse(cls, label: "str | ChannelKind") -> "ChannelKind":
        if isinstance(label, cls):
            return label
        key = str(label).strip().lower().replace("-", "_")
        table = {
            "bf": cls.BIT_FLIP,
            "bit_flip": cls.BIT_FLIP,
            "bitflip": cls.BIT_FLIP,
            "bpf": cls.BIT_PHASE_FLIP,
            "bit_phase_flip": cls.BIT_PHASE_FLIP,
            "bitphaseflip": cls.BIT_PHASE_FLIP,
            "pf": cls.PHASE_FLIP,
            "phase_flip": cls.PHASE_FLIP,
            "phaseflip": cls.PHASE_FLIP,
        }
        if key not in table:
            raise ValueError(f"unknown channel kind {label!r}")
        return table[key]

    @property
    def axis(self) -> int:
        """Pauli index (1, 2, 3) preserved by the channel."""
        return self.value


def _check_gamma(gamma: float) -> float:
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"channel strength gamma={gamma} outside [0, 1]")
    return float(gamma)


def kraus_pair(kind: "ChannelKind | str", gamma: float) -> tuple[np.ndarray, np.ndarray]:
    """Kraus operators (sqrt(1-gamma/2) I, sqrt(gamma/2) s_i)."""
    kind = ChannelKind.parse(kind)
    gamma = _check_gamma(gamma)
    k0 = math.sqrt(1.0 - 0.5 * gamma) * PAULI[0]
    k1 = math.sqrt(0.5 * gamma) * PAULI[kind.axis]
    return k0, k1


def _apply_one_qubit(mat: np.ndarray, op: np.ndarray, qubit: int, n: int) -> np.ndarray:
    """op rho op with op acting on one qubit of an n-qubit matrix."""
    t = mat.reshape((2,) * (2 * n))
    t = np.tensordot(op, t, axes=([1], [qubit]))
    t = np.moveaxis(t, 0, qubit)
    t = np.tensordot(t, op, axes=([n + qubit], [0]))
    t = np.moveaxis(t, -1, n + qubit)
    return t.reshape(mat.shape)


def apply_local_channel(
    rho: "DensityMatrix | np.ndarray",
    kind: "ChannelKind | str",
    gamma: float,
    qubits: "list[int] | None" = None,
) -> DensityMatrix:
    """Apply the flip channel qubit by qubit (sequentially).

    The per-qubit maps commute, so the order does not matter; sequential
    application keeps the memory footprint at one matrix.
    """
    kind = ChannelKind.parse(kind)
    gamma = _check_gamma(gamma)
    mat = _as_matrix(rho).copy()
    n = int(round(math.log2(mat.shape[0])))
    targets = list(range(n)) if qubits is None else list(qubits)
    for q in targets:
        if q < 0 or q >= n:
            raise ValueError(f"qubit index {q} outside 0..{n - 1}")
        flipped = _apply_one_qubit(mat, PAULI[kind.axis], q, n)
        mat = (1.0 - 0.5 * gamma) * mat + 0.5 * gamma * flipped
    return DensityMatrix(mat)


def evolve_correlators(
    s: CorrelatorState, kind: "ChannelKind | str", gamma: float
) -> CorrelatorState:
    """Closed-form two-qubit evolution: transverse components decay.

    Components along the flip axis are invariant; transverse two-point
    correlators scale by (1-gamma)^2 and transverse magnetizations by
    (1-gamma).
    """
    kind = ChannelKind.parse(kind)
    gamma = _check_gamma(gamma)
    k1 = 1.0 - gamma
    k2 = k1 * k1

    def dscale(axis: int) -> float:
        return 1.0 if axis == kind.axis else k2

    def mscale(axis: int) -> float:
        return 1.0 if axis == kind.axis else k1

    return CorrelatorState(
        c11=s.c11 * dscale(1),
        c22=s.c22 * dscale(2),
        c33=s.c33 * dscale(3),
        c10=s.c10 * mscale(1),
        c01=s.c01 * mscale(1),
        c20=s.c20 * mscale(2),
        c02=s.c02 * mscale(2),
        c30=s.c30 * mscale(3),
        c03=s.c03 * mscale(3),
    )


def evolve_diagonal(
    d: DiagonalState, kind: "ChannelKind | str", gamma: float
) -> DiagonalState:
    """Closed-form diagonal-state evolution.

    The Pauli string along the flip axis is invariant; the two transverse
    strings scale by (1-gamma)^(2n), one factor per qubit.
    """
    kind = ChannelKind.parse(kind)
    gamma = _check_gamma(gamma)
    q = (1.0 - gamma) ** d.n_qubits
    coeff = {1: d.c1, 2: d.c2, 3: d.c3}
    scaled = {a: (c if a == kind.axis else c * q) for a, c in coeff.items()}
    return DiagonalState(n_pairs=d.n_pairs, c1=scaled[1], c2=scaled[2], c3=scaled[3])


def gamma_from_time(rate: float, t: float) -> float:
    """Markovian ramp gamma = 1 - exp(-rate * t)."""
    if rate < 0.0:
        raise ValueError(f"decay rate must be non-negative, got {rate}")
    if t < 0.0:
        raise ValueError(f"time must be non-negative, got {t}")
    return 1.0 - math.exp(-rate * t)


_RELABEL = {
    ChannelKind.BIT_FLIP: (1, 2, 3),
    ChannelKind.BIT_PHASE_FLIP: (2, 1, 3),
    ChannelKind.PHASE_FLIP: (3, 2, 1),
}


def relabel_for_channel(s: CorrelatorState, kind: "ChannelKind | str") -> CorrelatorState:
    """Swap Pauli axes so the given channel looks like a bit flip.

    The flip axis of ``kind`` is exchanged with the x axis.  Evolving the
    relabelled state under the bit flip and relabelling back is identical
    to evolving the original state under ``kind``; this is how the
    bit-flip-only freezing checkers are reused for the other two channels.
    The swap is an involution, so the same function relabels back.
    """
    kind = ChannelKind.parse(kind)
    perm = _RELABEL[kind]
    diag = {1: s.c11, 2: s.c22, 3: s.c33}
    mag_a = {1: s.c10, 2: s.c20, 3: s.c30}
    mag_b = {1: s.c01, 2: s.c02, 3: s.c03}
    new_diag = {axis: diag[perm[axis - 1]] for axis in (1, 2, 3)}
    new_a = {axis: mag_a[perm[axis - 1]] for axis in (1, 2, 3)}
    new_b = {axis: mag_b[perm[axis - 1]] for axis in (1, 2, 3)}
    return CorrelatorState(
        c11=new_diag[1],
        c22=new_diag[2],
        c33=new_diag[3],
        c10=new_a[1],
        c01=new_b[1],
        c20=new_a[2],
        c02=new_b[2],
        c30=new_a[3],
        c03=new_b[3],
    )
