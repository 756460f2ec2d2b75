"""Bipartite correlation measures with measurement on the first qubit.

Quantum discord is computed as

    D = S(rho_A) - S(rho_AB) + min_Pi sum_k p_k S(rho_B^k)

and the one-way quantum work deficit as

    W = min_Pi S(sum_k Pi_k rho Pi_k) - S(rho_AB)

with Pi ranging over rank-1 projective measurements on the first qubit.
Two optimization routes are provided and kept deliberately independent:

* ``regular``: the minimum over the three distinguished measurement
  directions z, y, x (sets s1, s2, s3), evaluated through closed-form
  correlator expressions.  Exact for the states whose optimum is regular,
  an upper bound otherwise.
* ``bruteforce``: a global scan of the measurement sphere through the
  matrix route (projected partial traces and eigenvalues) on a 64 x 128
  angle grid, refined with Nelder-Mead from the best five grid points.
  The three regular axes are always included in the scan, so the
  brute-force value never exceeds the regular one beyond roundoff.

``hybrid`` takes the minimum of the two routes and is the default for
trajectory work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import minimize

from .states import (
    EIG_FLOOR,
    CorrelatorState,
    DensityMatrix,
    DiagonalState,
    _as_matrix,
    binary_entropy,
    diagonal_spectrum,
    entropy,
    first_qubit_marginal,
    freezing_entropy,
    from_density,
    shannon_bits,
    spectrum_entropy,
    to_density,
    trace_out_first,
)
from .channels import ChannelKind, evolve_diagonal

__all__ = [
    "Projector",
    "MeasurementClass",
    "MeasureResult",
    "DeficitDiscordReport",
    "REGULAR_AXES",
    "measured_conditional_entropy",
    "dephased_entropy",
    "discord",
    "discord_full",
    "classical_correlation",
    "mutual_information",
    "work_deficit",
    "work_deficit_full",
    "discord_multipartite",
    "deficit_discord_relation",
    "regular_conditional_entropies",
]

_LOG2 = math.log(2.0)

#: margin below the best regular value before an optimum counts as irregular
IRREGULAR_GAP = 1e-6

# default brute-force scan resolution (theta x phi) and refinement starts
_GRID_SHAPE = (64, 128)
_REFINE_STARTS = 5
_NM_OPTIONS = {"fatol": 1e-10, "xatol": 1e-7, "maxfev": 400}


@dataclass(frozen=True)
class Projector:
    """Projective measurement direction on the Bloch sphere.

    The projector pair is built from the kets

        |f1> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
        |f2> = -e^{-i phi} sin(theta/2)|0> + cos(theta/2)|1>

    with theta in [0, pi] and phi in [0, 2 pi).
    """

    theta: float
    phi: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta <= math.pi + 1e-12:
            raise ValueError(f"theta={self.theta} outside [0, pi]")

    def axis(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)]
        )

    def kets(self) -> tuple[np.ndarray, np.ndarray]:
        c = math.cos(0.5 * self.theta)
        s = math.sin(0.5 * self.theta)
        ph = complex(math.cos(self.phi), math.sin(self.phi))
        f1 = np.array([c, ph * s], dtype=np.complex128)
        f2 = np.array([-s / ph, c], dtype=np.complex128)
        return f1, f2

    def matrices(self) -> tuple[np.ndarray, np.ndarray]:
        f1, f2 = self.kets()
        return np.outer(f1, f1.conj()), np.outer(f2, f2.conj())


#: the three regular measurement directions: s1 = z, s2 = y, s3 = x
REGULAR_AXES = {
    "s1": Projector(0.0, 0.0),
    "s2": Projector(0.5 * math.pi, 0.5 * math.pi),
    "s3": Projector(0.5 * math.pi, 0.0),
}


@dataclass(frozen=True)
class MeasurementClass:
    """Classification of the optimal measurement of one state."""

    kind: str  # "regular" or "irregular"
    regular_set: "str | None"  # which of s1, s2, s3 attains the regular minimum
    regular_value: float
    global_value: float

    @property
    def gap(self) -> float:
        """How far the global optimum lies below the best regular one."""
        return self.regular_value - self.global_value


@dataclass(frozen=True)
class MeasureResult:
    """Value of a minimized correlation measure plus the minimizer."""

    value: float
    theta: float
    phi: float
    method: str
    classification: "MeasurementClass | None" = None

    def axis(self) -> np.ndarray:
        return Projector(self.theta, self.phi).axis()


@dataclass(frozen=True)
class DeficitDiscordReport:
    """Relation between work deficit and discord through a common ensemble."""

    discord: float
    work_deficit: float
    discord_axis: tuple[float, float, float]
    deficit_axis: tuple[float, float, float]
    ensembles_coincide: bool
    probabilities: "tuple[float, float] | None"
    identity_gap: "float | None"
    holds: "bool | None"


# ---------------------------------------------------------------------------
# matrix-route machinery


def _axis_grid(shape: tuple[int, int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    thetas = np.linspace(0.0, math.pi, shape[0])
    phis = np.linspace(0.0, 2.0 * math.pi, shape[1], endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    st = np.sin(tt)
    axes = np.stack([st * np.cos(pp), st * np.sin(pp), np.cos(tt)], axis=-1)
    return axes.reshape(-1, 3), tt.reshape(-1), pp.reshape(-1)


_DEFAULT_GRID = _axis_grid(_GRID_SHAPE)


def _sigma_moments(mat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """rho_B and the three first-qubit Pauli moments of an n-qubit matrix.

    M_a = Tr_1[(sigma_a x I) rho]; the unnormalized post-measurement state
    of the unmeasured register for direction n is (rho_B + n . M) / 2.
    """
    half = mat.shape[0] // 2
    ul = mat[:half, :half]
    ur = mat[:half, half:]
    ll = mat[half:, :half]
    lr = mat[half:, half:]
    rho_b = ul + lr
    moments = np.stack([ll + ur, 1.0j * (ur - ll), ul - lr])
    return rho_b, moments


def _cond_entropy_axes(
    rho_b: np.ndarray, moments: np.ndarray, axes: np.ndarray
) -> np.ndarray:
    """Measured conditional entropy for a batch of measurement axes.

    Uses S = -sum l log l over unnormalized block eigenvalues plus
    sum_k p_k log p_k, avoiding per-block normalization.
    """
    d = rho_b.shape[0]
    out = np.empty(axes.shape[0])
    step = max(1, (1 << 21) // (d * d))
    for i0 in range(0, axes.shape[0], step):
        chunk = axes[i0 : i0 + step]
        proj = np.tensordot(chunk, moments, axes=([1], [0]))  # (g, d, d)
        blocks = np.stack(
            [0.5 * (rho_b[None] + proj), 0.5 * (rho_b[None] - proj)], axis=1
        )
        probs = np.trace(blocks, axis1=-2, axis2=-1).real
        if d == 2:
            # closed-form 2x2 eigenvalues; an order of magnitude faster
            # than batched eigvalsh on the scan grid
            tr = probs
            det = (
                blocks[..., 0, 0] * blocks[..., 1, 1]
                - blocks[..., 0, 1] * blocks[..., 1, 0]
            ).real
            disc = np.sqrt(np.clip(0.25 * tr * tr - det, 0.0, None))
            vals = np.stack([0.5 * tr + disc, 0.5 * tr - disc], axis=-1)
        else:
            vals = np.linalg.eigvalsh(blocks)  # (g, 2, d)
        vals = np.clip(vals, EIG_FLOOR, None)
        joint = -(vals * np.log(vals)).sum(axis=(-1, -2))
        p = np.clip(probs, EIG_FLOOR, None)
        out[i0 : i0 + step] = (joint + (p * np.log(p)).sum(axis=-1)) / _LOG2
    return out


def _scalar_cond_entropy_2q(
    rho_b: np.ndarray, moments: np.ndarray
) -> Callable[[float, float], float]:
    """Fast closure for the two-qubit conditional-entropy objective.

    Works on plain Python scalars; an order of magnitude faster than the
    ndarray route for single angles, which matters inside Nelder-Mead.
    """
    b00, b01 = complex(rho_b[0, 0]), complex(rho_b[0, 1])
    b10, b11 = complex(rho_b[1, 0]), complex(rho_b[1, 1])
    m = [
        (complex(mm[0, 0]), complex(mm[0, 1]), complex(mm[1, 0]), complex(mm[1, 1]))
        for mm in moments
    ]

    def objective(theta: float, phi: float) -> float:
        st = math.sin(theta)
        n1 = st * math.cos(phi)
        n2 = st * math.sin(phi)
        n3 = math.cos(theta)
        p00 = n1 * m[0][0] + n2 * m[1][0] + n3 * m[2][0]
        p01 = n1 * m[0][1] + n2 * m[1][1] + n3 * m[2][1]
        p10 = n1 * m[0][2] + n2 * m[1][2] + n3 * m[2][2]
        p11 = n1 * m[0][3] + n2 * m[1][3] + n3 * m[2][3]
        acc = 0.0
        plogp = 0.0
        for sign in (1.0, -1.0):
            a00 = 0.5 * (b00 + sign * p00)
            a01 = 0.5 * (b01 + sign * p01)
            a10 = 0.5 * (b10 + sign * p10)
            a11 = 0.5 * (b11 + sign * p11)
            tr = (a00 + a11).real
            if tr <= EIG_FLOOR:
                continue
            det = (a00 * a11 - a01 * a10).real
            disc = 0.25 * tr * tr - det
            root = math.sqrt(disc) if disc > 0.0 else 0.0
            for lam in (0.5 * tr + root, 0.5 * tr - root):
                if lam > EIG_FLOOR:
                    acc -= lam * math.log(lam)
            plogp += tr * math.log(tr)
        return (acc + plogp) / _LOG2

    return objective


def measured_conditional_entropy(
    rho: "DensityMatrix | np.ndarray | CorrelatorState", theta: float, phi: float
) -> float:
    """Average entropy of the unmeasured register after measuring qubit one.

    Matrix route: projected partial traces and eigenvalues.  Valid for any
    qubit count; the measurement always acts on the first qubit.
    """
    if isinstance(rho, CorrelatorState):
        rho = to_density(rho)
    mat = _as_matrix(rho)
    rho_b, moments = _sigma_moments(mat)
    if mat.shape[0] == 4:
        return _scalar_cond_entropy_2q(rho_b, moments)(theta, phi)
    axis = Projector(theta, phi).axis()
    return float(_cond_entropy_axes(rho_b, moments, axis[None, :])[0])


def _fold_angles(theta: float, phi: float) -> tuple[float, float]:
    """Map spherical angles onto theta in [0, pi], phi in [0, 2 pi)."""
    theta = theta % (2.0 * math.pi)
    if theta > math.pi:
        theta = 2.0 * math.pi - theta
        phi = phi + math.pi
    return theta, phi % (2.0 * math.pi)


def _minimize_with_refinement(
    grid_values: np.ndarray,
    grid_thetas: np.ndarray,
    grid_phis: np.ndarray,
    scalar: Callable[[float, float], float],
    refine_starts: int,
) -> tuple[float, float, float]:
    """Shared polish step: regular axes, best grid points, Nelder-Mead."""
    best_value = math.inf
    best_angles = (0.0, 0.0)
    for p in REGULAR_AXES.values():
        v = scalar(p.theta, p.phi)
        if v < best_value:
            best_value, best_angles = v, (p.theta, p.phi)
    order = np.argsort(grid_values)[:refine_starts]
    for idx in order:
        v = float(grid_values[idx])
        if v < best_value:
            best_value, best_angles = v, (float(grid_thetas[idx]), float(grid_phis[idx]))
    for idx in order:
        res = minimize(
            lambda x: scalar(x[0], x[1]),
            x0=np.array([grid_thetas[idx], grid_phis[idx]]),
            method="Nelder-Mead",
            options=_NM_OPTIONS,
        )
        if res.fun < best_value:
            best_value = float(res.fun)
            best_angles = _fold_angles(float(res.x[0]), float(res.x[1]))
    return best_value, best_angles[0], best_angles[1]


def _minimize_conditional_entropy(
    mat: np.ndarray,
    grid_shape: "tuple[int, int] | None" = None,
    refine_starts: int = _REFINE_STARTS,
) -> MeasureResult:
    """Global minimization of the measured conditional entropy."""
    rho_b, moments = _sigma_moments(mat)
    axes, thetas, phis = _DEFAULT_GRID if grid_shape is None else _axis_grid(grid_shape)
    values = _cond_entropy_axes(rho_b, moments, axes)

    if mat.shape[0] == 4:
        scalar = _scalar_cond_entropy_2q(rho_b, moments)
    else:

        def scalar(theta: float, phi: float) -> float:
            st = math.sin(theta)
            ax = np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)])
            return float(_cond_entropy_axes(rho_b, moments, ax[None, :])[0])

    value, theta, phi = _minimize_with_refinement(values, thetas, phis, scalar, refine_starts)
    return MeasureResult(value=value, theta=theta, phi=phi, method="bruteforce")


# ---------------------------------------------------------------------------
# closed-form regular route for correlator states


def _regular_conditional_entropy(s: CorrelatorState, axis: np.ndarray) -> float:
    """Closed-form conditional entropy for one measurement axis.

    With a, b the one-qubit magnetizations and T the diagonal correlation
    tensor, outcome probabilities are (1 +- n.a)/2 and the conditional
    Bloch vectors (b +- T n)/(1 +- n.a).
    """
    a = s.mag_a
    na = axis[0] * a[0] + axis[1] * a[1] + axis[2] * a[2]
    tn = (s.c11 * axis[0], s.c22 * axis[1], s.c33 * axis[2])
    b = s.mag_b
    total = 0.0
    for sign in (1.0, -1.0):
        p = 0.5 * (1.0 + sign * na)
        if p <= EIG_FLOOR:
            continue
        r = math.sqrt(
            (b[0] + sign * tn[0]) ** 2
            + (b[1] + sign * tn[1]) ** 2
            + (b[2] + sign * tn[2]) ** 2
        ) / (2.0 * p)
        r = min(r, 1.0)
        total += p * binary_entropy(0.5 * (1.0 + r))
    return total


def regular_conditional_entropies(s: CorrelatorState) -> dict[str, float]:
    """Conditional entropies of the three regular measurement sets."""
    return {
        name: _regular_conditional_entropy(s, p.axis())
        for name, p in REGULAR_AXES.items()
    }


def _entropy_ab(s: CorrelatorState) -> float:
    vals = np.linalg.eigvalsh(to_density(s).matrix)
    if vals[0] < -1e-12:
        raise ValueError(f"non-physical correlator state (min eigenvalue {vals[0]:.3e})")
    return spectrum_entropy(np.clip(vals, 0.0, None))


def _dephase_along(s: CorrelatorState, axis_index: int) -> CorrelatorState:
    """Average the state with its flip about one first-qubit axis.

    Kills every first-qubit Pauli component transverse to the axis; this
    is the post-measurement average of the regular set with that axis.
    """
    keep = {
        1: dict(c11=s.c11, c10=s.c10),
        2: dict(c22=s.c22, c20=s.c20),
        3: dict(c33=s.c33, c30=s.c30),
    }[axis_index]
    return CorrelatorState(c01=s.c01, c02=s.c02, c03=s.c03, **keep)


# ---------------------------------------------------------------------------
# public measures


def _coerce(
    state: "CorrelatorState | DensityMatrix | np.ndarray",
) -> tuple["CorrelatorState | None", np.ndarray]:
    if isinstance(state, CorrelatorState):
        return state, to_density(state).matrix
    mat = _as_matrix(state)
    corr = None
    if mat.shape[0] == 4:
        try:
            corr = from_density(mat)
        except ValueError:
            corr = None
    return corr, mat


def discord_full(
    state: "CorrelatorState | DensityMatrix | np.ndarray",
    method: str = "hybrid",
    grid_shape: "tuple[int, int] | None" = None,
    refine_starts: int = _REFINE_STARTS,
) -> MeasureResult:
    """Quantum discord with minimizer details and measurement class."""
    if method not in ("regular", "bruteforce", "hybrid"):
        raise ValueError(f"unknown method {method!r}")
    corr, mat = _coerce(state)
    s_a = entropy(first_qubit_marginal(mat))
    s_ab = entropy(mat)

    reg_value = math.inf
    reg_set = None
    if corr is not None:
        reg = regular_conditional_entropies(corr)
        reg_set = min(reg, key=reg.get)
        reg_value = reg[reg_set]

    if method == "regular":
        if corr is None:
            raise ValueError("regular method needs a representable two-qubit correlator state")
        p = REGULAR_AXES[reg_set]
        return MeasureResult(
            value=s_a - s_ab + reg_value,
            theta=p.theta,
            phi=p.phi,
            method="regular",
            classification=MeasurementClass("regular", reg_set, reg_value, reg_value),
        )

    bf = _minimize_conditional_entropy(mat, grid_shape, refine_starts)
    cond, theta, phi = bf.value, bf.theta, bf.phi
    if method == "hybrid" and reg_value < cond:
        cond = reg_value
        p = REGULAR_AXES[reg_set]
        theta, phi = p.theta, p.phi

    cls = None
    if math.isfinite(reg_value):
        kind = "irregular" if reg_value - bf.value > IRREGULAR_GAP else "regular"
        cls = MeasurementClass(kind, reg_set, reg_value, bf.value)

    return MeasureResult(
        value=s_a - s_ab + cond, theta=theta, phi=phi, method=method, classification=cls
    )


def discord(
    state: "CorrelatorState | DensityMatrix | np.ndarray", method: str = "hybrid"
) -> float:
    """Quantum discord of the first qubit versus the rest."""
    return discord_full(state, method).value


def classical_correlation(
    state: "CorrelatorState | DensityMatrix | np.ndarray", method: str = "hybrid"
) -> float:
    """Measurement-extractable correlation S(rho_B) - min_Pi sum p_k S(rho_B^k)."""
    _, mat = _coerce(state)
    res = discord_full(state, method)
    s_b = entropy(trace_out_first(mat))
    s_a = entropy(first_qubit_marginal(mat))
    s_ab = entropy(mat)
    cond = res.value - s_a + s_ab
    return s_b - cond


def mutual_information(state: "CorrelatorState | DensityMatrix | np.ndarray") -> float:
    """Total correlation S(A) + S(B) - S(AB)."""
    _, mat = _coerce(state)
    return entropy(first_qubit_marginal(mat)) + entropy(trace_out_first(mat)) - entropy(mat)


# ---------------------------------------------------------------------------
# work deficit


def _axis_operator(axis: np.ndarray, n: int) -> np.ndarray:
    from .states import PAULI

    sig = axis[0] * PAULI[1] + axis[1] * PAULI[2] + axis[2] * PAULI[3]
    return np.kron(sig, np.eye(2 ** (n - 1), dtype=np.complex128))


def dephased_entropy(
    rho: "DensityMatrix | np.ndarray | CorrelatorState", theta: float, phi: float
) -> float:
    """Entropy of the post-measurement average state for one direction."""
    if isinstance(rho, CorrelatorState):
        rho = to_density(rho)
    mat = _as_matrix(rho)
    n = int(round(math.log2(mat.shape[0])))
    op = _axis_operator(Projector(theta, phi).axis(), n)
    avg = 0.5 * (mat + op @ mat @ op)
    return entropy(avg)


def _dephased_entropy_axes(mat: np.ndarray, axes: np.ndarray) -> np.ndarray:
    """S(post-measurement average) for a batch of axes via batched eigvalsh."""
    d = mat.shape[0]
    half = d // 2
    eye = np.eye(half)
    out = np.empty(axes.shape[0])
    step = max(1, (1 << 21) // (d * d))
    for i0 in range(0, axes.shape[0], step):
        chunk = axes[i0 : i0 + step]
        g = chunk.shape[0]
        ops = np.zeros((g, d, d), dtype=np.complex128)
        a = (chunk[:, 0] - 1.0j * chunk[:, 1])[:, None, None]
        b = (chunk[:, 0] + 1.0j * chunk[:, 1])[:, None, None]
        c = chunk[:, 2][:, None, None]
        ops[:, :half, :half] = c * eye
        ops[:, :half, half:] = a * eye
        ops[:, half:, :half] = b * eye
        ops[:, half:, half:] = -c * eye
        avg = 0.5 * (mat[None] + ops @ mat @ ops)
        vals = np.linalg.eigvalsh(avg)
        vals = np.clip(vals, EIG_FLOOR, None)
        out[i0 : i0 + step] = -(vals * np.log(vals)).sum(axis=-1) / _LOG2
    return out


def work_deficit_full(
    state: "CorrelatorState | DensityMatrix | np.ndarray",
    method: str = "hybrid",
    grid_shape: "tuple[int, int] | None" = None,
    refine_starts: int = _REFINE_STARTS,
) -> MeasureResult:
    """One-way work deficit with minimizer details."""
    if method not in ("regular", "bruteforce", "hybrid"):
        raise ValueError(f"unknown method {method!r}")
    corr, mat = _coerce(state)
    s_ab = entropy(mat)

    reg_value = math.inf
    reg_set = None
    if corr is not None:
        reg = {
            name: _entropy_ab(_dephase_along(corr, axis_index))
            for name, axis_index in (("s1", 3), ("s2", 2), ("s3", 1))
        }
        reg_set = min(reg, key=reg.get)
        reg_value = reg[reg_set]

    if method == "regular":
        if corr is None:
            raise ValueError("regular method needs a representable two-qubit correlator state")
        p = REGULAR_AXES[reg_set]
        return MeasureResult(
            value=reg_value - s_ab,
            theta=p.theta,
            phi=p.phi,
            method="regular",
            classification=MeasurementClass("regular", reg_set, reg_value, reg_value),
        )

    axes, thetas, phis = _DEFAULT_GRID if grid_shape is None else _axis_grid(grid_shape)
    values = _dephased_entropy_axes(mat, axes)

    def scalar(theta: float, phi: float) -> float:
        st = math.sin(theta)
        ax = np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)])
        return float(_dephased_entropy_axes(mat, ax[None, :])[0])

    bf_value, theta, phi = _minimize_with_refinement(values, thetas, phis, scalar, refine_starts)

    cond = bf_value
    if method == "hybrid" and reg_value < cond:
        cond = reg_value
        p = REGULAR_AXES[reg_set]
        theta, phi = p.theta, p.phi

    cls = None
    if math.isfinite(reg_value):
        kind = "irregular" if reg_value - bf_value > IRREGULAR_GAP else "regular"
        cls = MeasurementClass(kind, reg_set, reg_value, bf_value)

    return MeasureResult(
        value=cond - s_ab, theta=theta, phi=phi, method=method, classification=cls
    )


def work_deficit(
    state: "CorrelatorState | DensityMatrix | np.ndarray", method: str = "hybrid"
) -> float:
    """One-way quantum work deficit (measurement on the first qubit)."""
    return work_deficit_full(state, method).value


# ---------------------------------------------------------------------------
# multipartite closed form


def discord_multipartite(
    d: DiagonalState,
    gamma: float = 0.0,
    kind: "ChannelKind | str" = ChannelKind.BIT_FLIP,
) -> float:
    """Closed-form discord of a flip-evolved diagonal 2n-qubit state.

    First qubit versus the rest:

        D = S(rho_1) + S(rho_rest) - S(rho) + F(c)/2

    where c is the largest evolved coefficient magnitude.  Both marginals
    are maximally mixed, so the first two terms contribute 2n bits.
    """
    kind = ChannelKind.parse(kind)
    evolved = evolve_diagonal(d, kind, gamma)
    vals, mult = diagonal_spectrum(evolved)
    s_ab = spectrum_entropy(np.clip(vals, 0.0, None), mult)
    c = max(abs(evolved.c1), abs(evolved.c2), abs(evolved.c3))
    return float(d.n_qubits - s_ab + 0.5 * freezing_entropy(c))


# ---------------------------------------------------------------------------
# deficit / discord relation


def deficit_discord_relation(
    state: "CorrelatorState | DensityMatrix | np.ndarray",
    method: str = "hybrid",
    axis_tol: float = 1e-3,
    identity_tol: float = 1e-8,
) -> DeficitDiscordReport:
    """Check W = D - S(rho_A) + H(outcome probabilities).

    The identity holds whenever the deficit and discord optimizations are
    attained by the same measurement ensemble.  Axes are compared up to
    inversion (antipodal projector pairs are the same measurement).  When
    they differ, the relation is flagged as not applicable.
    """
    _, mat = _coerce(state)
    d_res = discord_full(state, method)
    w_res = work_deficit_full(state, method)
    ax_d = d_res.axis()
    ax_w = w_res.axis()
    coincide = abs(float(np.dot(ax_d, ax_w))) >= 1.0 - axis_tol

    probabilities = None
    identity_gap = None
    holds = None
    if coincide:
        _, moments = _sigma_moments(mat)
        mags = np.array([float(np.trace(m).real) for m in moments])
        na = float(np.dot(ax_w, mags))
        probabilities = (0.5 * (1.0 + na), 0.5 * (1.0 - na))
        s_a = entropy(first_qubit_marginal(mat))
        identity_gap = w_res.value - (d_res.value - s_a + shannon_bits(probabilities))
        holds = abs(identity_gap) <= identity_tol
    return DeficitDiscordReport(
        discord=d_res.value,
        work_deficit=w_res.value,
        discord_axis=tuple(float(v) for v in ax_d),
        deficit_axis=tuple(float(v) for v in ax_w),
        ensembles_coincide=coincide,
        probabilities=probabilities,
        identity_gap=identity_gap,
        holds=holds,
    )
