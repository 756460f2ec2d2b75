"""State families and scalar functionals for correlation-freezing studies.

Three families of multiqubit mixed states are implemented:

* two-qubit states whose correlation tensor is diagonal in the Pauli basis,
  with optional local magnetizations (``CorrelatorState``),
* 2n-qubit states diagonal in the tensor-power Pauli strings
  (``DiagonalState``),
* recursively encoded "sweeping" states whose left-traced marginals
  inherit the freezing property (``SweepingState``).

The scalar functionals (von Neumann entropy in bits, the binary-entropy
based freezing function, Wootters concurrence) live here as well, since
every other module is written in terms of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "PAULI",
    "CorrelatorState",
    "DensityMatrix",
    "DiagonalState",
    "SweepingState",
    "canonical_state",
    "to_density",
    "from_density",
    "is_physical",
    "diagonal_state",
    "diagonal_spectrum",
    "sweeping_state",
    "sweeping_marginal_params",
    "entropy",
    "freezing_entropy",
    "concurrence",
    "canonical_spectrum",
    "trace_out_first",
    "first_qubit_marginal",
    "random_physical_canonical",
]

# Pauli matrices indexed 0..3 (identity, x, y, z).
PAULI = (
    np.eye(2, dtype=np.complex128),
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128),
)

#: eigenvalues smaller than this are treated as exact zeros inside logs
EIG_FLOOR = 1e-15

#: a state is accepted as physical when its minimum eigenvalue is above this
POSITIVITY_TOL = -1e-12

_LOG2 = math.log(2.0)


def _plogp_bits(p: float) -> float:
    """-p*log2(p) with the 0*log(0) = 0 convention."""
    if p <= EIG_FLOOR:
        return 0.0
    return -p * math.log(p) / _LOG2


def shannon_bits(probs: Iterable[float]) -> float:
    """Shannon entropy in bits of a probability-like list (zeros allowed)."""
    return float(sum(_plogp_bits(float(p)) for p in probs))


def binary_entropy(p: float) -> float:
    """Binary entropy h(p) in bits."""
    return _plogp_bits(p) + _plogp_bits(1.0 - p)


def freezing_entropy(y: float) -> float:
    """Entropy-difference function F(y) = 2*[h((1+y)/2) - 1].

    F is the shape that every frozen correlation value and every freezing
    terminal condition is expressed in.  It is non-positive, decreasing on
    [0, 1], with F(0) = 0 and F(1) = -2.

    Parameters
    ----------
    y : float
        Argument in [0, 1].  Callers that hold signed correlators should
        pass the absolute value; F only depends on it.
    """
    if not -1e-12 <= y <= 1.0 + 1e-12:
        raise ValueError(f"freezing_entropy argument must lie in [0, 1], got {y}")
    y = min(max(y, 0.0), 1.0)
    return 2.0 * (binary_entropy(0.5 * (1.0 + y)) - 1.0)


def _f_abs(c: float) -> float:
    """F(|c|), the form in which F enters all closed-form expressions."""
    return freezing_entropy(abs(c))


@dataclass(frozen=True)
class CorrelatorState:
    """Two-qubit state with diagonal two-point correlators.

    rho = (1/4) [ I + sum_a caa s_a x s_a + sum_a ca0 s_a x I
                  + sum_b c0b I x s_b ]

    with s_1, s_2, s_3 the Pauli x, y, z matrices.  Off-diagonal two-point
    correlators are identically zero in this family, which is closed under
    the local flip channels.  States with c20 = c02 = c30 = c03 = 0 are
    called canonical here; they are the inputs of the exact-freezing
    propositions.  Nonzero transverse-field magnetizations (c30, c03)
    appear in the spin-chain reduced states.
    """

    c11: float = 0.0
    c22: float = 0.0
    c33: float = 0.0
    c10: float = 0.0
    c01: float = 0.0
    c20: float = 0.0
    c02: float = 0.0
    c30: float = 0.0
    c03: float = 0.0

    def __post_init__(self) -> None:
        for name in ("c11", "c22", "c33", "c10", "c01", "c20", "c02", "c30", "c03"):
            v = getattr(self, name)
            if not -1.0 - 1e-12 <= v <= 1.0 + 1e-12:
                raise ValueError(f"correlator {name}={v} outside [-1, 1]")

    @property
    def is_canonical(self) -> bool:
        """True when only x magnetizations are present."""
        return self.c20 == self.c02 == self.c30 == self.c03 == 0.0

    @property
    def diag(self) -> tuple[float, float, float]:
        return (self.c11, self.c22, self.c33)

    @property
    def mag_a(self) -> tuple[float, float, float]:
        """Bloch vector of the first (measured) qubit."""
        return (self.c10, self.c20, self.c30)

    @property
    def mag_b(self) -> tuple[float, float, float]:
        """Bloch vector of the second qubit."""
        return (self.c01, self.c02, self.c03)

    def to_density(self) -> "DensityMatrix":
        return to_density(self)


def canonical_state(
    c11: float, c22: float, c33: float, c10: float = 0.0, c01: float = 0.0
) -> CorrelatorState:
    """Construct a canonical two-qubit state (x magnetizations only)."""
    return CorrelatorState(c11=c11, c22=c22, c33=c33, c10=c10, c01=c01)


@dataclass
class DensityMatrix:
    """Validated density matrix on up to 10 qubits.

    Hermiticity and unit trace are enforced at construction.  Positivity is
    deliberately not enforced here: slightly indefinite matrices occur as
    intermediate objects (for example when scanning correlator grids) and
    are screened by :func:`is_physical` or by the consuming operation.
    """

    matrix: np.ndarray
    n_qubits: int = field(init=False)

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {m.shape}")
        dim = m.shape[0]
        n = int(round(math.log2(dim)))
        if 2**n != dim:
            raise ValueError(f"dimension {dim} is not a power of two")
        if n < 1 or n > 10:
            raise ValueError(f"qubit count {n} outside supported range 1..10")
        if not np.allclose(m, m.conj().T, atol=1e-9):
            raise ValueError("density matrix is not Hermitian within 1e-9")
        tr = np.trace(m).real
        if abs(tr - 1.0) > 1e-9:
            raise ValueError(f"density matrix trace {tr} differs from 1 by more than 1e-9")
        self.matrix = m
        self.n_qubits = n

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)


def _as_matrix(rho: "DensityMatrix | np.ndarray") -> np.ndarray:
    if isinstance(rho, DensityMatrix):
        return rho.matrix
    return np.asarray(rho, dtype=np.complex128)


def to_density(s: CorrelatorState) -> DensityMatrix:
    """Assemble the 4x4 density matrix of a correlator state.

    Positivity is not asserted; use :func:`is_physical` to screen.
    """
    m = np.zeros((4, 4), dtype=np.complex128)
    m += np.kron(PAULI[0], PAULI[0])
    for a, caa in zip((1, 2, 3), s.diag):
        if caa != 0.0:
            m += caa * np.kron(PAULI[a], PAULI[a])
    for a, ca0 in zip((1, 2, 3), s.mag_a):
        if ca0 != 0.0:
            m += ca0 * np.kron(PAULI[a], PAULI[0])
    for b, c0b in zip((1, 2, 3), s.mag_b):
        if c0b != 0.0:
            m += c0b * np.kron(PAULI[0], PAULI[b])
    return DensityMatrix(0.25 * m)


def from_density(rho: "DensityMatrix | np.ndarray", tol: float = 1e-9) -> CorrelatorState:
    """Extract correlators from a two-qubit density matrix.

    Raises
    ------
    ValueError
        If the matrix carries an off-diagonal two-point correlator larger
        than ``tol``; such states are outside the represented family.
    """
    m = _as_matrix(rho)
    if m.shape != (4, 4):
        raise ValueError("from_density expects a two-qubit state")
    coeff = {}
    for a in range(4):
        for b in range(4):
            if a == b == 0:
                continue
            op = np.kron(PAULI[a], PAULI[b])
            coeff[(a, b)] = float(np.trace(op @ m).real)
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            if a != b and abs(coeff[(a, b)]) > tol:
                raise ValueError(
                    f"off-diagonal correlator c{a}{b}={coeff[(a, b)]:.3e} exceeds "
                    f"tolerance {tol:g}; state not representable"
                )
    return CorrelatorState(
        c11=coeff[(1, 1)],
        c22=coeff[(2, 2)],
        c33=coeff[(3, 3)],
        c10=coeff[(1, 0)],
        c01=coeff[(0, 1)],
        c20=coeff[(2, 0)],
        c02=coeff[(0, 2)],
        c30=coeff[(3, 0)],
        c03=coeff[(0, 3)],
    )


def is_physical(state: "CorrelatorState | DensityMatrix | np.ndarray") -> tuple[bool, float]:
    """Check positivity; returns (is_positive, smallest eigenvalue)."""
    if isinstance(state, CorrelatorState):
        mat = to_density(state).matrix
    else:
        mat = _as_matrix(state)
    min_eig = float(np.linalg.eigvalsh(mat)[0])
    return (min_eig >= POSITIVITY_TOL, min_eig)


def canonical_spectrum(s: CorrelatorState, gamma: float = 0.0) -> np.ndarray:
    """Closed-form spectrum of a canonical state after two-sided bit flip.

    For a canonical state evolved with local bit-flip strength ``gamma`` on
    both qubits, the four eigenvalues are

        (1 + c11 -+ sqrt((c10 + c01)^2 + (1-gamma)^4 (c22 - c33)^2)) / 4
        (1 - c11 -+ sqrt((c10 - c01)^2 + (1-gamma)^4 (c22 + c33)^2)) / 4

    ``gamma=0`` gives the spectrum of the initial state.  Used as an
    analytic oracle against dense diagonalization.
    """
    if not s.is_canonical:
        raise ValueError("closed-form spectrum requires a canonical state")
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma={gamma} outside [0, 1]")
    k = (1.0 - gamma) ** 2
    r_plus = math.hypot(s.c10 + s.c01, k * (s.c22 - s.c33))
    r_minus = math.hypot(s.c10 - s.c01, k * (s.c22 + s.c33))
    return 0.25 * np.array(
        [
            1.0 + s.c11 - r_plus,
            1.0 + s.c11 + r_plus,
            1.0 - s.c11 - r_minus,
            1.0 - s.c11 + r_minus,
        ]
    )


@dataclass(frozen=True)
class DiagonalState:
    """2n-qubit state diagonal in the Pauli-string basis.

    rho = (1/2^(2n)) [ I + c1 X^(x2n) + c2 Y^(x2n) + c3 Z^(x2n) ]

    Every single-site marginal is maximally mixed, so all correlations are
    shared globally.  ``n_pairs`` counts qubit pairs: the state lives on
    2 * n_pairs qubits.
    """

    n_pairs: int
    c1: float
    c2: float
    c3: float

    def __post_init__(self) -> None:
        if self.n_pairs < 1 or self.n_pairs > 5:
            raise ValueError("n_pairs must be between 1 and 5 (2..10 qubits)")
        for name in ("c1", "c2", "c3"):
            v = getattr(self, name)
            if not -1.0 - 1e-12 <= v <= 1.0 + 1e-12:
                raise ValueError(f"coefficient {name}={v} outside [-1, 1]")

    @property
    def n_qubits(self) -> int:
        return 2 * self.n_pairs

    def to_density(self) -> DensityMatrix:
        dim = 2**self.n_qubits
        m = np.eye(dim, dtype=np.complex128)
        for c, a in ((self.c1, 1), (self.c2, 2), (self.c3, 3)):
            if c != 0.0:
                op = PAULI[a]
                s = op
                for _ in range(self.n_qubits - 1):
                    s = np.kron(s, op)
                m += c * s
        return DensityMatrix(m / dim)


def diagonal_spectrum(d: DiagonalState, gamma: float = 0.0) -> tuple[np.ndarray, int]:
    """Closed-form spectrum of a diagonal state under two-sided-per-qubit bit flip.

    The three Pauli strings commute; with q = (1-gamma)^(2n) the joint
    eigenvalues are labelled by the X-string and Y-string signs (x, y),
    the Z-string sign being fixed to (-1)^n * x * y:

        lambda(x, y) = (1 + c1 x + c2 q y + c3 q (-1)^n x y) / 2^(2n)

    Returns the four distinct values and their common multiplicity
    2^(2n-2).
    """
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma={gamma} outside [0, 1]")
    nq = d.n_qubits
    q = (1.0 - gamma) ** nq
    parity = -1.0 if d.n_pairs % 2 else 1.0
    vals = []
    for x in (1.0, -1.0):
        for y in (1.0, -1.0):
            vals.append((1.0 + d.c1 * x + d.c2 * q * y + d.c3 * q * parity * x * y) / 2**nq)
    return np.array(vals), 2 ** (nq - 2)


def diagonal_state(n_pairs: int, c1: float, c2: float, c3: float) -> DiagonalState:
    """Construct a diagonal 2n-qubit state, rejecting non-physical input."""
    d = DiagonalState(n_pairs=n_pairs, c1=c1, c2=c2, c3=c3)
    vals, _ = diagonal_spectrum(d)
    if float(vals.min()) < POSITIVITY_TOL:
        raise ValueError(
            f"coefficients ({c1}, {c2}, {c3}) give eigenvalue {vals.min():.3e} < 0"
        )
    return d


@dataclass(frozen=True)
class SweepingState:
    """Recursively encoded n-qubit family with freezing marginals.

    The two branch vectors start from one qubit and are grown by the
    encoding |0> -> a|00> + sqrt(1-a^2)|11>, |1> -> a|11> + sqrt(1-a^2)|00>
    applied to the last qubit, one encoding per entry of ``alphas`` beyond
    the first.  The state mixes the branch projectors with weight (1-x)/2
    each and their coherent superposition with weight x/2.

    ``alphas`` may have length n_qubits-1 (leading entry is the base
    amplitude of the unencoded two-qubit family) or length n_qubits-2
    (base amplitude defaults to 1, the recursive construction).
    """

    n_qubits: int
    x: float
    alphas: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.n_qubits < 2 or self.n_qubits > 10:
            raise ValueError("n_qubits must be between 2 and 10")
        if not 0.0 <= self.x <= 1.0:
            raise ValueError(f"mixing weight x={self.x} outside [0, 1]")
        alphas = tuple(float(a) for a in self.alphas)
        expected = (self.n_qubits - 1, self.n_qubits - 2)
        if len(alphas) not in expected or len(alphas) == 0:
            raise ValueError(
                f"alphas length {len(alphas)} invalid for {self.n_qubits} qubits; "
                f"expected {expected[0]} (explicit base) or {max(expected[1], 1)}"
            )
        for a in alphas:
            if not 0.0 <= a <= 1.0:
                raise ValueError(f"encoding amplitude {a} outside [0, 1]")
        if len(alphas) == self.n_qubits - 1 and self.n_qubits > 2 and alphas[0] != 1.0:
            # the encoding map only preserves norms of basis-aligned branches
            raise ValueError(
                "an explicit base amplitude other than 1 is only defined for the "
                "two-qubit family; longer chains use the recursive form"
            )
        object.__setattr__(self, "alphas", alphas)

    def branch_vectors(self) -> tuple[np.ndarray, np.ndarray]:
        """The two orthogonal (n-1)-qubit branch vectors."""
        alphas = self.alphas
        if len(alphas) == self.n_qubits - 1:
            base, encodings = alphas[0], alphas[1:]
        else:
            base, encodings = 1.0, alphas
        cb = math.sqrt(max(0.0, 1.0 - base * base))
        v0 = np.array([base, cb], dtype=np.complex128)
        v1 = np.array([cb, base], dtype=np.complex128)
        for a in encodings:
            v0 = _encode_last(v0, a)
            v1 = _encode_last(v1, a)
        return v0, v1

    def to_density(self) -> DensityMatrix:
        v0, v1 = self.branch_vectors()
        dim = 2 ** (self.n_qubits - 1)
        rho = np.zeros((2 * dim, 2 * dim), dtype=np.complex128)
        p00 = np.outer(v0, v0.conj())
        p11 = np.outer(v1, v1.conj())
        p01 = np.outer(v0, v1.conj())
        rho[:dim, :dim] = 0.5 * p00
        rho[dim:, dim:] = 0.5 * p11
        rho[:dim, dim:] = 0.5 * self.x * p01
        rho[dim:, :dim] = 0.5 * self.x * p01.conj().T
        return DensityMatrix(rho)


def _encode_last(v: np.ndarray, a: float) -> np.ndarray:
    """Encode the last qubit of ``v`` into two qubits with amplitude ``a``."""
    b = math.sqrt(max(0.0, 1.0 - a * a))
    # isometry columns: |0> -> a|00> + b|11>, |1> -> a|11> + b|00>
    iso = np.array(
        [
            [a, b],
            [0.0, 0.0],
            [0.0, 0.0],
            [b, a],
        ],
        dtype=np.complex128,
    )
    w = v.reshape(-1, 2) @ iso.T
    return w.reshape(-1)


def sweeping_state(n_qubits: int, x: float, alphas: Sequence[float]) -> DensityMatrix:
    """Density matrix of the sweeping family (see :class:`SweepingState`)."""
    return SweepingState(n_qubits=n_qubits, x=x, alphas=tuple(alphas)).to_density()


def sweeping_marginal_params(x: float, alphas: Sequence[float]) -> tuple[float, tuple[float, ...]]:
    """Parameters of the state left after tracing out the first qubit.

    For the recursive family (base amplitude 1) on n >= 3 qubits, tracing
    the first qubit yields the (n-1)-qubit sweeping state with

        x' = 2 * a1 * sqrt(1 - a1^2),   alphas' = alphas[1:]

    where a1 is the first encoding amplitude.  The original mixing weight
    x drops out entirely.
    """
    alphas = tuple(float(a) for a in alphas)
    if not alphas:
        raise ValueError("need at least one encoding amplitude")
    a1 = alphas[0]
    x_new = 2.0 * a1 * math.sqrt(max(0.0, 1.0 - a1 * a1))
    rest = alphas[1:]
    if not rest:
        rest = (1.0,)
    return x_new, rest


def entropy(rho: "DensityMatrix | np.ndarray") -> float:
    """Von Neumann entropy in bits.

    Raises
    ------
    ValueError
        If the input has an eigenvalue below the positivity tolerance.
    """
    mat = _as_matrix(rho)
    vals = np.linalg.eigvalsh(mat)
    if vals[0] < POSITIVITY_TOL:
        raise ValueError(f"entropy of non-physical state (min eigenvalue {vals[0]:.3e})")
    vals = vals[vals > EIG_FLOOR]
    return float(-(vals * (np.log(vals) / _LOG2)).sum())


def spectrum_entropy(vals: np.ndarray, multiplicity: int = 1) -> float:
    """Entropy in bits of an eigenvalue list, each value taken ``multiplicity`` times."""
    vals = np.asarray(vals, dtype=float)
    if vals.min() < POSITIVITY_TOL:
        raise ValueError(f"entropy of non-physical spectrum (min {vals.min():.3e})")
    vals = vals[vals > EIG_FLOOR]
    return float(multiplicity * -(vals * (np.log(vals) / _LOG2)).sum())


def concurrence(rho: "DensityMatrix | np.ndarray") -> float:
    """Wootters concurrence of a two-qubit state."""
    m = _as_matrix(rho)
    if m.shape != (4, 4):
        raise ValueError("concurrence is defined here for two-qubit states only")
    yy = np.kron(PAULI[2], PAULI[2])
    m_tilde = yy @ m.conj() @ yy
    vals = np.linalg.eigvals(m @ m_tilde)
    vals = np.sqrt(np.clip(vals.real, 0.0, None))
    vals[::-1].sort()
    return float(max(0.0, vals[0] - vals[1] - vals[2] - vals[3]))


def trace_out_first(rho: "DensityMatrix | np.ndarray") -> np.ndarray:
    """Partial trace over the first qubit; returns a raw matrix."""
    m = _as_matrix(rho)
    half = m.shape[0] // 2
    return m[:half, :half] + m[half:, half:]


def first_qubit_marginal(rho: "DensityMatrix | np.ndarray") -> np.ndarray:
    """Reduced 2x2 state of the first qubit; returns a raw matrix."""
    m = _as_matrix(rho)
    half = m.shape[0] // 2
    return np.array(
        [
            [np.trace(m[:half, :half]), np.trace(m[:half, half:])],
            [np.trace(m[half:, :half]), np.trace(m[half:, half:])],
        ],
        dtype=np.complex128,
    )


def random_physical_canonical(
    rng: np.random.Generator,
    count: int,
    with_magnetization: bool = True,
) -> list[CorrelatorState]:
    """Sample canonical states uniformly from the physical region.

    Coefficients are drawn uniformly from [-1, 1] (magnetizations optional)
    and rejected against the closed-form spectrum, so acceptance is exact.
    """
    out: list[CorrelatorState] = []
    while len(out) < count:
        batch = max(256, 2 * (count - len(out)))
        c = rng.uniform(-1.0, 1.0, size=(batch, 5))
        if not with_magnetization:
            c[:, 3:] = 0.0
        r_plus = np.hypot(c[:, 3] + c[:, 4], c[:, 1] - c[:, 2])
        r_minus = np.hypot(c[:, 3] - c[:, 4], c[:, 1] + c[:, 2])
        ok = ((1.0 + c[:, 0]) >= r_plus) & ((1.0 - c[:, 0]) >= r_minus)
        for row in c[ok]:
            out.append(
                CorrelatorState(
                    c11=row[0], c22=row[1], c33=row[2], c10=row[3], c01=row[4]
                )
            )
            if len(out) == count:
                break
    return out
