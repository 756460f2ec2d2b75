"""Discord, work deficit, their decomposition, and the optimizers."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import qcfreeze as q

small = st.floats(-0.3, 0.3, allow_nan=False, allow_infinity=False)


def bloch_axis(theta, phi):
    return np.array(
        [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
    )


def reference_conditional_entropy(mat, theta, phi):
    """Projective-measurement conditional entropy built from scratch."""
    n = bloch_axis(theta, phi)
    paulis = (
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    )
    sigma_n = sum(c * p for c, p in zip(n, paulis))
    out = 0.0
    for sign in (+1.0, -1.0):
        proj = 0.5 * (np.eye(2) + sign * sigma_n)
        big = np.kron(proj, np.eye(2))
        sub = big @ mat @ big
        prob = float(np.trace(sub).real)
        if prob < 1e-14:
            continue
        rho_b = np.einsum("aiaj->ij", (sub / prob).reshape(2, 2, 2, 2))
        vals = np.clip(np.linalg.eigvalsh(rho_b), 0.0, 1.0)
        ent = -sum(v * math.log2(v) for v in vals if v > 0.0)
        out += prob * ent
    return out


def reference_dephased_entropy(mat, theta, phi):
    n = bloch_axis(theta, phi)
    paulis = (
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    )
    sigma_n = sum(c * p for c, p in zip(n, paulis))
    dim = mat.shape[0]
    op = np.kron(sigma_n, np.eye(dim // 2))
    avg = 0.5 * (mat + op @ mat @ op)
    vals = np.clip(np.linalg.eigvalsh(avg), 0.0, 1.0)
    return -sum(v * math.log2(v) for v in vals if v > 0.0)


def test_projector_geometry():
    p = q.Projector(0.7, 1.3)
    f1, f2 = p.kets()
    assert abs(np.vdot(f1, f1) - 1.0) < 1e-12
    assert abs(np.vdot(f2, f2) - 1.0) < 1e-12
    assert abs(np.vdot(f1, f2)) < 1e-12
    m1, m2 = p.matrices()
    np.testing.assert_allclose(m1 + m2, np.eye(2), atol=1e-12)
    assert abs(np.linalg.norm(p.axis()) - 1.0) < 1e-12
    with pytest.raises(ValueError):
        q.Projector(3.5, 0.0)


def test_regular_axes_are_the_three_directions():
    np.testing.assert_allclose(q.correlations.REGULAR_AXES["s1"].axis(), [0, 0, 1], atol=1e-12)
    np.testing.assert_allclose(q.correlations.REGULAR_AXES["s2"].axis(), [0, 1, 0], atol=1e-12)
    np.testing.assert_allclose(q.correlations.REGULAR_AXES["s3"].axis(), [1, 0, 0], atol=1e-12)


@given(theta=st.floats(0.0, math.pi), phi=st.floats(0.0, 2 * math.pi))
@settings(max_examples=30)
def test_measured_conditional_entropy_matches_reference(theta, phi):
    s = q.canonical_state(0.5, -0.3, 0.6, c10=0.2, c01=0.4)
    mat = q.to_density(s).matrix
    ours = q.measured_conditional_entropy(s, theta, phi)
    assert abs(ours - reference_conditional_entropy(mat, theta, phi)) < 1e-9


@given(theta=st.floats(0.0, math.pi), phi=st.floats(0.0, 2 * math.pi))
@settings(max_examples=30)
def test_dephased_entropy_matches_reference(theta, phi):
    s = q.canonical_state(0.5, -0.3, 0.6, c10=0.2, c01=0.4)
    mat = q.to_density(s).matrix
    ours = q.dephased_entropy(s, theta, phi)
    assert abs(ours - reference_dephased_entropy(mat, theta, phi)) < 1e-9


def test_discord_of_known_states():
    # rank-two Bell mixture: discord equals 1 + 0.8 log 0.8 + 0.2 log 0.2
    d = q.discord(q.canonical_state(0.6, -0.6, 1.0))
    assert abs(d - 0.2780719051126377) < 1e-9
    # pure Bell state carries one bit of discord and one of classical correlation
    bell = np.zeros((4, 4)); bell[0, 0] = bell[0, 3] = bell[3, 0] = bell[3, 3] = 0.5
    assert abs(q.discord(bell) - 1.0) < 1e-9
    assert abs(q.classical_correlation(bell) - 1.0) < 1e-9
    assert abs(q.mutual_information(bell) - 2.0) < 1e-9


def test_uncorrelated_states_have_nothing():
    prod = np.kron(np.diag([0.7, 0.3]), np.diag([0.4, 0.6]))
    assert q.mutual_information(prod) < 1e-12
    assert abs(q.discord(prod)) < 1e-9
    assert abs(q.work_deficit(prod)) < 1e-9


def test_classical_state_has_zero_discord():
    # diagonal in a product basis: correlated but classical
    s = q.canonical_state(0.0, 0.0, 0.5)
    assert q.mutual_information(s) > 0.1
    assert abs(q.discord(s)) < 1e-9


@given(c11=small, c22=small, c33=small, c10=small, c01=small)
@settings(max_examples=40)
def test_mutual_information_decomposition(c11, c22, c33, c10, c01):
    s = q.canonical_state(c11, c22, c33, c10=c10, c01=c01)
    i = q.mutual_information(s)
    c = q.classical_correlation(s)
    d = q.discord(s)
    assert abs(i - (c + d)) < 1e-12  # same minimizer by construction
    assert d >= -1e-9
    assert c >= -1e-9


@given(c11=small, c22=small, c33=small)
@settings(max_examples=25)
def test_bruteforce_never_above_regular(c11, c22, c33):
    s = q.canonical_state(c11, c22, c33, c10=0.1, c01=-0.2)
    res = q.discord_full(s, method="hybrid")
    cls = res.classification
    assert cls.global_value <= cls.regular_value + 1e-9
    assert res.value <= q.discord(s, method="regular") + 1e-9


def test_regular_sets_optimal_for_bell_diagonal():
    # a small deterministic sweep; the optimum never beats the regular axes
    rng = np.random.default_rng(5)
    for _ in range(20):
        c = rng.uniform(-1, 1, 3)
        ok, _ = q.is_physical(q.canonical_state(*c))
        if not ok:
            continue
        s = q.canonical_state(*c)
        res = q.discord_full(s, method="hybrid")
        assert res.classification.gap <= 1e-9
        assert res.classification.kind == "regular"


@given(c11=small, c22=small, c33=small)
@settings(max_examples=20)
def test_work_deficit_equals_discord_for_diagonal_states(c11, c22, c33):
    s = q.canonical_state(c11, c22, c33)
    assert abs(q.work_deficit(s) - q.discord(s)) < 1e-8


def test_work_deficit_methods_agree():
    s = q.canonical_state(0.5, -0.3, 0.6, c10=0.2, c01=0.4)
    w_reg = q.work_deficit(s, method="regular")
    w_hyb = q.work_deficit(s, method="hybrid")
    assert w_hyb <= w_reg + 1e-9
    assert w_hyb >= -1e-9


def test_measure_result_reports_minimizer():
    s = q.canonical_state(0.6, -0.6, 1.0)
    res = q.discord_full(s, method="hybrid")
    # the reported angles must reproduce the reported conditional entropy
    s_a = q.entropy(q.first_qubit_marginal(q.to_density(s).matrix))
    s_ab = q.entropy(q.to_density(s))
    cond = q.measured_conditional_entropy(s, res.theta, res.phi)
    assert abs((s_a - s_ab + cond) - res.value) < 1e-9
    assert res.axis().shape == (3,)


def test_invalid_method_rejected():
    s = q.canonical_state(0.1, 0.1, 0.1)
    with pytest.raises(ValueError):
        q.discord(s, method="annealing")
    with pytest.raises(ValueError):
        q.work_deficit(s, method="annealing")


def test_deficit_discord_relation_on_diagonal_state():
    rep = q.deficit_discord_relation(q.canonical_state(0.6, -0.6, 1.0))
    assert rep.ensembles_coincide
    assert rep.holds
    assert rep.probabilities == pytest.approx((0.5, 0.5), abs=1e-9)
    assert rep.identity_gap == pytest.approx(0.0, abs=1e-9)
    assert abs(rep.discord - rep.work_deficit) < 1e-9


def test_deficit_discord_relation_magnetized():
    rep = q.deficit_discord_relation(q.canonical_state(0.5, -0.3, 0.6, c10=0.2, c01=0.4))
    # deficit dephases, discord conditions; deficit can only be larger
    assert rep.work_deficit >= rep.discord - 1e-9
    if rep.ensembles_coincide:
        assert rep.holds is not None


def test_discord_multipartite_reduces_to_two_qubit():
    d = q.diagonal_state(1, 0.6, -0.6, 1.0)
    pair = q.canonical_state(0.6, -0.6, 1.0)
    for g in (0.0, 0.2, 0.5):
        closed = q.discord_multipartite(d, g)
        dense = q.discord(q.evolve_correlators(pair, "bf", g), method="hybrid")
        assert abs(closed - dense) < 1e-9


def test_discord_multipartite_matches_bruteforce_two_pairs():
    d = q.diagonal_state(2, 0.6, 0.6, 1.0)
    rho = d.to_density()
    for g in (0.0, 0.1, 0.3):
        closed = q.discord_multipartite(d, g)
        evolved = q.apply_local_channel(rho, "bf", g)
        brute = q.discord_full(evolved, method="bruteforce", grid_shape=(16, 32)).value
        assert abs(closed - brute) < 1e-7
