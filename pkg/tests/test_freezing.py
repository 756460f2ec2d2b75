"""Tests for the exact-freezing criteria, terminals, and set geometry.

The magnetized freezing terminal is cross-checked against an independent
root find on the defining transcendental equation, built here from scratch
out of binary entropies.
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import brentq

import qcfreeze as q


def h2(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def f_of(y: float) -> float:
    return 2.0 * (h2(0.5 * (1.0 + abs(y))) - 1.0)


def reference_gamma_f(c11, c33, c01, c10) -> float:
    """Root of F(decayed transverse radius) = F(c11) + F(c01) - F(c10).

    Under bit flips the x locals are preserved and only the zz correlator
    decays, so the radius shrinks through its c33 component alone.
    """
    rhs = f_of(c11) + f_of(c01) - f_of(c10)

    def lhs(g):
        radius = math.hypot((1 - g) ** 2 * c33, c01)
        return f_of(radius) - rhs

    return brentq(lhs, 0.0, 1.0, xtol=1e-14)


ROOT6 = math.sqrt(0.6)


class TestCheckNsDiscord:
    def test_bell_diagonal_baseline(self):
        rep = q.check_ns_discord(q.canonical_state(0.6, -0.6, 1.0))
        assert rep.satisfied
        assert rep.branch == "zz"
        assert rep.clauses == {"i": True, "ii": True, "iii": True}
        assert rep.gamma_f == pytest.approx(1.0 - ROOT6, abs=1e-12)
        assert rep.frozen_value == pytest.approx(-0.5 * f_of(0.6), abs=1e-12)

    def test_magnetized_terminal_matches_independent_root(self):
        state = q.canonical_state(0.6, -0.48, 0.8, c10=0.3, c01=0.5)
        rep = q.check_ns_discord(state)
        assert rep.satisfied
        ref = reference_gamma_f(0.6, 0.8, 0.5, 0.3)
        assert rep.gamma_f == pytest.approx(ref, abs=1e-10)
        frozen = 0.5 * (f_of(0.3) - f_of(0.6))
        assert rep.frozen_value == pytest.approx(frozen, abs=1e-12)

    def test_yy_branch_state(self):
        # roles of c22 and c33 swapped: the free transverse correlator is yy
        rep = q.check_ns_discord(q.canonical_state(0.6, 1.0, -0.6))
        assert rep.satisfied
        assert rep.branch == "yy"
        assert rep.gamma_f == pytest.approx(1.0 - ROOT6, abs=1e-12)

    def test_clause_i_failure(self):
        rep = q.check_ns_discord(q.canonical_state(0.6, -0.5, 1.0))
        assert not rep.satisfied
        assert not rep.clauses["i"]

    def test_clause_ii_failure(self):
        state = q.canonical_state(0.6, -0.48, 0.8, c10=0.42, c01=0.7)
        rep = q.check_ns_discord(state)
        assert not rep.satisfied
        assert rep.clauses["i"]
        assert not rep.clauses["ii"]

    def test_clause_iii_failure(self):
        # terminal correlator weaker than the locked one: decay is immediate
        rep = q.check_ns_discord(q.canonical_state(0.6, -0.18, 0.3))
        assert not rep.satisfied
        assert rep.clauses["i"] and rep.clauses["ii"]
        assert not rep.clauses["iii"]

    def test_no_root_corner_stays_frozen_forever(self):
        state = q.canonical_state(0.5, 0.0, 0.0, c10=0.5, c01=1.0)
        rep = q.check_ns_discord(state)
        assert rep.satisfied
        assert rep.gamma_f == pytest.approx(1.0)
        assert rep.frozen_value == pytest.approx(0.0, abs=1e-12)

    def test_bell_corner_zero_width_interval(self):
        rep = q.check_ns_discord(q.canonical_state(1.0, -1.0, 1.0))
        assert not rep.satisfied
        assert any("gamma = 0" in d for d in rep.diagnostics)

    def test_non_canonical_input_rejected(self):
        state = q.CorrelatorState(
            c11=0.6, c22=-0.6, c33=1.0, c10=0.0, c01=0.0, c30=0.2
        )
        rep = q.check_ns_discord(state)
        assert not rep.satisfied
        assert any("canonical" in d for d in rep.diagnostics)


class TestCheckNsWorkdeficit:
    def test_bell_diagonal_satisfied(self):
        rep = q.check_ns_workdeficit(q.canonical_state(0.6, -0.6, 1.0))
        assert rep.satisfied
        assert rep.gamma_f == pytest.approx(1.0 - ROOT6, abs=1e-12)
        assert rep.frozen_value == pytest.approx(-0.5 * f_of(0.6), abs=1e-12)

    def test_deficit_freezing_is_stricter(self):
        # locals large enough to freeze the discord but not the deficit
        c01 = math.sqrt(0.84)
        state = q.canonical_state(0.6, -0.24, 0.4, c10=0.6 * c01, c01=c01)
        qd = q.check_ns_discord(state)
        qwd = q.check_ns_workdeficit(state)
        assert qd.satisfied
        assert not qwd.satisfied
        assert qwd.clauses["i"] and qwd.clauses["ii"]
        assert not qwd.clauses["iii"]


class TestFreezingTerminal:
    def test_matches_report(self):
        state = q.canonical_state(0.6, -0.48, 0.8, c10=0.3, c01=0.5)
        rep = q.check_ns_discord(state)
        assert q.freezing_terminal(state) == pytest.approx(rep.gamma_f)

    def test_raises_without_frozen_interval(self):
        with pytest.raises(ValueError):
            q.freezing_terminal(q.canonical_state(0.6, -0.18, 0.3))

    def test_diagonal_closed_form(self):
        diag = q.DiagonalState(n_pairs=2, c1=0.6, c2=0.6, c3=1.0)
        assert q.freezing_terminal(diag) == pytest.approx(1.0 - 0.6 ** 0.25)

    def test_diagonal_deficit_unsupported(self):
        diag = q.DiagonalState(n_pairs=2, c1=0.6, c2=0.6, c3=1.0)
        with pytest.raises(ValueError):
            q.freezing_terminal(diag, measure="qwd")

    def test_unknown_measure(self):
        with pytest.raises(ValueError):
            q.freezing_terminal(q.canonical_state(0.6, -0.6, 1.0), measure="qx")


class TestMultipartite:
    def test_parity_alternates_with_pair_count(self):
        good = {1: -0.6, 2: 0.6, 3: -0.6}
        for n, c2 in good.items():
            rep = q.check_ns_multipartite(
                q.DiagonalState(n_pairs=n, c1=0.6, c2=c2, c3=1.0)
            )
            assert rep.satisfied, n
            rep_bad = q.check_ns_multipartite(
                q.DiagonalState(n_pairs=n, c1=0.6, c2=-c2, c3=1.0)
            )
            assert not rep_bad.satisfied, n

    def test_terminal_closed_form_all_sizes(self):
        for n, c2 in ((1, -0.6), (2, 0.6), (3, -0.6)):
            diag = q.DiagonalState(n_pairs=n, c1=0.6, c2=c2, c3=1.0)
            rep = q.check_ns_multipartite(diag)
            assert rep.gamma_f == pytest.approx(1.0 - 0.6 ** (1.0 / (2 * n)))
            assert rep.frozen_value == pytest.approx(-0.5 * f_of(0.6), abs=1e-12)


class TestTrajectoryAgreement:
    def test_detected_plateau_ends_at_terminal(self):
        state = q.canonical_state(0.6, -0.48, 0.8, c10=0.3, c01=0.5)
        gamma_f = q.check_ns_discord(state).gamma_f
        traj = q.sample_trajectory(
            state, gamma_grid=np.linspace(0.0, 0.5, 501), method="regular"
        )
        intervals = q.detect_intervals(traj, delta=1e-6)
        assert intervals
        first = intervals[0]
        assert first.gamma1 == 0.0
        assert abs(first.gamma2 - gamma_f) <= 2e-3

    def test_strictly_decreasing_beyond_terminal(self):
        rng = np.random.default_rng(23)
        checked = 0
        for state in q.sample_freezing_states(30, seed=rng):
            rep = q.check_ns_discord(state)
            if rep.gamma_f < 0.05 or rep.gamma_f > 0.9:
                continue
            grid = np.linspace(rep.gamma_f + 1e-2, min(rep.gamma_f + 0.1, 1.0), 5)
            traj = q.sample_trajectory(state, gamma_grid=grid, method="regular")
            assert np.all(np.diff(traj.values) < 0.0), state
            checked += 1
        assert checked >= 15


class TestSampling:
    def test_sampled_states_all_freeze(self):
        states = q.sample_freezing_states(50, seed=5)
        assert len(states) == 50
        for state in states:
            assert q.check_ns_discord(state).satisfied
            assert q.is_physical(state)[0]

    def test_deficit_measure_sampling(self):
        for state in q.sample_freezing_states(25, seed=5, measure="qwd"):
            assert q.check_ns_workdeficit(state).satisfied

    def test_seed_reproducibility(self):
        a = q.sample_freezing_states(5, seed=9)
        b = q.sample_freezing_states(5, seed=9)
        assert all(x == y for x, y in zip(a, b))


class TestComplementarity:
    def test_bound_holds_on_sample(self):
        audit = q.complementarity_audit(count=2000, seed=0)
        assert audit.count == 2000
        assert audit.max_sum <= 1.0 + 1e-9
        assert audit.argmax_frozen + audit.argmax_gamma_f == pytest.approx(
            audit.max_sum
        )

    def test_sum_saturates_toward_weak_diagonal_corner(self):
        sums = []
        for c11 in (1e-2, 1e-3, 1e-4):
            rep = q.check_ns_discord(q.canonical_state(c11, -c11, 1.0))
            sums.append(rep.frozen_value + rep.gamma_f)
        assert all(s <= 1.0 + 1e-9 for s in sums)
        assert sums == sorted(sums)
        assert sums[-1] > 0.98


class TestSetGeometry:
    def test_nonconvexity_witness(self):
        wit = q.nonconvexity_witness(seed=0)
        assert q.check_ns_discord(wit.state_a).satisfied
        assert q.check_ns_discord(wit.state_b).satisfied
        assert not q.check_ns_discord(wit.mixture).satisfied
        assert wit.residual >= 1e-3
        assert wit.violated_clause in ("i", "ii", "iii")

    def test_witness_mixture_is_even(self):
        wit = q.nonconvexity_witness(seed=0)
        assert wit.weight == pytest.approx(0.5)
        assert wit.mixture.c11 == pytest.approx(
            0.5 * (wit.state_a.c11 + wit.state_b.c11)
        )


@pytest.fixture(scope="module")
def diagram():
    return q.phase_diagram(0.6, grid_step=0.1)


class TestPhaseDiagram:
    def test_grid_shape_and_statuses(self, diagram):
        assert len(diagram) == 21 * 21
        assert set(diagram.status) <= {"freeze", "nofreeze", "nonphysical"}
        frac = diagram.freezing_fraction()
        assert 0.0 < frac < 1.0

    def test_nonphysical_matches_disc_condition(self, diagram):
        radius2 = diagram.c33**2 + diagram.c01**2
        outside = radius2 > 1.0 + 1e-9
        assert np.all(diagram.status[outside] == "nonphysical")
        inside = radius2 <= 0.99
        assert not np.any(diagram.status[inside] == "nonphysical")

    def test_freeze_cells_have_finite_terminal(self, diagram):
        freeze = diagram.status == "freeze"
        assert np.all(np.isfinite(diagram.gamma_f[freeze]))
        assert np.all(diagram.gamma_f[freeze] > 0.0)
        assert np.all(diagram.gamma_f[freeze] <= 1.0)
        assert np.all(np.isnan(diagram.gamma_f[~freeze]))

    def test_frozen_value_depends_only_on_local_correlator(self, diagram):
        freeze = diagram.status == "freeze"
        by_c01 = {}
        for c01, val in zip(diagram.c01[freeze], diagram.frozen_value[freeze]):
            by_c01.setdefault(round(abs(c01), 9), []).append(val)
        for vals in by_c01.values():
            assert max(vals) - min(vals) <= 1e-12

    def test_terminal_grows_with_terminal_correlator(self, diagram):
        # at fixed c01 the frozen interval widens as |c33| grows
        freeze = diagram.status == "freeze"
        for c01 in np.unique(diagram.c01):
            col = freeze & (diagram.c01 == c01) & (diagram.c33 < 0.0)
            if np.count_nonzero(col) < 2:
                continue
            order = np.argsort(np.abs(diagram.c33[col]))
            gritty = diagram.gamma_f[col][order]
            assert np.all(np.diff(gritty) > 0.0), c01


class TestEntanglementInterplay:
    def test_freezing_without_entanglement(self):
        state = q.canonical_state(0.2, -0.1, 0.5)
        assert q.check_ns_discord(state).satisfied
        assert q.concurrence(q.to_density(state)) == pytest.approx(0.0)

    def test_entanglement_without_freezing(self):
        state = q.canonical_state(0.8, -0.4, 0.5)
        assert not q.check_ns_discord(state).satisfied
        assert q.concurrence(q.to_density(state)) > 0.3

    def test_anticorrelation_along_boundary_family(self):
        # maximal-terminal family: stronger c11 entangles more, freezes less
        stats = {}
        for c11 in (0.2, 0.8):
            gfs, concs = [], []
            for c01 in np.linspace(0.0, 0.8, 9):
                c33 = math.sqrt(1.0 - c01**2)
                state = q.canonical_state(
                    c11, -c11 * c33, c33, c10=c11 * c01, c01=c01
                )
                rep = q.check_ns_discord(state)
                assert rep.satisfied
                gfs.append(rep.gamma_f)
                concs.append(q.concurrence(q.to_density(state)))
            stats[c11] = (np.mean(gfs), np.mean(concs))
        assert stats[0.2][0] > stats[0.8][0]
        assert stats[0.2][1] < stats[0.8][1]


@given(
    c11=st.floats(0.05, 0.95),
    scale=st.floats(0.1, 1.0),
)
def test_terminal_root_property(c11, scale):
    # any zz-branch state built this way freezes iff |c33| > |c11|
    c33 = min(1.0, c11 + scale * (1.0 - c11))
    if c33 - c11 < 1e-3:
        return
    state = q.canonical_state(c11, -c11 * c33, c33)
    rep = q.check_ns_discord(state)
    assert rep.satisfied
    assert rep.gamma_f == pytest.approx(1.0 - math.sqrt(c11 / c33), abs=1e-9)
