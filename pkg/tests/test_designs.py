"""
Exact-design behaviour of orthogonal orbits.

Core claims:
    - the orbit of a real state reproduces rho_br
    - states with |<psi*|psi>|^2 = 2/(d+1) give exact 2- and 3-designs
    - at t = 4 the constraint set is inconsistent for every d >= 2
"""
import math
from fractions import Fraction

import numpy as np
import pytest

from app.core.errors import DomainError, MemoryCapError
from app.models.operators import StateVector
from app.models.sampling import EnsembleKind, EnsembleSpec
from app.services import designs, sampling, tensor_rep


class TestOrbitMoment:
    @pytest.mark.parametrize("t, d", [(1, 3), (2, 2), (2, 4), (3, 3)])
    def test_real_state_twirls_to_rho_br(self, t, d):
        moment = designs.orbit_moment(StateVector.basis(d), t)
        np.testing.assert_allclose(moment.entries, tensor_rep.rho_br(d, t).entries, atol=1e-10)

    def test_depends_only_on_overlap(self):
        d, t = 3, 2
        a = designs.orbit_moment(designs.design_state_from_overlap(d, 0.4), t)
        amps = np.array([0.0, math.sqrt(0.3), 1j * math.sqrt(0.7)])
        b = designs.orbit_moment(StateVector.from_amplitudes(amps), t)
        assert designs.conjugate_overlap(StateVector.from_amplitudes(amps)) == pytest.approx(0.4)
        np.testing.assert_allclose(a.entries, b.entries, atol=1e-10)

    def test_complex_state_matches_sampled_orbit(self):
        amps = np.array([0.5, 0.5j, math.sqrt(0.5)])
        psi = StateVector.from_amplitudes(amps)
        exact = designs.orbit_moment(psi, 2)
        spec = EnsembleSpec(kind=EnsembleKind.ORTHOGONAL_ORBIT, d=3, t=2, seed_state=psi)
        sampled = sampling.empirical_moment(spec, 100000, seed=11, workers=2)
        assert float(np.max(np.abs(sampled.entries - exact.entries))) <= 1e-2
        assert float(np.max(np.abs(exact.entries - tensor_rep.rho_br(3, 2).entries))) > 0.05

    def test_partial_trace_drops_one_copy(self, random_state):
        psi = random_state(3)
        reduced = tensor_rep.partial_trace(designs.orbit_moment(psi, 3), 1)
        np.testing.assert_allclose(reduced.entries, designs.orbit_moment(psi, 2).entries, atol=1e-10)

    def test_invariant_under_rotating_the_seed(self, random_state, rng):
        psi = random_state(3)
        base = designs.orbit_moment(psi, 2).entries
        for _ in range(5):
            o = sampling.sample_haar_orthogonal(3, rng)
            rotated = StateVector.from_amplitudes(o @ psi.amplitudes)
            np.testing.assert_allclose(designs.orbit_moment(rotated, 2).entries, base, atol=1e-10)

    def test_basis_cap(self):
        with pytest.raises(MemoryCapError):
            designs.orbit_moment(StateVector.basis(2), 3, basis_cap=14)


class TestDesignStates:
    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    def test_overlap(self, d):
        psi = designs.construct_design_state(d)
        assert designs.conjugate_overlap(psi) ** 2 == pytest.approx(2 / (d + 1))

    def test_d2_amplitudes(self):
        psi = designs.construct_design_state(2)
        r = math.sqrt(2 / 3)
        assert psi.amplitudes[0] == pytest.approx(math.sqrt((1 - r) / 2))
        assert psi.amplitudes[1] == pytest.approx(1j * math.sqrt((1 + r) / 2))

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    @pytest.mark.parametrize("t", [2, 3])
    def test_exact_design(self, t, d):
        report = designs.exact_design_check(designs.construct_design_state(d), t)
        assert report.trace_distance_numeric <= 1e-9
        assert report.trace_distance_exact is None
        assert report.trace_distance_bound is None

    def test_fails_at_t4(self):
        report = designs.exact_design_check(designs.construct_design_state(3), 4)
        assert report.trace_distance_numeric > 1e-6

    def test_real_state_attaches_exact_distance(self):
        report = designs.exact_design_check(StateVector.basis(3), 3)
        assert report.trace_distance_exact == Fraction(3, 10)
        assert report.trace_distance_bound == tensor_rep.closed_form_distance(3, 3) == Fraction(3, 7)
        assert report.discrepancy <= 1e-9

    def test_d1_rejected(self):
        with pytest.raises(DomainError):
            designs.construct_design_state(1)

    @pytest.mark.parametrize("r", [-0.1, 1.5])
    def test_overlap_range(self, r):
        with pytest.raises(DomainError):
            designs.design_state_from_overlap(3, r)


class TestConstraints:
    @pytest.mark.parametrize("d", [1, 2, 3, 7])
    def test_t2_single_constraint(self, d):
        cs = designs.design_constraints(2, d)
        assert cs.constraints == ((2, Fraction(2, d + 1)),)
        assert cs.consistent
        assert cs.witness_r_squared == pytest.approx(2 / (d + 1))

    def test_t1_is_vacuous(self):
        cs = designs.design_constraints(1, 5)
        assert cs.constraints == ()
        assert cs.consistent
        assert cs.witness_r_squared is None

    def test_t3_matches_t2(self):
        cs = designs.design_constraints(3, 4)
        assert cs.constraints == ((2, Fraction(2, 5)),)
        assert cs.consistent

    def test_t4_d2(self):
        cs = designs.design_constraints(4, 2)
        assert cs.value_for(2) == Fraction(2, 3)
        assert cs.value_for(4) == Fraction(8, 15)
        assert not cs.consistent

    @pytest.mark.parametrize("d", range(2, 51))
    def test_t4_inconsistent(self, d):
        cs = designs.design_constraints(4, d)
        assert cs.value_for(4) == Fraction(8, (d + 1) * (d + 3))
        assert not cs.consistent

    def test_t4_d1_consistent(self):
        cs = designs.design_constraints(4, 1)
        assert cs.value_for(2) == cs.value_for(4) == 1
        assert cs.consistent

    def test_impossibility_report(self):
        report = designs.impossibility_report(4, 2)
        assert not report.consistent
        assert "(r^2)^2 = 4/9 != r^4 = 8/15" in report.notes

    def test_impossibility_needs_t4(self):
        with pytest.raises(DomainError):
            designs.impossibility_report(3, 2)


class TestMomentReport:
    def test_t2_d2(self):
        report = designs.moment_report(2, 2)
        assert report.trace_distance_exact == Fraction(1, 6)
        assert report.trace_distance_bound == Fraction(1, 4)
        assert report.trace_distance_numeric == pytest.approx(1 / 6, abs=1e-9)
        assert report.one_norm == pytest.approx(1 / 3, abs=1e-9)
        assert report.discrepancy <= 1e-9
        assert report.min_eigenvalue_check >= -1e-10

    def test_d1_is_exactly_zero(self):
        report = designs.moment_report(1, 3)
        assert report.trace_distance_numeric == pytest.approx(0.0, abs=1e-12)
        assert report.trace_distance_exact == 0
        assert report.trace_distance_bound == Fraction(3, 5)
        assert report.notes


class TestBounds:
    def test_d64(self):
        values = {t: designs.distance_bounds(64, t).closed_form for t in (2, 3, 4)}
        assert values == {2: Fraction(1, 66), 3: Fraction(3, 68), 4: Fraction(405, 4760)}
        for t in (3, 4):
            ratio = float(values[t] / values[2])
            assert abs(ratio - t * (t - 1) / 2) / (t * (t - 1) / 2) <= 0.15

    @pytest.mark.parametrize("d", [2, 3, 8, 64])
    @pytest.mark.parametrize("t", [2, 3, 4])
    def test_exact_below_closed_form(self, t, d):
        b = designs.distance_bounds(d, t)
        assert 0 < b.trace_distance < b.closed_form
        assert b.trace_distance == tensor_rep.harmonic_distance(d, t)

    @pytest.mark.parametrize("d", [8, 16, 32, 64])
    def test_sandwich(self, d):
        t = 2
        while t * t < d:
            b = designs.distance_bounds(d, t)
            td = float(b.closed_form)
            assert b.exponential_regime and b.quadratic_regime
            assert b.lower_exponential <= td <= b.upper_exponential
            assert b.lower_quadratic <= td <= b.upper_quadratic
            t += 1

    def test_regimes(self):
        b = designs.distance_bounds(9, 4)
        assert b.exponential_regime
        assert not b.quadratic_regime


class TestApproximateOrder:
    def test_d64(self):
        assert designs.approximate_design_order(64, 0.1) == 3
        assert designs.approximate_design_order(64, 0.02) == 1

    def test_monotone_in_eps(self):
        orders = [designs.approximate_design_order(100, eps) for eps in (0.01, 0.1, 0.5, 1.0)]
        assert orders == sorted(orders)

    @pytest.mark.parametrize("eps", [0.0, 2.0, -1.0])
    def test_eps_range(self, eps):
        with pytest.raises(DomainError):
            designs.approximate_design_order(10, eps)

    def test_d1(self):
        with pytest.raises(DomainError):
            designs.approximate_design_order(1, 0.1)


class TestScan:
    def test_minimum_near_design_overlap(self):
        d, t = 3, 2
        scan = designs.scan_overlap_family(t, d, points=101)
        best = min(scan, key=lambda p: p.trace_distance)
        assert best.r == pytest.approx(math.sqrt(2 / (d + 1)), abs=0.01)
        assert scan[-1].trace_distance == pytest.approx(float(tensor_rep.harmonic_distance(d, t)), abs=1e-9)

    def test_points(self):
        with pytest.raises(DomainError):
            designs.scan_overlap_family(2, 2, points=1)
