import math

import numpy as np
import pytest

from app.core.errors import SizeError
from app.models.operators import StateVector
from app.models.sampling import EnsembleKind, EnsembleSpec, ExperimentResult
from app.services import sampling, tensor_rep


class TestHaarSampling:
    @pytest.mark.parametrize("d", [1, 2, 5])
    def test_orthogonal(self, d, rng):
        o = sampling.sample_haar_orthogonal(d, rng)
        assert o.shape == (d, d)
        assert np.isrealobj(o)
        np.testing.assert_allclose(o.T @ o, np.eye(d), atol=1e-12)

    @pytest.mark.parametrize("d", [1, 3])
    def test_unitary(self, d, rng):
        u = sampling.sample_haar_unitary(d, rng)
        np.testing.assert_allclose(u.conj().T @ u, np.eye(d), atol=1e-12)

    def test_d1_orthogonal_is_a_fair_sign(self, rng):
        n = 10000
        signs = np.array([sampling.sample_haar_orthogonal(1, rng)[0, 0] for _ in range(n)])
        assert set(np.round(signs).astype(int)) == {-1, 1}
        plus = np.mean(signs > 0)
        assert abs(plus - 0.5) <= 3 * math.sqrt(0.25 / n)

    def test_d1_unitary_phase_is_uniform(self, rng):
        n = 100000
        phases = sampling._haar_batch(1, n, rng, unitary=True)[:, 0, 0]
        np.testing.assert_allclose(np.abs(phases), 1.0, atol=1e-12)
        assert abs(np.mean(phases)) <= 3 / math.sqrt(n)

    def test_orthogonal_first_moment(self, rng):
        batch = sampling._haar_batch(3, 20000, rng, unitary=False)
        assert np.max(np.abs(batch.mean(axis=0))) <= 0.05

    def test_orthogonal_second_moment(self, rng):
        batch = sampling._haar_batch(3, 20000, rng, unitary=False)
        assert np.mean(batch[:, 0, 0] ** 2) == pytest.approx(1 / 3, abs=0.01)

    def test_unitary_entries_have_mean_square_one_over_d(self, rng):
        d = 4
        batch = sampling._haar_batch(d, 20000, rng, unitary=True)
        np.testing.assert_allclose(np.mean(np.abs(batch) ** 2, axis=0), np.full((d, d), 1 / d), atol=0.01)

    def test_unitary_twirl_is_depolarizing(self, rng):
        d = 3
        x = np.diag([1.0, 2.0, -0.5]) + np.triu(np.full((d, d), 0.3), 1)
        batch = sampling._haar_batch(d, 50000, rng, unitary=True)
        twirled = np.mean(batch @ x @ batch.conj().transpose(0, 2, 1), axis=0)
        np.testing.assert_allclose(twirled, np.trace(x) / d * np.eye(d), atol=0.05)

    def test_rejects_nonpositive_d(self, rng):
        with pytest.raises(SizeError):
            sampling.sample_haar_unitary(0, rng)


class TestWorkers:
    def test_split(self):
        assert sampling._split(10, 3) == [4, 3, 3]
        assert sum(sampling._split(7, 7)) == 7

    def test_resolve(self):
        assert sampling.resolve_workers(3) == 3
        assert sampling.resolve_workers(None) >= 1
        with pytest.raises(SizeError):
            sampling.resolve_workers(0)


class TestEmpiricalMoment:
    def test_reproducible(self):
        spec = EnsembleSpec(kind=EnsembleKind.UNITARY_HAAR, d=2, t=2)
        a = sampling.empirical_moment(spec, 500, seed=7, workers=2)
        b = sampling.empirical_moment(spec, 500, seed=7, workers=2)
        assert np.array_equal(a.entries, b.entries)
        assert a.trace().real == pytest.approx(1.0)

    def test_single_draw_is_a_pure_state(self):
        spec = EnsembleSpec(kind=EnsembleKind.ORTHOGONAL_ORBIT, d=3, t=2, seed_state=StateVector.basis(3))
        moment = sampling.empirical_moment(spec, 1, seed=9, workers=1).entries
        np.testing.assert_allclose(moment @ moment, moment, atol=1e-12)
        assert np.trace(moment).real == pytest.approx(1.0)
        assert np.linalg.matrix_rank(moment, tol=1e-9) == 1

    def test_rejects_empty(self):
        spec = EnsembleSpec(kind=EnsembleKind.UNITARY_HAAR, d=2, t=1)
        with pytest.raises(SizeError):
            sampling.empirical_moment(spec, 0)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "kind, target",
        [(EnsembleKind.UNITARY_HAAR, tensor_rep.rho_sym), (EnsembleKind.ORTHOGONAL_ORBIT, tensor_rep.rho_br)],
    )
    def test_converges(self, kind, target):
        spec = EnsembleSpec(kind=kind, d=2, t=2, seed_state=StateVector.basis(2))
        moment = sampling.empirical_moment(spec, 100000, seed=11, workers=4)
        assert np.max(np.abs(moment.entries - target(2, 2).entries)) <= 5e-3


class TestHelstrom:
    def test_reproducible_across_runs(self):
        a = sampling.helstrom_experiment(2, 2, 2000, seed=3, workers=2)
        b = sampling.helstrom_experiment(2, 2, 2000, seed=3, workers=2)
        assert a.empirical_success == b.empirical_success
        assert a.seed == 3 and a.workers == 2

    def test_predicted(self):
        result = sampling.helstrom_experiment(2, 2, 200, seed=1, workers=1)
        assert result.predicted_success == pytest.approx(7 / 12, abs=1e-12)

    def test_one_dimension_cannot_be_distinguished(self):
        result = sampling.helstrom_experiment(2, 1, 4000, seed=2, workers=1)
        assert result.predicted_success == pytest.approx(0.5, abs=1e-12)
        assert result.deviation_in_sigma <= 3.0

    def test_t1_is_a_coin_flip(self):
        result = sampling.helstrom_experiment(1, 3, 5000, seed=5, workers=2)
        assert result.predicted_success == pytest.approx(0.5)
        assert result.deviation_in_sigma <= 3.0

    @pytest.mark.slow
    @pytest.mark.parametrize("t, d", [(2, 2), (3, 9)])
    def test_matches_exact_distance(self, t, d):
        result = sampling.helstrom_experiment(t, d, 20000, seed=20240917, workers=4)
        assert result.predicted_success == pytest.approx(0.5 + 0.5 * float(tensor_rep.harmonic_distance(d, t)), abs=1e-9)
        assert result.deviation_in_sigma <= 3.0

    def test_std_error(self):
        result = ExperimentResult(
            t=2, d=2, n_samples=100, empirical_success=0.5, predicted_success=0.5, seed=0, workers=1, elapsed=0.0
        )
        assert result.std_error == pytest.approx(0.05)
        assert result.deviation_in_sigma == 0.0
