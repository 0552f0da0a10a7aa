import numpy as np
import pytest

from app.core.errors import MemoryCapError, SizeError
from app.models.brauer import CoefficientVector, double_factorial
from app.services import brauer_linalg


class TestFactors:
    def test_p_and_z(self):
        assert brauer_linalg.p_factor(2, 3) == 2 * 3 * 4
        assert brauer_linalg.z_factor(2, 3) == 2 * 4 * 6
        assert brauer_linalg.p_factor(5, 1) == brauer_linalg.z_factor(5, 1) == 5

    @pytest.mark.parametrize("t, expected", [(1, 1), (2, 3), (3, 15), (4, 105), (7, 135135)])
    def test_double_factorial(self, t, expected):
        assert double_factorial(t) == expected
        assert isinstance(double_factorial(t), int)


class TestBasisCap:
    def test_within_cap_returns_size(self):
        assert brauer_linalg.check_basis_cap(5) == 945

    def test_default_cap_rejects_t6(self):
        with pytest.raises(MemoryCapError) as excinfo:
            brauer_linalg.gram_matrix(6, 2)
        assert excinfo.value.required == 10395
        assert "BRAUER_BASIS_CAP" in str(excinfo.value)

    def test_explicit_cap(self):
        with pytest.raises(MemoryCapError):
            brauer_linalg.weingarten_matrix(3, 2, basis_cap=14)
        with pytest.raises(MemoryCapError):
            brauer_linalg.gram_columns(3, 2, [0], basis_cap=14)
        assert brauer_linalg.weingarten_matrix(3, 2, basis_cap=15).size == 15


class TestGram:
    def test_t2_closed_form(self):
        d = 3
        entries = brauer_linalg.gram_matrix(2, d).entries
        expected = [[d * d, d, d], [d, d * d, d], [d, d, d * d]]
        assert entries.tolist() == expected

    def test_t1(self):
        assert brauer_linalg.gram_matrix(1, 1).entries.tolist() == [[1]]
        assert brauer_linalg.gram_matrix(1, 7).entries.tolist() == [[7]]

    @pytest.mark.parametrize("t", [1, 2, 3, 4])
    @pytest.mark.parametrize("d", [1, 2, 5])
    def test_row_sums_equal_z(self, t, d):
        z = brauer_linalg.z_factor(d, t)
        assert brauer_linalg.gram_matrix(t, d).row_sums() == [z] * brauer_linalg.gram_matrix(t, d).size

    def test_exact_for_large_d(self):
        d = 10 ** 6
        gram = brauer_linalg.gram_matrix(3, d)
        assert gram.entries[0, 0] == d ** 3
        assert isinstance(gram.entries[0, 0], int)

    def test_symmetric_and_read_only(self):
        entries = brauer_linalg.gram_matrix(3, 2).entries
        assert (entries == entries.T).all()
        with pytest.raises(ValueError):
            entries[0, 0] = 0

    def test_columns_match_full_matrix(self):
        full = brauer_linalg.gram_matrix(3, 4).entries
        cols = brauer_linalg.gram_columns(3, 4, [0, 5, 14])
        assert cols.tolist() == full[:, [0, 5, 14]].tolist()

    def test_rejects_nonpositive_d(self):
        with pytest.raises(SizeError):
            brauer_linalg.gram_matrix(2, 0)


class TestWeingarten:
    @pytest.mark.parametrize("t, d", [(2, 2), (2, 5), (3, 3), (4, 4)])
    def test_inverse_when_full_rank(self, t, d):
        w = brauer_linalg.weingarten_matrix(t, d)
        gram = brauer_linalg.gram_matrix(t, d).as_float()
        assert w.full_rank
        np.testing.assert_allclose(w.entries @ gram, np.eye(w.size), atol=1e-9)

    def test_d1_is_rank_one(self):
        w = brauer_linalg.weingarten_matrix(2, 1)
        assert w.rank == 1
        assert not w.full_rank
        np.testing.assert_allclose(w.entries, np.full((3, 3), 1.0 / 9.0), atol=1e-12)

    @pytest.mark.parametrize("t, d", [(3, 2), (4, 2), (4, 3)])
    def test_pseudo_inverse_identities(self, t, d):
        w = brauer_linalg.weingarten_matrix(t, d).entries
        gram = brauer_linalg.gram_matrix(t, d).as_float()
        np.testing.assert_allclose(gram @ w @ gram, gram, rtol=1e-8, atol=1e-8)
        np.testing.assert_allclose(w @ gram @ w, w, rtol=1e-8, atol=1e-10)
        np.testing.assert_allclose(w, w.T, atol=0)

    def test_twirl_coefficients_size_check(self):
        w = brauer_linalg.weingarten_matrix(2, 2)
        with pytest.raises(SizeError):
            brauer_linalg.twirl_coefficients(w, CoefficientVector(t=3, values=np.ones(15)))

    def test_coefficient_vector_length(self):
        with pytest.raises(SizeError):
            CoefficientVector(t=2, values=np.ones(4))

    def test_all_ones_overlaps_give_uniform_coefficients(self):
        d, t = 3, 3
        w = brauer_linalg.weingarten_matrix(t, d)
        c = brauer_linalg.twirl_coefficients(w, CoefficientVector(t=t, values=np.ones(15)))
        np.testing.assert_allclose(c.values, np.full(15, 1.0 / brauer_linalg.z_factor(d, t)), atol=1e-12)
