import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistkit import clifford as cl

TOL = 1e-14

rapidities = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
axes = st.tuples(
    st.floats(min_value=-1.0, max_value=1.0),
    st.floats(min_value=-1.0, max_value=1.0),
    st.floats(min_value=-1.0, max_value=1.0),
).filter(lambda n: np.linalg.norm(n) > 0.1)


class TestGammaMatrices:
    def test_pauli_values(self):
        np.testing.assert_array_equal(cl.PAULI[0], np.array([[0, 1], [1, 0]], dtype=complex))
        np.testing.assert_array_equal(cl.PAULI[1], np.array([[0, -1j], [1j, 0]]))
        np.testing.assert_array_equal(cl.PAULI[2], np.array([[1, 0], [0, -1]], dtype=complex))

    def test_gamma5_diagonal(self):
        np.testing.assert_allclose(cl.GAMMA5, np.diag([1, 1, -1, -1]).astype(complex), atol=TOL)

    def test_gamma5_product_orderings_agree(self):
        alt = cl.GAMMA[1] @ cl.GAMMA[2] @ cl.GAMMA[3] @ cl.GAMMA[0]
        np.testing.assert_allclose(alt, cl.GAMMA5, atol=TOL)

    def test_euclidean_anticommutators(self):
        for mu in range(4):
            for nu in range(mu, 4):
                expected = 2.0 * (mu == nu) * cl.I4
                got = cl.anticommutator(cl.GAMMA[mu], cl.GAMMA[nu])
                np.testing.assert_allclose(got, expected, atol=TOL)

    def test_minkowski_anticommutators(self):
        for mu in range(4):
            for nu in range(mu, 4):
                expected = 2.0 * cl.ETA[mu, nu] * cl.I4
                got = cl.anticommutator(cl.GAMMA_M[mu], cl.GAMMA_M[nu])
                np.testing.assert_allclose(got, expected, atol=TOL)

    def test_gammas_self_adjoint(self):
        for mu in range(4):
            np.testing.assert_allclose(cl.GAMMA[mu], cl.GAMMA[mu].conj().T, atol=TOL)

    def test_twist_flips_spatial_gammas(self):
        np.testing.assert_allclose(cl.twist_gamma(0), cl.GAMMA[0], atol=TOL)
        for j in (1, 2, 3):
            np.testing.assert_allclose(cl.twist_gamma(j), -cl.GAMMA[j], atol=TOL)

    def test_block_sum_and_difference(self):
        for mu in range(4):
            s = cl.SIGMA[mu] + cl.SIGMA_TILDE[mu]
            d = cl.SIGMA[mu] - cl.SIGMA_TILDE[mu]
            if mu == 0:
                np.testing.assert_allclose(s, 2 * cl.I2, atol=TOL)
                np.testing.assert_allclose(d, 0 * cl.I2, atol=TOL)
            else:
                np.testing.assert_allclose(s, 0 * cl.I2, atol=TOL)
                np.testing.assert_allclose(d, -2j * cl.PAULI[mu - 1], atol=TOL)

    def test_minkowski_gamma5(self):
        np.testing.assert_allclose(cl.GAMMA5_M, -1j * cl.GAMMA5, atol=TOL)


class TestSpinBoost:
    def test_identity(self):
        s = cl.SpinBoost(0.0)
        np.testing.assert_allclose(s.matrix, cl.I4, atol=TOL)
        np.testing.assert_allclose(cl.lorentz_matrix(s), np.eye(4), atol=TOL)

    def test_zero_axis_rejected(self):
        with pytest.raises(ValueError):
            cl.SpinBoost(1.0, (0.0, 0.0, 0.0))

    @given(rapidities, axes)
    @settings(max_examples=60, deadline=None)
    def test_self_adjoint_not_unitary(self, a, axis):
        s = cl.SpinBoost(a, axis)
        np.testing.assert_allclose(s.matrix, s.matrix.conj().T, atol=1e-12)
        if abs(a) > 1e-3:
            assert np.max(np.abs(s.matrix @ s.matrix.conj().T - cl.I4)) > 1e-4

    @given(rapidities, axes)
    @settings(max_examples=60, deadline=None)
    def test_inverse_blocks(self, a, axis):
        s = cl.SpinBoost(a, axis)
        np.testing.assert_allclose(s.matrix @ s.inverse, cl.I4, atol=1e-12)
        np.testing.assert_allclose(
            s.lambda_plus @ s.lambda_minus, cl.I2, atol=1e-12
        )

    @given(rapidities, axes)
    @settings(max_examples=60, deadline=None)
    def test_gamma0_conjugation_inverts(self, a, axis):
        s = cl.SpinBoost(a, axis)
        np.testing.assert_allclose(cl.GAMMA0 @ s.matrix @ cl.GAMMA0, s.inverse, atol=1e-12)

    @given(rapidities, axes)
    @settings(max_examples=60, deadline=None)
    def test_commutes_with_chirality(self, a, axis):
        s = cl.SpinBoost(a, axis)
        np.testing.assert_allclose(
            s.matrix @ cl.GAMMA5, cl.GAMMA5 @ s.matrix, atol=1e-12
        )

    @given(rapidities, axes)
    @settings(max_examples=60, deadline=None)
    def test_boosted_gamma_blocks(self, a, axis):
        s = cl.SpinBoost(a, axis)
        s_inv = s.inverse
        for mu in range(4):
            full = s.matrix @ cl.GAMMA[mu] @ s_inv
            np.testing.assert_allclose(full, s.gamma_boosted(mu), atol=1e-12)

    def test_conjugation_block_identity(self):
        # sigma_2 intertwines Lambda_+ with the conjugate of Lambda_-.
        s = cl.SpinBoost(0.7, (0.3, -0.5, 0.8))
        np.testing.assert_allclose(
            s.lambda_plus @ cl.PAULI[1], cl.PAULI[1] @ s.lambda_minus.conj(), atol=1e-12
        )
        np.testing.assert_allclose(
            s.lambda_minus @ cl.PAULI[1], cl.PAULI[1] @ s.lambda_plus.conj(), atol=1e-12
        )


class TestLorentzExtraction:
    def test_z_boost_entries(self):
        a = 0.45
        lam = cl.lorentz_matrix(cl.SpinBoost(a, (0, 0, 1)))
        b = 2 * a
        expected = np.eye(4)
        expected[0, 0] = expected[3, 3] = np.cosh(b)
        expected[0, 3] = expected[3, 0] = -np.sinh(b)
        np.testing.assert_allclose(lam, expected, atol=1e-12)

    @given(rapidities, axes)
    @settings(max_examples=80, deadline=None)
    def test_preserves_metric(self, a, axis):
        lam = cl.lorentz_matrix(cl.SpinBoost(a, axis))
        np.testing.assert_allclose(lam.T @ cl.ETA @ lam, cl.ETA, atol=1e-10)
        assert abs(np.linalg.det(lam) - 1.0) < 1e-10
        assert lam[0, 0] >= 1.0 - 1e-12

    @given(
        st.floats(min_value=-1.0, max_value=1.0),
        st.floats(min_value=-1.0, max_value=1.0),
        axes,
    )
    @settings(max_examples=40, deadline=None)
    def test_rapidity_additivity(self, a1, a2, axis):
        lam1 = cl.lorentz_matrix(cl.SpinBoost(a1, axis))
        lam2 = cl.lorentz_matrix(cl.SpinBoost(a2, axis))
        lam12 = cl.lorentz_matrix(cl.SpinBoost(a1 + a2, axis))
        np.testing.assert_allclose(lam1 @ lam2, lam12, atol=1e-10)

    @given(rapidities, axes)
    @settings(max_examples=60, deadline=None)
    def test_covector_norm_invariant(self, a, axis):
        rng = np.random.default_rng(7)
        p = rng.normal(size=4)
        q = cl.boost_covector(cl.SpinBoost(a, axis), p)
        np.testing.assert_allclose(q @ cl.ETA @ q, p @ cl.ETA @ p, atol=1e-9)
