"""Structure checks for the three torus geometries."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from twistkit.geometries import (
    DoubledGeometry,
    ElectrodynamicsGeometry,
    Element,
    ManifoldGeometry,
    chiral_vector_operator,
    chiral_vector_parameters,
    function_matrix_sum,
    random_element,
    sector_block,
    selfadjoint_defect_parameters,
    wave_phase,
)
from twistkit.clifford import SpinBoost
from twistkit.operator_algebra import (
    FieldOperator,
    commutator,
    normal_form_distance,
    operator_equal,
    twist_by,
)
from twistkit.torus_fields import FourierScalar, random_scalar, random_section

seeds = st.integers(min_value=0, max_value=2**32 - 1)

GEOMETRY_FACTORIES = {
    "manifold": ManifoldGeometry,
    "doubled": DoubledGeometry,
    "electro": lambda: ElectrodynamicsGeometry(d=0.8 - 0.3j),
}


GEO_PARAMS = pytest.mark.parametrize("geo_name", sorted(GEOMETRY_FACTORIES))


@pytest.fixture(params=sorted(GEOMETRY_FACTORIES), name="geo")
def _geo(request):
    return GEOMETRY_FACTORIES[request.param]()


class TestAxioms:
    def test_real_structure_squares_to_minus_one(self, geo):
        j = geo.real_structure
        minus_id = FieldOperator.identity(geo.fiber_dim).scale(-1.0)
        assert normal_form_distance(j @ j, minus_id) < 1e-14

    def test_real_structure_commutes_with_dirac(self, geo):
        j = geo.real_structure
        d = geo.dirac
        assert normal_form_distance(j @ d, d @ j) < 1e-14

    def test_real_structure_grading_sign(self, geo):
        # single sector commutes; an internal swap with odd grading flips it
        sign = geo.ko_signs[2]
        j = geo.real_structure
        g = FieldOperator.from_matrix(geo.grading_matrix)
        assert normal_form_distance(j @ g, (g @ j).scale(sign)) < 1e-14

    def test_real_structure_anticommutes_with_r(self, geo):
        j = geo.real_structure
        r = geo.r_operator
        assert normal_form_distance(j @ r, (r @ j).scale(-1.0)) < 1e-14

    def test_r_is_selfadjoint_involution(self, geo):
        r = geo.r_matrix
        assert np.allclose(r @ r, np.eye(geo.fiber_dim), atol=1e-14)
        assert np.allclose(r, r.conj().T, atol=1e-14)

    def test_grading_squares_to_one_and_anticommutes_with_dirac(self, geo):
        g = geo.grading_matrix
        assert np.allclose(g @ g, np.eye(geo.fiber_dim), atol=1e-14)
        g_op = FieldOperator.from_matrix(g)
        d = geo.dirac
        assert normal_form_distance(g_op @ d, (d @ g_op).scale(-1.0)) < 1e-14

    @GEO_PARAMS
    @given(seeds)
    @settings(max_examples=10, deadline=None)
    def test_representation_is_even(self, geo_name, seed):
        geo = GEOMETRY_FACTORIES[geo_name]()
        rng = np.random.default_rng(seed)
        a = random_element(rng, geo.n_slots)
        g_op = FieldOperator.from_matrix(geo.grading_matrix)
        pa = geo.represent(a)
        assert normal_form_distance(g_op @ pa, pa @ g_op) < 1e-12

    @GEO_PARAMS
    @given(seeds)
    @settings(max_examples=10, deadline=None)
    def test_twist_is_conjugation_by_r(self, geo_name, seed):
        geo = GEOMETRY_FACTORIES[geo_name]()
        rng = np.random.default_rng(seed)
        a = random_element(rng, geo.n_slots)
        lhs = geo.represent(a.flip())
        rhs = geo.twist(geo.represent(a))
        assert normal_form_distance(lhs, rhs) < 1e-12

    @GEO_PARAMS
    @given(seeds)
    @settings(max_examples=10, deadline=None)
    def test_representation_homomorphism_and_star(self, geo_name, seed):
        geo = GEOMETRY_FACTORIES[geo_name]()
        rng = np.random.default_rng(seed)
        a = random_element(rng, geo.n_slots)
        b = random_element(rng, geo.n_slots)
        assert normal_form_distance(
            geo.represent(a * b), geo.represent(a) @ geo.represent(b)
        ) < 1e-12
        assert normal_form_distance(
            geo.represent(a.star()), geo.represent(a).adjoint()
        ) < 1e-12

    @GEO_PARAMS
    @given(seeds)
    @settings(max_examples=10, deadline=None)
    def test_order_zero_condition(self, geo_name, seed):
        geo = GEOMETRY_FACTORIES[geo_name]()
        rng = np.random.default_rng(seed)
        a = random_element(rng, geo.n_slots)
        b = random_element(rng, geo.n_slots)
        b_opp = geo.real_conjugate(geo.represent(b))
        assert commutator(geo.represent(a), b_opp).max_abs() < 1e-12

    @GEO_PARAMS
    @given(seeds)
    @settings(max_examples=10, deadline=None)
    def test_twisted_first_order_condition(self, geo_name, seed):
        geo = GEOMETRY_FACTORIES[geo_name]()
        rng = np.random.default_rng(seed)
        a = random_element(rng, geo.n_slots)
        b = random_element(rng, geo.n_slots)
        t = geo.twisted_commutator(a)
        b_opp = geo.real_conjugate(geo.represent(b))
        resid = t @ b_opp - geo.twist(b_opp) @ t
        assert resid.max_abs() < 1e-12


class TestManifoldForms:
    @given(seeds)
    @settings(max_examples=15, deadline=None)
    def test_twisted_commutator_closed_form(self, seed):
        geo = ManifoldGeometry()
        rng = np.random.default_rng(seed)
        a = random_element(rng, 1)
        h = [a.unprimed[0].derivative(mu) for mu in range(4)]
        hp = [a.primed[0].derivative(mu) for mu in range(4)]
        assert normal_form_distance(
            geo.twisted_commutator(a), chiral_vector_operator(h, hp)
        ) < 1e-12

    @given(seeds)
    @settings(max_examples=15, deadline=None)
    def test_one_form_parameters_closed_form(self, seed):
        geo = ManifoldGeometry()
        rng = np.random.default_rng(seed)
        pairs = [
            (random_element(rng, 1), random_element(rng, 1)) for _ in range(2)
        ]
        omega = geo.one_form(pairs)
        h, hp = geo.one_form_parameters(omega)
        for mu in range(4):
            h_expect = FourierScalar.zero()
            hp_expect = FourierScalar.zero()
            for a, b in pairs:
                h_expect = h_expect + b.primed[0] * a.unprimed[0].derivative(mu)
                hp_expect = hp_expect + b.unprimed[0] * a.primed[0].derivative(mu)
            assert (h[mu] - h_expect).max_abs() < 1e-12
            assert (hp[mu] - hp_expect).max_abs() < 1e-12

    @given(seeds)
    @settings(max_examples=15, deadline=None)
    def test_one_form_parameter_roundtrip(self, seed):
        geo = ManifoldGeometry()
        rng = np.random.default_rng(seed)
        pairs = [(random_element(rng, 1), random_element(rng, 1))]
        omega = geo.one_form(pairs)
        h, hp = geo.one_form_parameters(omega)
        assert operator_equal(
            omega, geo.one_form_from_parameters(h, hp), probe_cutoff=2
        ).equal

    @given(seeds)
    @settings(max_examples=15, deadline=None)
    def test_fluctuation_conjugates_parameters(self, seed):
        geo = ManifoldGeometry()
        rng = np.random.default_rng(seed)
        omega = geo.one_form([(random_element(rng, 1), random_element(rng, 1))])
        h, hp = geo.one_form_parameters(omega)
        mirrored = geo.real_conjugate(omega)
        h2, hp2 = geo.one_form_parameters(mirrored)
        for mu in range(4):
            assert (h2[mu] - h[mu].conjugate()).max_abs() < 1e-12
            assert (hp2[mu] - hp[mu].conjugate()).max_abs() < 1e-12

    @given(seeds)
    @settings(max_examples=15, deadline=None)
    def test_selfadjointness_routes_agree(self, seed):
        geo = ManifoldGeometry()
        rng = np.random.default_rng(seed)
        h = [random_scalar(rng) for _ in range(4)]
        # parameter-level self-adjoint choice: second copy = -conj(first)
        hp = [(-1.0) * f.conjugate() for f in h]
        omega = geo.one_form_from_parameters(h, hp)
        assert (omega - omega.adjoint()).max_abs() < 1e-12
        assert selfadjoint_defect_parameters(h, hp) < 1e-12
        # generic parameters fail both routes together
        hp_bad = [f + FourierScalar.one() for f in hp]
        omega_bad = geo.one_form_from_parameters(h, hp_bad)
        op_defect = (omega_bad - omega_bad.adjoint()).max_abs()
        par_defect = selfadjoint_defect_parameters(h, hp_bad)
        assert op_defect > 1e-6 and par_defect > 1e-6

    def test_imaginary_parameters_have_silent_fluctuation(self):
        rng = np.random.default_rng(5)
        geo = ManifoldGeometry()
        h = [1j * random_scalar(rng, real=True) for _ in range(4)]
        hp = [1j * random_scalar(rng, real=True) for _ in range(4)]
        omega = geo.one_form_from_parameters(h, hp)
        assert geo.fluctuation(omega).max_abs() < 1e-14


@pytest.mark.parametrize("geo_name", ["doubled", "electro"])
class TestSectoredFluctuations:
    def _geo(self, geo_name):
        return GEOMETRY_FACTORIES[geo_name]()

    @given(seeds)
    @settings(max_examples=10, deadline=None)
    def test_fluctuation_z_closed_form(self, geo_name, seed):
        geo = self._geo(geo_name)
        rng = np.random.default_rng(seed)
        a = random_element(rng, 2)
        b = random_element(rng, 2)
        fluct = geo.fluctuation(geo.one_form([(a, b)]))
        z, zp = geo.fluctuation_parameters(fluct)
        (v, w), (vp, wp) = a.unprimed, a.primed
        (f, g), (fp, gp) = b.unprimed, b.primed
        for mu in range(4):
            z_expect = fp * v.derivative(mu) + (
                g * wp.derivative(mu)
            ).conjugate()
            zp_expect = f * vp.derivative(mu) + (
                gp * w.derivative(mu)
            ).conjugate()
            assert (z[mu] - z_expect).max_abs() < 1e-12
            assert (zp[mu] - zp_expect).max_abs() < 1e-12

    @given(seeds)
    @settings(max_examples=10, deadline=None)
    def test_fluctuation_roundtrip(self, geo_name, seed):
        geo = self._geo(geo_name)
        rng = np.random.default_rng(seed)
        pairs = [
            (random_element(rng, 2), random_element(rng, 2)) for _ in range(2)
        ]
        fluct = geo.fluctuation(geo.one_form(pairs))
        z, zp = geo.fluctuation_parameters(fluct)
        rebuilt = geo.fluctuation_from_z(z, zp)
        assert operator_equal(fluct, rebuilt, probe_cutoff=2).equal

    @given(seeds)
    @settings(max_examples=10, deadline=None)
    def test_selfadjoint_fluctuation_structure(self, geo_name, seed):
        geo = self._geo(geo_name)
        rng = np.random.default_rng(seed)
        f = [random_scalar(rng, real=True) for _ in range(4)]
        g = [random_scalar(rng, real=True) for _ in range(4)]
        fluct = geo.selfadjoint_fluctuation(f, g)
        assert (fluct - fluct.adjoint()).max_abs() < 1e-12
        z = [f[mu] + 1j * g[mu] for mu in range(4)]
        zp = [(-1.0) * f[mu] + 1j * g[mu] for mu in range(4)]
        assert normal_form_distance(fluct, geo.fluctuation_from_z(z, zp)) < 1e-12
        f2, g2 = geo.vector_potentials(fluct)
        for mu in range(4):
            assert (f2[mu] - f[mu]).max_abs() < 1e-12
            assert (g2[mu] - g[mu]).max_abs() < 1e-12

    @given(seeds)
    @settings(max_examples=10, deadline=None)
    def test_selfadjointness_criterion_on_z(self, geo_name, seed):
        geo = self._geo(geo_name)
        rng = np.random.default_rng(seed)
        fluct = geo.fluctuation(
            geo.one_form([(random_element(rng, 2), random_element(rng, 2))])
        )
        z, zp = geo.fluctuation_parameters(fluct)
        op_defect = (fluct - fluct.adjoint()).max_abs()
        par_defect = selfadjoint_defect_parameters(z, zp)
        assert (op_defect < 1e-12) == (par_defect < 1e-12)
        # symmetrize: adding the adjoint gives zp = -conj(z) exactly
        sym = fluct + fluct.adjoint()
        zs, zps = geo.fluctuation_parameters(sym)
        assert selfadjoint_defect_parameters(zs, zps) < 1e-12


class TestElectroFinitePart:
    def test_finite_commutator_vanishes_exactly(self):
        rng = np.random.default_rng(42)
        geo = ElectrodynamicsGeometry(d=1.3 + 0.4j)
        for _ in range(5):
            a = random_element(rng, 2)
            t = (
                geo.dirac_finite_part @ geo.represent(a)
                - geo.twist(geo.represent(a)) @ geo.dirac_finite_part
            )
            assert t.max_abs() == 0.0


class TestGauge:
    @given(seeds)
    @settings(max_examples=10, deadline=None)
    def test_manifold_gauge_law(self, seed):
        geo = ManifoldGeometry()
        rng = np.random.default_rng(seed)
        k = tuple(int(v) for v in rng.integers(-2, 3, size=4))
        kp = tuple(int(v) for v in rng.integers(-2, 3, size=4))
        u = geo.element(wave_phase(k, 0.3), wave_phase(kp, -1.1))
        assert u.unitarity_defect() < 1e-12
        omega = geo.one_form([(random_element(rng, 1), random_element(rng, 1))])
        h, hp = geo.one_form_parameters(omega)
        h2, hp2 = geo.one_form_parameters(geo.gauge_transformed(omega, u))
        for mu in range(4):
            shift = FourierScalar.constant(-1j * k[mu])
            shift_p = FourierScalar.constant(-1j * kp[mu])
            assert (h2[mu] - h[mu] - shift).max_abs() < 1e-12
            assert (hp2[mu] - hp[mu] - shift_p).max_abs() < 1e-12

    @given(seeds)
    @settings(max_examples=8, deadline=None)
    def test_sectored_gauge_law(self, seed):
        rng = np.random.default_rng(seed)
        for geo in (DoubledGeometry(), ElectrodynamicsGeometry(d=0.5 + 0.2j)):
            ka = tuple(int(v) for v in rng.integers(-1, 2, size=4))
            kb = tuple(int(v) for v in rng.integers(-1, 2, size=4))
            kap = tuple(int(v) for v in rng.integers(-1, 2, size=4))
            kbp = tuple(int(v) for v in rng.integers(-1, 2, size=4))
            u = geo.element(
                (wave_phase(ka, 0.2), wave_phase(kb, 0.7)),
                (wave_phase(kap, -0.4), wave_phase(kbp, 1.5)),
            )
            omega = geo.one_form(
                [(random_element(rng, 2), random_element(rng, 2))]
            )
            z, zp = geo.fluctuation_parameters(geo.fluctuation(omega))
            gauged = geo.gauge_transformed(omega, u)
            z2, zp2 = geo.fluctuation_parameters(geo.fluctuation(gauged))
            for mu in range(4):
                # theta = alpha - beta', theta' = alpha' - beta
                shift = FourierScalar.constant(-1j * (ka[mu] - kbp[mu]))
                shift_p = FourierScalar.constant(-1j * (kap[mu] - kb[mu]))
                assert (z2[mu] - z[mu] - shift).max_abs() < 1e-12
                assert (zp2[mu] - zp[mu] - shift_p).max_abs() < 1e-12

    @given(seeds)
    @settings(max_examples=8, deadline=None)
    def test_matched_phase_preserves_potential_f(self, seed):
        # theta = theta' leaves f alone and shifts g by -dtheta
        rng = np.random.default_rng(seed)
        geo = ElectrodynamicsGeometry(d=-1j)
        ka = tuple(int(v) for v in rng.integers(-1, 2, size=4))
        kb = tuple(int(v) for v in rng.integers(-1, 2, size=4))
        u = geo.element(
            (wave_phase(ka), wave_phase(kb)),
            (wave_phase(ka), wave_phase(kb)),
        )
        f = [random_scalar(rng, real=True) for _ in range(4)]
        g = [random_scalar(rng, real=True) for _ in range(4)]
        # build a one-form whose fluctuation realizes (f, g), then gauge it
        fluct = geo.selfadjoint_fluctuation(f, g)
        z, zp = geo.fluctuation_parameters(fluct)
        gauged_z = [
            z[mu] + FourierScalar.constant(-1j * (ka[mu] - kb[mu]))
            for mu in range(4)
        ]
        gauged = geo.fluctuation_from_z(
            gauged_z, [(-1.0) * c.conjugate() for c in gauged_z]
        )
        f2, g2 = geo.vector_potentials(gauged)
        for mu in range(4):
            assert (f2[mu] - f[mu]).max_abs() < 1e-12
            expected = g[mu] + FourierScalar.constant(-(ka[mu] - kb[mu]))
            assert (g2[mu] - expected).max_abs() < 1e-12

    def test_manifold_adjoint_action_trivial(self):
        geo = ManifoldGeometry()
        u = geo.element(wave_phase((1, 0, -2, 0), 0.9), wave_phase((0, 3, 0, 1)))
        cmp = operator_equal(
            geo.adjoint_action(u), FieldOperator.identity(4), probe_cutoff=2
        )
        assert cmp.equal

    def test_sectored_adjoint_action_phases(self):
        for geo in (DoubledGeometry(), ElectrodynamicsGeometry(d=-1j)):
            ka, kb = (1, 0, 0, -1), (0, 2, 0, 0)
            kap, kbp = (0, 1, 1, 0), (-1, 0, 2, 0)
            u = geo.element(
                (wave_phase(ka), wave_phase(kb)),
                (wave_phase(kap), wave_phase(kbp)),
            )
            theta = wave_phase(ka) * wave_phase(kbp).conjugate()
            theta_p = wave_phase(kap) * wave_phase(kb).conjugate()
            block = [theta, theta, theta_p, theta_p]
            block_swap = [theta_p, theta_p, theta, theta]
            if geo.n_sectors == 2:
                entries = block + [c.conjugate() for c in block]
            else:
                entries = (
                    block
                    + block_swap
                    + [c.conjugate() for c in block]
                    + [c.conjugate() for c in block_swap]
                )
            expected = FieldOperator.from_function_matrix(
                [
                    [entries[i] if i == j else None for j in range(geo.fiber_dim)]
                    for i in range(geo.fiber_dim)
                ]
            )
            assert normal_form_distance(geo.adjoint_action(u), expected) < 1e-12

    def test_matched_adjoint_action_commutes_with_r(self):
        geo = DoubledGeometry()
        u = geo.element(
            (wave_phase((1, 0, 0, 0)), wave_phase((0, 0, 1, 0))),
            (wave_phase((1, 0, 0, 0)), wave_phase((0, 0, 1, 0))),
        )
        big_u = geo.adjoint_action(u)
        r = geo.r_operator
        assert normal_form_distance(big_u @ r, r @ big_u) < 1e-12


class TestDistinguishedSections:
    def test_r_invariance_is_exact(self, geo):
        rng = np.random.default_rng(3)
        fields = [random_section(rng, 2) for _ in range(geo.n_sectors)]
        eta = geo.h_r_section(fields)
        assert geo.r_defect(eta) == 0.0

    def test_chirality_real_overlap_vanishes(self, geo):
        assert geo.chirality_real_overlap() == 0.0

    def test_plus_projector_is_projector(self, geo):
        p = geo.plus_projector
        assert np.allclose(p @ p, p, atol=1e-14)


class TestBoostCompatibility:
    @given(st.floats(-1.5, 1.5), seeds)
    @settings(max_examples=10, deadline=None)
    def test_sectored_boost_commutes_with_real_structure(self, a, seed):
        rng = np.random.default_rng(seed)
        axis = rng.normal(size=3)
        boost = SpinBoost(a, tuple(axis / np.linalg.norm(axis)))
        for geo in (DoubledGeometry(), ElectrodynamicsGeometry()):
            b = FieldOperator.from_matrix(geo.boost_slot2_matrix(boost))
            j = geo.real_structure
            assert normal_form_distance(j @ b, b @ j) < 1e-10

    @given(st.floats(-1.5, 1.5))
    @settings(max_examples=10, deadline=None)
    def test_r_exchanges_boost_and_inverse(self, a):
        boost = SpinBoost(a, (0.0, 1.0, 0.0))
        for geo in (ManifoldGeometry(), DoubledGeometry(), ElectrodynamicsGeometry()):
            b2 = geo.boost_slot2_matrix(boost)
            b2_inv = np.linalg.inv(b2)
            assert np.allclose(geo.r_matrix @ b2, b2_inv @ geo.r_matrix, atol=1e-10)

    @given(st.floats(-1.5, 1.5))
    @settings(max_examples=10, deadline=None)
    def test_manifold_real_structure_inverts_boost(self, a):
        geo = ManifoldGeometry()
        boost = SpinBoost(a, (1.0, 0.0, 0.0))
        j = geo.real_structure
        s_op = FieldOperator.from_matrix(boost.matrix)
        s_inv = FieldOperator.from_matrix(boost.inverse)
        assert normal_form_distance(j @ s_op, s_inv @ j) < 1e-10

    def test_boosted_dirac_uses_boosted_gammas(self):
        geo = ManifoldGeometry()
        boost = SpinBoost(0.7, (0.0, 0.0, 1.0))
        lhs = geo.boosted_operator(geo.dirac, boost)
        rhs = FieldOperator(
            4,
            {
                ((0, 0, 0, 0), (mu,)): -1j * boost.gamma_boosted(mu)
                for mu in range(4)
            },
        )
        assert normal_form_distance(lhs, rhs) < 1e-12
