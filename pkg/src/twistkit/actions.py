"""Fermionic action functionals on the R-invariant subspace.

The central object is the pairing ``A(phi, xi) = <J phi, R D xi>`` evaluated
on Grassmann-valued sections.  Inputs are plain Weyl fields (fiber-two
sections); :func:`promote_weyl_fields` replaces every amplitude ``a`` by
``a * theta`` with a fresh anticommuting generator ``theta``, so the pairing
collapses to a rank-two element of the exterior algebra.

Two independent evaluation routes are provided and must agree:

* :func:`fermionic_action` pushes the promoted sections through the actual
  operators (real structure, twist, Dirac) with Grassmann arithmetic;
* :func:`fermionic_action_quadratic` evaluates the same pairing on complex
  unit sections, one generator pair at a time, and reassembles the result
  through the antisymmetrised quadratic form.

The ``*_lagrangian_action`` functions are closed-form integrands written
directly in terms of the Weyl components; they are the hand-derived targets
the operator engine is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .clifford import PAULI, SpinBoost
from .grassmann import GrassmannNumber, antisymmetric_pair_form
from .operator_algebra import FieldOperator
from .torus_fields import (
    CELL_VOLUME,
    ZERO_MODE,
    FourierScalar,
    Mode,
    Section,
    add_modes,
    negate_mode,
    random_scalar,
    random_section,
)
from .geometries import function_matrix_sum

_S2 = PAULI[1]


# ---------------------------------------------------------------------------
# integrals of section pairs
# ---------------------------------------------------------------------------


def _as_grassmann(value) -> GrassmannNumber:
    if isinstance(value, GrassmannNumber):
        return value
    return GrassmannNumber.scalar(complex(value))


def grassmann_inner(first: Section, second: Section) -> GrassmannNumber:
    """Integral of ``first^dagger second``; amplitude-conjugates slot one.

    Works uniformly for complex and Grassmann-valued amplitudes; the result
    is always wrapped as a :class:`GrassmannNumber`.
    """
    if first.fiber_dim != second.fiber_dim:
        raise ValueError("fiber dimensions differ")
    acc: GrassmannNumber = GrassmannNumber.zero()
    for mode, v in first.coeffs.items():
        w = second.coeffs.get(mode)
        if w is None:
            continue
        for c in range(first.fiber_dim):
            a, b = v[c], w[c]
            a_conj = a.conjugate() if isinstance(a, GrassmannNumber) else np.conj(a)
            acc = acc + a_conj * b
    return CELL_VOLUME * acc


def bilinear_integral(first: Section, second: Section) -> GrassmannNumber:
    """Integral of ``first^T second`` with no conjugation anywhere."""
    if first.fiber_dim != second.fiber_dim:
        raise ValueError("fiber dimensions differ")
    acc: GrassmannNumber = GrassmannNumber.zero()
    for mode, v in first.coeffs.items():
        w = second.coeffs.get(negate_mode(mode))
        if w is None:
            continue
        for c in range(first.fiber_dim):
            acc = acc + v[c] * w[c]
    return CELL_VOLUME * acc


# ---------------------------------------------------------------------------
# pairings against the twisted structure
# ---------------------------------------------------------------------------


def twisted_pairing(geometry, op: FieldOperator, first: Section, second: Section):
    """``<J first, R op second>`` - the twisted fermionic pairing."""
    lhs = geometry.real_structure.apply(first)
    rhs = geometry.r_operator.apply(op.apply(second))
    return grassmann_inner(lhs, rhs)


def untwisted_pairing(geometry, op: FieldOperator, first: Section, second: Section):
    """``<J first, op second>`` without the R insertion."""
    lhs = geometry.real_structure.apply(first)
    return grassmann_inner(lhs, op.apply(second))


def boosted_pairing(
    geometry, op: FieldOperator, boost: SpinBoost, first: Section, second: Section
):
    """Twisted pairing with boosted slots and a conjugated operator.

    The slot matrices come from the geometry: the single-sector space pairs
    an inverse-boosted first slot with a boosted second slot, the sectored
    spaces act with the same sectorwise matrix on both slots.
    """
    b1 = geometry.boost_slot1_matrix(boost)
    b2 = geometry.boost_slot2_matrix(boost)
    return twisted_pairing(
        geometry,
        geometry.boosted_operator(op, boost),
        first.matmul(b1),
        second.matmul(b2),
    )


# ---------------------------------------------------------------------------
# Grassmann promotion of Weyl data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PromotedWeyl:
    """Weyl fields whose amplitudes have been tensored with generators.

    ``table[i]`` records which (field, component, mode) slot generator ``i``
    occupies and ``amplitudes[i]`` the complex amplitude it multiplies.
    """

    fields: tuple[Section, ...]
    table: tuple[tuple[int, int, Mode], ...]
    amplitudes: tuple[complex, ...]

    @property
    def n_generators(self) -> int:
        return len(self.table)


def promote_weyl_fields(fields: Sequence[Section]) -> PromotedWeyl:
    """Replace every amplitude ``a`` by ``a * theta_i`` with fresh generators."""
    table: list[tuple[int, int, Mode]] = []
    amplitudes: list[complex] = []
    promoted: list[Section] = []
    gen = 0
    for slot, field in enumerate(fields):
        if field.fiber_dim != 2:
            raise ValueError("expected fiber-two Weyl fields")
        out = Section(2)
        for mode in sorted(field.coeffs):
            arr = np.empty(2, dtype=object)
            for comp in range(2):
                a = complex(field.coeffs[mode][comp])
                if a == 0:
                    arr[comp] = GrassmannNumber.zero()
                    continue
                arr[comp] = a * GrassmannNumber.generator(gen)
                table.append((slot, comp, mode))
                amplitudes.append(a)
                gen += 1
            out.coeffs[mode] = arr
        promoted.append(out)
    return PromotedWeyl(tuple(promoted), tuple(table), tuple(amplitudes))


def unit_weyl_fields(promoted: PromotedWeyl, index: int) -> list[Section]:
    """Complex Weyl fields with a single unit amplitude at generator ``index``."""
    slot, comp, mode = promoted.table[index]
    fields = [Section(2) for _ in promoted.fields]
    v = np.zeros(2, dtype=complex)
    v[comp] = 1.0
    fields[slot].coeffs[mode] = v
    return fields


def _assemblers(geometry, promoted: PromotedWeyl):
    """Which promoted fields feed which slot of the pairing.

    The single-sector geometry is a genuine two-argument form (field 0 in
    the first slot, field 1 in the second); the sectored geometries place
    the same multi-sector section in both slots.
    """
    if geometry.n_sectors == 1:
        if len(promoted.fields) != 2:
            raise ValueError("two Weyl fields required for the two-slot form")
        first = lambda fl: geometry.h_r_section([fl[0]])  # noqa: E731
        second = lambda fl: geometry.h_r_section([fl[1]])  # noqa: E731
    else:
        if len(promoted.fields) != geometry.n_sectors:
            raise ValueError("one Weyl field per sector required")
        first = second = lambda fl: geometry.h_r_section(list(fl))  # noqa: E731
    return first, second


def fermionic_action(
    geometry, op: FieldOperator, promoted: PromotedWeyl, boost: SpinBoost | None = None
) -> GrassmannNumber:
    """Operator-engine evaluation of the twisted pairing on promoted fields."""
    first, second = _assemblers(geometry, promoted)
    lhs = first(promoted.fields)
    rhs = second(promoted.fields)
    if boost is None:
        return twisted_pairing(geometry, op, lhs, rhs)
    return boosted_pairing(geometry, op, boost, lhs, rhs)


def pairing_coefficients(
    pair_fn: Callable[[Section, Section], GrassmannNumber],
    promoted: PromotedWeyl,
    assemble_first,
    assemble_second,
) -> np.ndarray:
    """Matrix ``B_ij = a_i a_j pair(e_i, e_j)`` over complex unit sections."""
    n = promoted.n_generators
    firsts = [assemble_first(unit_weyl_fields(promoted, i)) for i in range(n)]
    seconds = [assemble_second(unit_weyl_fields(promoted, j)) for j in range(n)]
    out = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            val = _as_grassmann(pair_fn(firsts[i], seconds[j]))
            out[i, j] = (
                promoted.amplitudes[i] * promoted.amplitudes[j] * val.coefficient(())
            )
    return out


def fermionic_action_quadratic(
    geometry, op: FieldOperator, promoted: PromotedWeyl, boost: SpinBoost | None = None
) -> GrassmannNumber:
    """Second route: complex pairings reassembled as an antisymmetric form."""
    first, second = _assemblers(geometry, promoted)
    if boost is None:
        fn = lambda u, v: twisted_pairing(geometry, op, u, v)  # noqa: E731
    else:
        fn = lambda u, v: boosted_pairing(geometry, op, boost, u, v)  # noqa: E731
    return antisymmetric_pair_form(pairing_coefficients(fn, promoted, first, second))


def route_spread(*values) -> float:
    """Largest pairwise difference between evaluation routes."""
    worst = 0.0
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            worst = max(worst, abs(values[i] - values[j]))
    return worst


# ---------------------------------------------------------------------------
# closed-form integrands
# ---------------------------------------------------------------------------


def _mult2(matrix: np.ndarray, f: FourierScalar) -> FieldOperator:
    return function_matrix_sum(2, [(matrix, f)])


def _deriv2(matrix: np.ndarray, mu: int) -> FieldOperator:
    return FieldOperator.from_matrix(np.asarray(matrix, dtype=complex)) @ (
        FieldOperator.derivative(2, mu)
    )


def weyl_density_operator(f0: FourierScalar) -> FieldOperator:
    """``s2 (i f0 - sigma_j d_j)`` - the single-sheet density kernel."""
    op = _mult2(1j * _S2, f0)
    for j in (1, 2, 3):
        op = op - _deriv2(_S2 @ PAULI[j - 1], j)
    return op


def covariant_weyl_density_operators(
    f0: FourierScalar, g: Sequence[FourierScalar]
) -> tuple[FieldOperator, FieldOperator]:
    """``s2 (i f0 -+ sigma_j (d_j - i g_j))`` for the two chirality branches."""
    op_minus = _mult2(1j * _S2, f0)
    op_plus = _mult2(1j * _S2, f0)
    for j in (1, 2, 3):
        sj = _S2 @ PAULI[j - 1]
        cov_j = _deriv2(sj, j) - _mult2(1j * sj, g[j])
        op_minus = op_minus - cov_j
        op_plus = op_plus + cov_j
    return op_minus, op_plus


def boosted_weyl_density_operators(
    f: Sequence[FourierScalar], boost: SpinBoost
) -> tuple[FieldOperator, FieldOperator]:
    """``st_L^mu (d_mu + f_mu)`` and ``s_L^mu (d_mu - f_mu)`` (no s2 factor;
    that lives in the first-slot row transformations)."""
    op_left = FieldOperator.zero(2)
    op_right = FieldOperator.zero(2)
    for mu in range(4):
        st = boost.sigma_tilde_boosted(mu)
        sb = boost.sigma_boosted(mu)
        op_left = op_left + _deriv2(st, mu) + _mult2(st, f[mu])
        op_right = op_right + _deriv2(sb, mu) - _mult2(sb, f[mu])
    return op_left, op_right


def manifold_lagrangian_action(phi_w: Section, zeta_w: Section, f0: FourierScalar):
    """``2 int phi^T s2 (i f0 - sigma_j d_j) zeta``.

    Only the time component of the chiral potential survives on the
    R-invariant subspace; the spatial components cancel between the two
    chirality blocks.
    """
    op = weyl_density_operator(f0)
    return 2 * bilinear_integral(phi_w, op.apply(zeta_w))


def doubled_lagrangian_action(phi_w: Section, zeta_w: Section, f0: FourierScalar):
    """Two-sheet action: each sheet contributes one copy of the same density."""
    return 2 * manifold_lagrangian_action(phi_w, zeta_w, f0)


def electro_lagrangian_action(
    weyls: Sequence[Section],
    f: Sequence[FourierScalar],
    g: Sequence[FourierScalar],
    d: complex,
):
    """Dirac-type density with covariant derivative ``d_j - i g_j`` and mass d.

    ``weyls`` are the four sector fields (particle left/right, conjugate
    left/right).  The unboosted density reads only ``f[0]`` and the spatial
    ``g``; the remaining potential components drop out of the pairing.
    """
    phi1, phi2, zeta1, zeta2 = weyls
    op1, op2 = covariant_weyl_density_operators(f[0], g)
    t1 = bilinear_integral(phi1, op1.apply(zeta1))
    t2 = bilinear_integral(phi2, op2.apply(zeta2))
    t3 = bilinear_integral(phi1, zeta2.matmul(_S2))
    t4 = bilinear_integral(phi2, zeta1.matmul(_S2))
    return 4 * (t1 - t2 + np.conj(d) * t3 + d * t4)


def boosted_manifold_lagrangian_action(
    phi_w: Section,
    zeta_w: Section,
    f: Sequence[FourierScalar],
    boost: SpinBoost,
):
    """Boosted density ``-i int [phi_l+ st_L (d+f) zeta_l + phi_r+ s_L (d-f) zeta_r]``.

    The chirality halves carry opposite boost factors: ``zeta_l = L- zeta``,
    ``zeta_r = L+ zeta``, and the first-slot rows are ``-phi^T s2 L-`` and
    ``+phi^T s2 L+``.  All four potential components appear.
    """
    lm, lp = boost.lambda_minus, boost.lambda_plus
    phi_left = phi_w.matmul(-(_S2 @ lm).T)
    phi_right = phi_w.matmul((_S2 @ lp).T)
    zeta_left = zeta_w.matmul(lm)
    zeta_right = zeta_w.matmul(lp)
    op_left, op_right = boosted_weyl_density_operators(f, boost)
    return -1j * (
        bilinear_integral(phi_left, op_left.apply(zeta_left))
        + bilinear_integral(phi_right, op_right.apply(zeta_right))
    )


def boosted_doubled_lagrangian_action(
    phi_w: Section,
    zeta_w: Section,
    f: Sequence[FourierScalar],
    boost: SpinBoost,
):
    return 2 * boosted_manifold_lagrangian_action(phi_w, zeta_w, f, boost)


def boosted_electro_lagrangian_action(
    weyls: Sequence[Section],
    f: Sequence[FourierScalar],
    g: Sequence[FourierScalar],
    d: complex,
    boost: SpinBoost,
):
    """Boosted Dirac-type density, ``-2 int L``.

    ``L`` couples the chirality halves of the four sector fields through the
    boosted sigma blocks, the covariant derivative ``D_mu = d_mu - i g_mu``
    (all four components), the chiral potential ``f`` with opposite signs on
    the two particle fields, and mass cross terms between opposite sectors
    and chiralities.
    """
    phi1, phi2, zeta1, zeta2 = weyls
    lm, lp = boost.lambda_minus, boost.lambda_plus
    row_left = -(_S2 @ lm).T
    row_right = (_S2 @ lp).T
    p1l, p1r = phi1.matmul(row_left), phi1.matmul(row_right)
    p2l, p2r = phi2.matmul(row_left), phi2.matmul(row_right)
    z1l, z1r = zeta1.matmul(lm), zeta1.matmul(lp)
    z2l, z2r = zeta2.matmul(lm), zeta2.matmul(lp)

    def wave(sig_fn, sign: float) -> FieldOperator:
        op = FieldOperator.zero(2)
        for mu in range(4):
            s = sig_fn(mu)
            op = op + _deriv2(s, mu) + _mult2(s, sign * f[mu] - 1j * g[mu])
        return op

    lag = 1j * (
        bilinear_integral(p1l, wave(boost.sigma_tilde_boosted, 1.0).apply(z1l))
        + bilinear_integral(p1r, wave(boost.sigma_boosted, -1.0).apply(z1r))
    )
    lag = lag + d * (bilinear_integral(p2l, z1r) - bilinear_integral(p2r, z1l))
    lag = lag + 1j * (
        bilinear_integral(p2l, wave(boost.sigma_tilde_boosted, -1.0).apply(z2l))
        + bilinear_integral(p2r, wave(boost.sigma_boosted, 1.0).apply(z2r))
    )
    lag = lag + np.conj(d) * (
        bilinear_integral(p1l, z2r) - bilinear_integral(p1r, z2l)
    )
    return -2 * lag


# ---------------------------------------------------------------------------
# elementary sub-densities (untwisted, single sheet)
# ---------------------------------------------------------------------------


def weyl_derivative_form(phi_w: Section, zeta_w: Section):
    """``2 int phi^T s2 sigma_j d_j zeta`` - the kinetic sub-density."""
    op = FieldOperator.zero(2)
    for j in (1, 2, 3):
        op = op + _deriv2(_S2 @ PAULI[j - 1], j)
    return 2 * bilinear_integral(phi_w, op.apply(zeta_w))


def weyl_potential_form(phi_w: Section, zeta_w: Section, f0: FourierScalar):
    """``-2i int f0 phi^T s2 zeta`` - the chiral-potential sub-density."""
    return -2j * bilinear_integral(phi_w, _mult2(_S2, f0).apply(zeta_w))


def weyl_vector_form(phi_w: Section, zeta_w: Section, g: Sequence[FourierScalar]):
    """``2i int phi^T s2 sigma_j g_j zeta`` - the vector-potential sub-density."""
    op = FieldOperator.zero(2)
    for j in (1, 2, 3):
        op = op + _mult2(_S2 @ PAULI[j - 1], g[j])
    return 2j * bilinear_integral(phi_w, op.apply(zeta_w))


def weyl_mass_form(phi_w: Section, zeta_w: Section):
    """``-2 int phi^T s2 zeta`` - the sector-mixing sub-density."""
    return -2 * bilinear_integral(phi_w, zeta_w.matmul(_S2))


def electro_operator_pieces(geometry, f, g) -> dict[str, FieldOperator]:
    """Split the dressed four-sector operator into its four summands."""
    zeros = [FourierScalar.zero()] * 4
    return {
        "derivative": geometry.dirac - geometry.dirac_finite_part,
        "chiral": geometry.selfadjoint_fluctuation(f, zeros),
        "vector": geometry.selfadjoint_fluctuation(zeros, g),
        "mass": geometry.dirac_finite_part,
    }


# ---------------------------------------------------------------------------
# random inputs shared by the tests and the command-line checks
# ---------------------------------------------------------------------------


def random_weyl_fields(
    rng, n_fields: int, cutoff: int = 1, n_modes: int = 2, scale: float = 1.0
) -> list[Section]:
    return [
        random_section(rng, 2, cutoff=cutoff, n_modes=n_modes, scale=scale)
        for _ in range(n_fields)
    ]


def random_real_potential(
    rng, cutoff: int = 1, n_modes: int = 2, scale: float = 0.5
) -> list[FourierScalar]:
    return [
        random_scalar(rng, cutoff=cutoff, n_modes=n_modes, real=True, scale=scale)
        for _ in range(4)
    ]


def overlapping_action_inputs(rng, n_fields: int, cutoff: int = 1):
    """Weyl fields and potentials whose Fourier modes actually pair up.

    The integral of a product of fields only sees mode combinations summing
    to zero, so fully random inputs almost always integrate to nothing.
    Here every field is supported on a negation-symmetric pool of carrier
    modes, and the potentials combine a constant with a harmonic at a pool
    difference, which keeps every term of the action populated.

    Returns ``(weyl_fields, f, g)`` with four real potential components each.
    """
    while True:
        a = tuple(int(x) for x in rng.integers(-cutoff, cutoff + 1, size=4))
        b = tuple(int(x) for x in rng.integers(-cutoff, cutoff + 1, size=4))
        if a != b and a != negate_mode(b):
            break
    pool = {a, negate_mode(a), b, negate_mode(b)}
    fields = []
    for _ in range(n_fields):
        s = Section(2)
        for k in pool:
            s.coeffs[k] = 0.5 * (
                rng.standard_normal(2) + 1j * rng.standard_normal(2)
            )
        fields.append(s)
    diff = add_modes(a, negate_mode(b))

    def real_potential() -> FourierScalar:
        out = FourierScalar.constant(0.5 * float(rng.standard_normal()))
        if diff != ZERO_MODE:
            c = 0.25 * (rng.standard_normal() + 1j * rng.standard_normal())
            out = out + FourierScalar({diff: c, negate_mode(diff): np.conj(c)})
        return out

    f = [real_potential() for _ in range(4)]
    g = [real_potential() for _ in range(4)]
    return fields, f, g
