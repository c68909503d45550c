"""Momentum-space plane-wave systems: dispersion relations and kernels.

Everything here lives at the symbol level: on a plane wave ``exp(-i p.x)``
each derivative becomes ``-i p_mu``, so a constant-coefficient equation of
motion collapses to a finite matrix.  Momenta are arbitrary reals (not
torus-quantized) and the systems are small enough that determinants,
``p_0`` roots and kernels all come in closed form -- no iterative solvers.

Conventions
-----------
* ``p`` is always a covector ``(p_0, p_1, p_2, p_3)``.  The unboosted Weyl
  and Dirac systems read only the spatial part plus the scalar potential
  ``f_0``; the time component enters through the identification of ``p_0``
  with ``-f_0`` (unprimed/left) or ``+f_0`` (primed/right).
* Flat-space reference matrices: ``minkowski_weyl_matrix`` gives
  ``p_0 -+ sigma.p`` and ``minkowski_dirac_matrix`` couples the two with a
  mass on the off-diagonal block.
* Boosted systems carry the half-rapidity factors inside the sigma
  matrices (``SpinBoost.sigma_boosted`` / ``sigma_tilde_boosted``); under
  the momentum identification they reduce to ``-(1+i)`` times the flat
  reference at the transported momentum ``p' = boost_covector(boost, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .actions import (
    boosted_weyl_density_operators,
    covariant_weyl_density_operators,
    weyl_density_operator,
)
from .clifford import (
    IDENTITY_BOOST,
    PAULI,
    SIGMA_M,
    SIGMA_M_BAR,
    SpinBoost,
    boost_covector,
)
from .operator_algebra import FieldOperator
from .torus_fields import ZERO_MODE, FourierScalar

#: singular values at or below ``KERNEL_THRESHOLD * max(1, s_max)`` count
#: as kernel directions.
KERNEL_THRESHOLD = 1e-10

ZERO4 = (0.0, 0.0, 0.0, 0.0)

_ID2 = np.eye(2, dtype=complex)


def sigma_dot(v: Sequence[float]) -> np.ndarray:
    """``sigma . v`` for a spatial 3-vector ``v``."""
    return sum((v[j] * PAULI[j] for j in range(3)), np.zeros((2, 2), complex))


def _as_covector(p: Sequence[float]) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (4,):
        raise ValueError("momentum must be a real 4-covector")
    return p


def _require_handed(handed: str) -> str:
    if handed not in ("left", "right"):
        raise ValueError(f"handed must be 'left' or 'right', got {handed!r}")
    return handed


def minkowski_weyl_matrix(p: Sequence[float], handed: str = "left") -> np.ndarray:
    """``p_0 - sigma.p`` (left) or ``p_0 + sigma.p`` (right)."""
    p = np.asarray(p, dtype=complex)
    sign = -1.0 if _require_handed(handed) == "left" else 1.0
    return p[0] * _ID2 + sign * sigma_dot(p[1:4])


def minkowski_dirac_matrix(p: Sequence[float], m: complex) -> np.ndarray:
    """Massive flat-space block system, assembled from the Minkowski sigmas.

    Rows read ``(p_0 - sigma.p) psi_l = m psi_r`` and
    ``(p_0 + sigma.p) psi_r = m psi_l``.
    """
    p = np.asarray(p, dtype=complex)
    upper = sum(SIGMA_M_BAR[mu] * p[mu] for mu in range(4))
    lower = sum(SIGMA_M[mu] * p[mu] for mu in range(4))
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = upper
    out[2:, 2:] = lower
    out[:2, 2:] = -m * _ID2
    out[2:, :2] = -m * _ID2
    return out


def _kernel_basis(matrix: np.ndarray, threshold: float = KERNEL_THRESHOLD):
    """Smallest-singular-direction kernel extraction."""
    _, s, vh = np.linalg.svd(matrix)
    if s.size == 0:
        return ()
    cut = threshold * max(1.0, float(s[0]))
    return tuple(vh[i].conj() for i in range(len(s)) if s[i] <= cut)


@dataclass(frozen=True)
class DispersionResult:
    """System matrix at a trial momentum plus its closed-form diagnostics.

    ``roots`` are the admissible ``p_0`` values for the supplied spatial
    data (the mass shell); ``kernel`` is the numerically extracted null
    space of ``matrix``, empty when the trial momentum is off shell.
    """

    kind: str
    matrix: np.ndarray
    determinant: complex
    roots: tuple
    kernel: tuple

    @property
    def singular(self) -> bool:
        return len(self.kernel) > 0


def weyl_system(f0: float, p: Sequence[float], handed: str = "left") -> DispersionResult:
    """Massless system ``f_0 +- sigma.p`` with the chirality-dependent sign.

    The matrix uses only the spatial part of ``p``; a plane wave at the full
    ``p`` solves the equation of motion exactly when ``p_0 = -f_0`` (left)
    or ``p_0 = f_0`` (right) and the matrix below is singular.
    """
    p = _as_covector(p)
    sign = 1.0 if _require_handed(handed) == "left" else -1.0
    matrix = f0 * _ID2 + sign * sigma_dot(p[1:4])
    radius = float(np.linalg.norm(p[1:4]))
    return DispersionResult(
        kind=f"weyl-{handed}",
        matrix=matrix,
        determinant=complex(np.linalg.det(matrix)),
        roots=(radius, -radius),
        kernel=_kernel_basis(matrix),
    )


def dirac_system(
    f0: float,
    g: Sequence[float],
    d: complex,
    p: Sequence[float],
    primed: bool = False,
) -> DispersionResult:
    """Coupled pair ``(f_0 +- sigma.(p+g)) psi = m psi_other`` with ``m = -i d``.

    ``g`` is the spatial gauge 3-vector (temporal gauge: no ``g_0``).  The
    primed variant swaps the diagonal blocks and keeps the same mass.  The
    4x4 determinant is ``(f_0^2 - |p+g|^2 - m^2)^2``, so the ``p_0`` roots
    satisfy ``p_0^2 - |p+g|^2 = m^2`` under either identification
    ``p_0 = -+ f_0``.
    """
    p = _as_covector(p)
    g = np.asarray(g, dtype=float)
    if g.shape != (3,):
        raise ValueError("gauge potential must be a spatial 3-vector")
    m = -1j * complex(d)
    big_p = p[1:4] + g
    plus = f0 * _ID2 + sigma_dot(big_p)
    minus = f0 * _ID2 - sigma_dot(big_p)
    matrix = np.zeros((4, 4), dtype=complex)
    if primed:
        matrix[:2, :2] = minus
        matrix[2:, 2:] = plus
    else:
        matrix[:2, :2] = plus
        matrix[2:, 2:] = minus
    matrix[:2, 2:] = -m * _ID2
    matrix[2:, :2] = -m * _ID2
    shell = np.sqrt(complex(np.dot(big_p, big_p)) + m * m)
    return DispersionResult(
        kind="dirac-primed" if primed else "dirac",
        matrix=matrix,
        determinant=complex(np.linalg.det(matrix)),
        roots=(shell, -shell),
        kernel=_kernel_basis(matrix),
    )


def boosted_weyl_system(
    boost: SpinBoost,
    f: Sequence[float],
    p: Sequence[float],
    handed: str = "left",
) -> DispersionResult:
    """``sum_mu st_L^mu (-i p_mu + f_mu)`` (left) / ``s_L^mu (-i p_mu - f_mu)``.

    All four components of ``f`` and ``p`` enter.  Under the identification
    ``p = weyl_identification(f, handed)`` the matrix equals
    ``-(1+i) * minkowski_weyl_matrix(p', handed)`` at the transported
    momentum ``p' = boost_covector(boost, p)``, so the kernel is the flat
    one at ``p'``.
    """
    p = _as_covector(p)
    f = _as_covector(f)
    _require_handed(handed)
    matrix = np.zeros((2, 2), dtype=complex)
    for mu in range(4):
        if handed == "left":
            matrix = matrix + boost.sigma_tilde_boosted(mu) * (-1j * p[mu] + f[mu])
        else:
            matrix = matrix + boost.sigma_boosted(mu) * (-1j * p[mu] - f[mu])
    radius = float(np.linalg.norm(p[1:4]))
    return DispersionResult(
        kind=f"boosted-weyl-{handed}",
        matrix=matrix,
        determinant=complex(np.linalg.det(matrix)),
        roots=(radius, -radius),
        kernel=_kernel_basis(matrix),
    )


def boosted_dirac_mass(d: complex, primed: bool = False) -> complex:
    """Mass extracted from the coupling ``d`` under the two identifications."""
    if primed:
        return (1 + 1j) * np.conj(complex(d)) / 2
    return -(1 + 1j) * complex(d) / 2


def boosted_dirac_system(
    boost: SpinBoost,
    f: Sequence[float],
    g: Sequence[float],
    d: complex,
    p: Sequence[float],
    primed: bool = False,
) -> DispersionResult:
    """Boosted coupled pair in the generalized momentum ``P = p + g``.

    Unprimed rows: ``st_L(-iP + f) psi_l = i d psi_r`` and
    ``s_L(-iP + f) psi_r = i d psi_l``; the primed system flips the sign of
    ``f`` and couples through ``+i conj(d)``.  Under ``P_0 = -f_0, P_j = f_j``
    (unprimed; signs flipped for primed) the matrix reduces to
    ``-(1+i) * minkowski_dirac_matrix(P', m)`` with
    ``m = boosted_dirac_mass(d, primed)``.
    """
    p = _as_covector(p)
    f = _as_covector(f)
    g = _as_covector(g)
    big_p = p + g
    coeff = (-1j * big_p) + (-f if primed else f)
    upper = np.zeros((2, 2), dtype=complex)
    lower = np.zeros((2, 2), dtype=complex)
    for mu in range(4):
        upper = upper + boost.sigma_tilde_boosted(mu) * coeff[mu]
        lower = lower + boost.sigma_boosted(mu) * coeff[mu]
    off = 1j * np.conj(complex(d)) if primed else -1j * complex(d)
    matrix = np.zeros((4, 4), dtype=complex)
    matrix[:2, :2] = upper
    matrix[2:, 2:] = lower
    matrix[:2, 2:] = off * _ID2
    matrix[2:, :2] = off * _ID2
    m = boosted_dirac_mass(d, primed)
    shell = np.sqrt(complex(np.dot(big_p[1:4], big_p[1:4])) + m * m)
    return DispersionResult(
        kind="boosted-dirac-primed" if primed else "boosted-dirac",
        matrix=matrix,
        determinant=complex(np.linalg.det(matrix)),
        roots=(-g[0] + shell, -g[0] - shell),
        kernel=_kernel_basis(matrix),
    )


# ---------------------------------------------------------------------------
# momentum identifications


def weyl_identification(f: Sequence[float], handed: str = "left") -> np.ndarray:
    """Momentum at which the (boosted) Weyl plane wave solves the system.

    Left: ``p_0 = -f_0, p_j = f_j``; right: signs flipped.
    """
    f = _as_covector(f)
    if _require_handed(handed) == "left":
        return np.array([-f[0], f[1], f[2], f[3]])
    return np.array([f[0], -f[1], -f[2], -f[3]])


def dirac_identification(
    f: Sequence[float], g: Sequence[float], primed: bool = False
) -> np.ndarray:
    """Momentum with ``P = p + g`` pinned to ``(-f_0, f_j)`` (or flipped)."""
    f = _as_covector(f)
    g = _as_covector(g)
    big_p = weyl_identification(f, "right" if primed else "left")
    return big_p - g


# ---------------------------------------------------------------------------
# reduction residuals (boosted system vs flat reference at p')


def boosted_weyl_reduction_residual(
    boost: SpinBoost, f: Sequence[float], handed: str = "left"
) -> float:
    """``max | system - (-(1+i)) * flat reference at p' |`` at identification."""
    p = weyl_identification(f, handed)
    system = boosted_weyl_system(boost, f, p, handed).matrix
    target = -(1 + 1j) * minkowski_weyl_matrix(boost_covector(boost, p), handed)
    return float(np.abs(system - target).max())


def boosted_dirac_reduction_residual(
    boost: SpinBoost,
    f: Sequence[float],
    g: Sequence[float],
    d: complex,
    primed: bool = False,
) -> float:
    """Same as the Weyl residual, against the massive flat reference."""
    p = dirac_identification(f, g, primed)
    system = boosted_dirac_system(boost, f, g, d, p, primed).matrix
    big_p = _as_covector(p) + _as_covector(g)
    m = boosted_dirac_mass(d, primed)
    target = -(1 + 1j) * minkowski_dirac_matrix(boost_covector(boost, big_p), m)
    return float(np.abs(system - target).max())


# ---------------------------------------------------------------------------
# kernel covariance under boosts


def weyl_kernel_covariance(
    boost: SpinBoost, f_spatial: Sequence[float], handed: str = "left"
) -> float:
    """Transport the boosted kernel to the flat systems at ``p'`` and ``p``.

    Builds the on-shell potential ``f_0 = |f_spatial|``, takes every kernel
    vector ``v`` of the boosted system at the identified momentum and
    returns the worst residual of (a) ``v`` against the flat system at the
    transported momentum and (b) ``Lambda v`` against the flat system at
    the original momentum.  Raises if the kernel is empty.
    """
    f_spatial = np.asarray(f_spatial, dtype=float)
    f = np.array([np.linalg.norm(f_spatial), *f_spatial])
    p = weyl_identification(f, handed)
    result = boosted_weyl_system(boost, f, p, handed)
    if not result.kernel:
        raise ValueError("on-shell boosted system has empty kernel")
    p_prime = boost_covector(boost, p)
    flat_prime = minkowski_weyl_matrix(p_prime, handed)
    flat = minkowski_weyl_matrix(p, handed)
    lam = boost.lambda_plus if handed == "left" else boost.lambda_minus
    worst = 0.0
    for v in result.kernel:
        worst = max(worst, float(np.abs(flat_prime @ v).max()))
        worst = max(worst, float(np.abs(flat @ (lam @ v)).max()))
    return worst


def dirac_kernel_covariance(
    boost: SpinBoost,
    f_spatial: Sequence[float],
    g: Sequence[float],
    mass: float,
    primed: bool = False,
) -> float:
    """Massive analogue of :func:`weyl_kernel_covariance`.

    ``mass`` is the positive physical mass; the coupling is
    ``d = mass * (i - 1)`` (unprimed) or ``mass * (i + 1)`` (primed), both
    of which extract a real mass.  Kernel vectors transport blockwise with
    ``diag(Lambda_plus, Lambda_minus)``.
    """
    f_spatial = np.asarray(f_spatial, dtype=float)
    d = mass * ((1j + 1) if primed else (1j - 1))
    m = boosted_dirac_mass(d, primed)
    f0 = np.sqrt(np.dot(f_spatial, f_spatial) + float(np.real(m)) ** 2)
    f = np.array([f0, *f_spatial])
    p = dirac_identification(f, g, primed)
    result = boosted_dirac_system(boost, f, g, d, p, primed)
    if not result.kernel:
        raise ValueError("on-shell boosted system has empty kernel")
    big_p = p + _as_covector(g)
    flat_prime = minkowski_dirac_matrix(boost_covector(boost, big_p), m)
    flat = minkowski_dirac_matrix(big_p, m)
    transport = np.zeros((4, 4), dtype=complex)
    transport[:2, :2] = boost.lambda_plus
    transport[2:, 2:] = boost.lambda_minus
    worst = 0.0
    for v in result.kernel:
        worst = max(worst, float(np.abs(flat_prime @ v).max()))
        worst = max(worst, float(np.abs(flat @ (transport @ v)).max()))
    return worst


# ---------------------------------------------------------------------------
# problem wrapper


PROBLEM_KINDS = (
    "weyl-left",
    "weyl-right",
    "dirac",
    "dirac-primed",
    "boosted-weyl",
    "boosted-weyl-right",
    "boosted-dirac",
    "boosted-dirac-primed",
)


@dataclass(frozen=True)
class PlaneWaveProblem:
    """Constant-coefficient plane-wave problem, dispatched by ``kind``.

    ``boosted-weyl`` means the left branch; append ``-right`` for the other
    chirality.  Unboosted kinds ignore ``boost``; Weyl kinds ignore ``g``
    and ``d``; the unboosted Dirac kinds use only the spatial part of ``g``.
    """

    kind: str
    p: tuple = ZERO4
    f: tuple = ZERO4
    g: tuple = ZERO4
    d: complex = 0j
    boost: Optional[SpinBoost] = None

    def __post_init__(self):
        if self.kind not in PROBLEM_KINDS:
            raise ValueError(f"unknown system kind {self.kind!r}")

    def solve(self) -> DispersionResult:
        boost = self.boost if self.boost is not None else IDENTITY_BOOST
        if self.kind == "weyl-left":
            return weyl_system(self.f[0], self.p, "left")
        if self.kind == "weyl-right":
            return weyl_system(self.f[0], self.p, "right")
        if self.kind == "dirac":
            return dirac_system(self.f[0], self.g[1:4], self.d, self.p, False)
        if self.kind == "dirac-primed":
            return dirac_system(self.f[0], self.g[1:4], self.d, self.p, True)
        if self.kind == "boosted-weyl":
            return boosted_weyl_system(boost, self.f, self.p, "left")
        if self.kind == "boosted-weyl-right":
            return boosted_weyl_system(boost, self.f, self.p, "right")
        if self.kind == "boosted-dirac":
            return boosted_dirac_system(boost, self.f, self.g, self.d, self.p, False)
        return boosted_dirac_system(boost, self.f, self.g, self.d, self.p, True)


# ---------------------------------------------------------------------------
# determinant-kernel duality sweeps


def random_problem(
    rng, kind: str, scale: float = 1.0, max_half_rapidity: float = 1.0
) -> PlaneWaveProblem:
    """Generic (off-shell) draw: redraws until comfortably nonsingular."""
    for _ in range(100):
        problem = PlaneWaveProblem(
            kind=kind,
            p=tuple(rng.normal(0.0, scale, 4)),
            f=tuple(rng.normal(0.0, scale, 4)),
            g=tuple(rng.normal(0.0, scale, 4)),
            d=complex(rng.normal(0.0, scale), rng.normal(0.0, scale)),
            boost=_random_boost(rng, max_half_rapidity)
            if kind.startswith("boosted")
            else None,
        )
        s_min = np.linalg.svd(problem.solve().matrix, compute_uv=False)[-1]
        if s_min > 1e-4:
            return problem
    raise RuntimeError("could not draw a generic off-shell sample")


def on_shell_problem(
    rng, kind: str, scale: float = 1.0, max_half_rapidity: float = 1.0
) -> PlaneWaveProblem:
    """Constructed singular draw: identification momentum on the mass shell."""
    boost = (
        _random_boost(rng, max_half_rapidity) if kind.startswith("boosted") else None
    )
    f_spatial = rng.normal(0.0, scale, 3)
    sign = rng.choice((-1.0, 1.0))
    if kind in ("weyl-left", "weyl-right", "boosted-weyl", "boosted-weyl-right"):
        handed = "right" if kind.endswith("right") else "left"
        f = np.array([sign * np.linalg.norm(f_spatial), *f_spatial])
        p = weyl_identification(f, handed)
        return PlaneWaveProblem(kind=kind, p=tuple(p), f=tuple(f), boost=boost)
    primed = kind.endswith("primed")
    mass = abs(rng.normal(0.0, scale)) + 0.1 * scale
    f = np.array([sign * np.sqrt(np.dot(f_spatial, f_spatial) + mass**2), *f_spatial])
    g = rng.normal(0.0, scale, 4)
    if kind in ("dirac", "dirac-primed"):
        d = 1j * mass
        g[0] = 0.0
    else:
        d = mass * ((1j + 1) if primed else (1j - 1))
    p = dirac_identification(f, g, primed)
    return PlaneWaveProblem(
        kind=kind, p=tuple(p), f=tuple(f), g=tuple(g), d=d, boost=boost
    )


def _random_boost(rng, max_half_rapidity: float = 1.0) -> SpinBoost:
    axis = rng.normal(0.0, 1.0, 3)
    axis = axis / np.linalg.norm(axis)
    hi = max(max_half_rapidity, 0.06)
    return SpinBoost(half_rapidity=float(rng.uniform(0.05, hi)), axis=tuple(axis))


def duality_sweep(
    rng,
    kind: str,
    n_samples: int = 1000,
    singular_fraction: float = 0.3,
    det_threshold: float = 1e-10,
    max_half_rapidity: float = 1.0,
) -> dict:
    """Check `kernel nonempty <=> |det| small` over a random parameter sweep.

    Returns counters plus the worst determinant/kernel residuals seen on
    each side of the dichotomy.
    """
    violations = 0
    singular_count = 0
    min_generic_det = np.inf
    max_singular_det = 0.0
    worst_kernel_residual = 0.0
    for _ in range(n_samples):
        make_singular = rng.uniform() < singular_fraction
        problem = (
            on_shell_problem(rng, kind, max_half_rapidity=max_half_rapidity)
            if make_singular
            else random_problem(rng, kind, max_half_rapidity=max_half_rapidity)
        )
        result = problem.solve()
        small_det = abs(result.determinant) <= det_threshold
        if result.singular != small_det:
            violations += 1
        if result.singular:
            singular_count += 1
            max_singular_det = max(max_singular_det, abs(result.determinant))
            for v in result.kernel:
                residual = float(np.abs(result.matrix @ v).max())
                worst_kernel_residual = max(worst_kernel_residual, residual)
        else:
            min_generic_det = min(min_generic_det, abs(result.determinant))
    return {
        "kind": kind,
        "samples": n_samples,
        "singular": singular_count,
        "violations": violations,
        "min_generic_det": float(min_generic_det),
        "max_singular_det": float(max_singular_det),
        "worst_kernel_residual": worst_kernel_residual,
    }


# ---------------------------------------------------------------------------
# Euler-Lagrange consistency with the action densities


def _plane_wave_symbol(op: FieldOperator, p: Sequence[float]) -> np.ndarray:
    """Symbol of a constant-coefficient operator: ``d_mu -> -i p_mu``."""
    if op.antilinear:
        raise ValueError("plane-wave symbols are defined for linear operators")
    p = _as_covector(p)
    out = np.zeros((op.fiber_dim, op.fiber_dim), dtype=complex)
    for (mode, derivs), matrix in op.terms.items():
        if mode != ZERO_MODE:
            raise ValueError("plane-wave symbols need constant coefficients")
        factor = 1.0 + 0j
        for mu in derivs:
            factor *= -1j * p[mu]
        out = out + factor * np.asarray(matrix, dtype=complex)
    return out


_S2 = PAULI[1]

EL_KINDS = (
    "weyl-left",
    "weyl-right",
    "dirac",
    "dirac-primed",
    "boosted-weyl",
    "minkowski",
)


def euler_lagrange_check(
    kind: str,
    psi: Sequence[complex],
    p: Sequence[float],
    f: Sequence[float] = ZERO4,
    g: Sequence[float] = ZERO4,
    d: complex = 0j,
    boost: Optional[SpinBoost] = None,
    mass: float = 0.0,
) -> float:
    """Residual between action stationarity and the system matrix, on ``psi``.

    The left-hand side is the plane-wave symbol of the exact density
    operators used by the closed-form action integrands (no re-derivation);
    the right-hand side is the corresponding system matrix times a frozen
    proportionality constant:

    * ``weyl-left``: ``s2-stripped symbol == i * system(p)``;
    * ``weyl-right``: same density, ``i * system`` at reflected spatial
      momentum (the one density carries both chirality readings);
    * ``dirac`` / ``dirac-primed``: block matrix with mass ``-i d`` equals
      ``-1 *`` the system;
    * ``boosted-weyl``: the two boosted densities equal the two boosted
      systems directly (block diagonal over chiralities, ``psi`` length 4);
    * ``minkowski``: the flat massive block system decomposes into the two
      flat Weyl matrices plus the mass coupling (``mass`` parameter).
    """
    p = _as_covector(p)
    psi = np.asarray(psi, dtype=complex)
    if kind == "weyl-left":
        op = weyl_density_operator(FourierScalar.constant(f[0]))
        el = _S2 @ _plane_wave_symbol(op, p)
        system = 1j * weyl_system(f[0], p, "left").matrix
    elif kind == "weyl-right":
        op = weyl_density_operator(FourierScalar.constant(f[0]))
        el = _S2 @ _plane_wave_symbol(op, p)
        reflected = np.array([p[0], -p[1], -p[2], -p[3]])
        system = 1j * weyl_system(f[0], reflected, "right").matrix
    elif kind in ("dirac", "dirac-primed"):
        primed = kind == "dirac-primed"
        g_scalars = [FourierScalar.constant(component) for component in g]
        op_minus, op_plus = covariant_weyl_density_operators(
            FourierScalar.constant(f[0]), g_scalars
        )
        if primed:
            op_minus, op_plus = op_plus, op_minus
        m = -1j * complex(d)
        el = np.zeros((4, 4), dtype=complex)
        el[:2, :2] = 1j * (_S2 @ _plane_wave_symbol(op_minus, p))
        el[2:, 2:] = 1j * (_S2 @ _plane_wave_symbol(op_plus, p))
        el[:2, 2:] = m * _ID2
        el[2:, :2] = m * _ID2
        system = -1.0 * dirac_system(f[0], g[1:4], d, p, primed).matrix
    elif kind == "boosted-weyl":
        boost = boost if boost is not None else IDENTITY_BOOST
        f_scalars = [FourierScalar.constant(component) for component in f]
        op_left, op_right = boosted_weyl_density_operators(f_scalars, boost)
        el = np.zeros((4, 4), dtype=complex)
        el[:2, :2] = _plane_wave_symbol(op_left, p)
        el[2:, 2:] = _plane_wave_symbol(op_right, p)
        system = np.zeros((4, 4), dtype=complex)
        system[:2, :2] = boosted_weyl_system(boost, f, p, "left").matrix
        system[2:, 2:] = boosted_weyl_system(boost, f, p, "right").matrix
    elif kind == "minkowski":
        el = minkowski_dirac_matrix(p, mass)
        system = np.zeros((4, 4), dtype=complex)
        system[:2, :2] = minkowski_weyl_matrix(p, "left")
        system[2:, 2:] = minkowski_weyl_matrix(p, "right")
        system[:2, 2:] = -mass * _ID2
        system[2:, :2] = -mass * _ID2
    else:
        raise ValueError(f"unknown Euler-Lagrange kind {kind!r}")
    if psi.shape != (el.shape[0],):
        raise ValueError(f"psi must have length {el.shape[0]} for kind {kind!r}")
    return float(np.abs((el - system) @ psi).max())
