"""Gamma matrices in the chiral basis, and the spinor representation of boosts.

Conventions used throughout the package:

* Pauli matrices ``sigma_1 = [[0,1],[1,0]]``, ``sigma_2 = [[0,-i],[i,0]]``,
  ``sigma_3 = [[1,0],[0,-1]]``.
* Euclidean two-by-two blocks ``SIGMA[mu] = {I, -i sigma_j}`` and
  ``SIGMA_TILDE[mu] = {I, +i sigma_j}``; the euclidean gamma matrices are
  off-diagonal with ``SIGMA`` upper-right and ``SIGMA_TILDE`` lower-left, all
  self-adjoint, satisfying {gamma^mu, gamma^nu} = 2 delta^{mu nu}.
* Minkowski blocks ``SIGMA_M[mu] = {I, sigma_j}``, ``SIGMA_M_BAR[mu] = {I,
  -sigma_j}`` with metric signature (+,-,-,-); the Minkowski gammas satisfy
  {gamma_M^mu, gamma_M^nu} = 2 eta^{mu nu}.
* The chirality operator is ``GAMMA5 = gamma^1 gamma^2 gamma^3 gamma^0 =
  diag(I, -I)``; its Minkowski counterpart is ``-i GAMMA5``.
* A boost with unit axis ``n`` and half-rapidity ``a`` acts on spinors through
  ``S = diag(Lambda_minus, Lambda_plus)`` with ``Lambda_pm = exp(+-a n.sigma)``;
  ``S`` is self-adjoint but not unitary, and ``gamma^0 S gamma^0 = S^{-1}``.
  The corresponding vector boost has rapidity ``2a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)

PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

# Euclidean blocks: SIGMA[0] = SIGMA_TILDE[0] = I, SIGMA[j] = -i sigma_j,
# SIGMA_TILDE[j] = +i sigma_j.
SIGMA = np.stack([I2, -1j * PAULI[0], -1j * PAULI[1], -1j * PAULI[2]])
SIGMA_TILDE = np.stack([I2, 1j * PAULI[0], 1j * PAULI[1], 1j * PAULI[2]])

# Minkowski blocks, signature (+,-,-,-).
SIGMA_M = np.stack([I2, PAULI[0], PAULI[1], PAULI[2]])
SIGMA_M_BAR = np.stack([I2, -PAULI[0], -PAULI[1], -PAULI[2]])

ETA = np.diag([1.0, -1.0, -1.0, -1.0])


def _offdiag(upper_right: np.ndarray, lower_left: np.ndarray) -> np.ndarray:
    out = np.zeros((4, 4), dtype=complex)
    out[:2, 2:] = upper_right
    out[2:, :2] = lower_left
    return out


GAMMA = np.stack([_offdiag(SIGMA[mu], SIGMA_TILDE[mu]) for mu in range(4)])
GAMMA5 = GAMMA[1] @ GAMMA[2] @ GAMMA[3] @ GAMMA[0]

GAMMA_M = np.stack([_offdiag(SIGMA_M[mu], SIGMA_M_BAR[mu]) for mu in range(4)])
GAMMA5_M = -1j * GAMMA5

# gamma^0 doubles as the unitary implementing the twist on spinors.
GAMMA0 = GAMMA[0]


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def twist_gamma(mu: int) -> np.ndarray:
    """Conjugation of gamma^mu by gamma^0; equals -gamma^j for spatial mu."""
    return GAMMA0 @ GAMMA[mu] @ GAMMA0


def _pauli_components(x: np.ndarray) -> np.ndarray:
    """Coefficients (c_0, c_1, c_2, c_3) of x = c_0 I + sum_j c_j sigma_j."""
    c0 = np.trace(x) / 2.0
    cj = [np.trace(PAULI[j] @ x) / 2.0 for j in range(3)]
    return np.array([c0, *cj])


@dataclass(frozen=True)
class SpinBoost:
    """Spinor representation of a boost: half_rapidity along a unit axis."""

    half_rapidity: float = 0.0
    axis: tuple[float, float, float] = (0.0, 0.0, 1.0)

    def __post_init__(self) -> None:
        n = np.asarray(self.axis, dtype=float)
        norm = np.linalg.norm(n)
        if norm == 0.0:
            raise ValueError("boost axis must be nonzero")
        object.__setattr__(self, "axis", tuple(n / norm))

    @cached_property
    def _n_sigma(self) -> np.ndarray:
        n = np.asarray(self.axis)
        return n[0] * PAULI[0] + n[1] * PAULI[1] + n[2] * PAULI[2]

    @cached_property
    def lambda_plus(self) -> np.ndarray:
        a = self.half_rapidity
        return np.cosh(a) * I2 + np.sinh(a) * self._n_sigma

    @cached_property
    def lambda_minus(self) -> np.ndarray:
        a = self.half_rapidity
        return np.cosh(a) * I2 - np.sinh(a) * self._n_sigma

    @cached_property
    def matrix(self) -> np.ndarray:
        out = np.zeros((4, 4), dtype=complex)
        out[:2, :2] = self.lambda_minus
        out[2:, 2:] = self.lambda_plus
        return out

    @cached_property
    def inverse(self) -> np.ndarray:
        out = np.zeros((4, 4), dtype=complex)
        out[:2, :2] = self.lambda_plus
        out[2:, 2:] = self.lambda_minus
        return out

    def sigma_boosted(self, mu: int) -> np.ndarray:
        return self.lambda_minus @ SIGMA[mu] @ self.lambda_minus

    def sigma_tilde_boosted(self, mu: int) -> np.ndarray:
        return self.lambda_plus @ SIGMA_TILDE[mu] @ self.lambda_plus

    def gamma_boosted(self, mu: int) -> np.ndarray:
        return _offdiag(self.sigma_boosted(mu), self.sigma_tilde_boosted(mu))


IDENTITY_BOOST = SpinBoost(0.0, (0.0, 0.0, 1.0))

_IMAG_RESIDUE_TOL = 1e-10


def lorentz_matrix(boost: SpinBoost) -> np.ndarray:
    """Extract the vector (one-index-up, one-down) boost matrix from S.

    Two independent extractions are performed, one from the boosted
    sigma-tilde blocks and one from the boosted sigma blocks; they must agree
    and be real, otherwise a ValueError is raised.  The row index is the
    boosted-frame label, the column the rest-frame one, so plane-wave
    covectors transform as p'_nu = Lam[mu, nu] p_mu.
    """
    lam_tilde = np.zeros((4, 4), dtype=complex)
    lam_sigma = np.zeros((4, 4), dtype=complex)

    for mu in range(4):
        # Tilde route: the mu = 0 block decomposes on {I, -sigma_j}; the
        # spatial blocks carry an extra factor -i.
        x = boost.sigma_tilde_boosted(mu)
        if mu != 0:
            x = 1j * x
        c = _pauli_components(x)
        lam_tilde[mu, 0] = c[0]
        lam_tilde[mu, 1:] = -c[1:]

        # Sigma route: decomposition on {I, +sigma_j}.
        y = boost.sigma_boosted(mu)
        if mu != 0:
            y = 1j * y
        c = _pauli_components(y)
        lam_sigma[mu, 0] = c[0]
        lam_sigma[mu, 1:] = c[1:]

    disagreement = np.max(np.abs(lam_tilde - lam_sigma))
    if disagreement > _IMAG_RESIDUE_TOL:
        raise ValueError(f"boost extraction routes disagree by {disagreement:.3e}")
    residue = max(np.max(np.abs(lam_tilde.imag)), np.max(np.abs(lam_sigma.imag)))
    if residue > _IMAG_RESIDUE_TOL:
        raise ValueError(f"boost extraction has imaginary residue {residue:.3e}")
    return lam_tilde.real.copy()


def boost_covector(boost: SpinBoost, p: np.ndarray) -> np.ndarray:
    """Components p'_nu = Lam^mu_nu p_mu of a boosted plane-wave covector."""
    lam = lorentz_matrix(boost)
    return np.asarray(p, dtype=float) @ lam
