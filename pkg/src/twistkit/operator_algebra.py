"""Exact calculus of constant-fiber differential operators on torus sections.

A ``FieldOperator`` is a finite sum of terms

    e^{i k.x} . G . d^alpha        (optionally followed by componentwise
                                    complex conjugation, for antilinear
                                    operators)

where k is an integer mode, G a constant n x n matrix and d^alpha a product
of coordinate derivatives recorded as a sorted multi-index tuple.  This term
dictionary is a *normal form*: two operators are equal on all sections if
and only if their term dictionaries coincide, so zero-tests and equality
checks are exact.  Composition pushes derivatives through phases with the
finite Leibniz expansion, conjugation flips modes and conjugates matrices,
and adjoints are built from the primitive rules (d_mu)^+ = -d_mu and
(e^{ik.x})^+ = e^{-ik.x}.

``apply`` is generic over the amplitude scalars of the section, so the same
operator acts on numeric sections and on sections with anticommuting
amplitudes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

import numpy as np

from .torus_fields import (
    Mode,
    Section,
    ZERO_MODE,
    add_modes,
    negate_mode,
)

DerivIndex = tuple[int, ...]
TermKey = tuple[Mode, DerivIndex]


def _conj_pushed(terms: Mapping[TermKey, np.ndarray]) -> dict[TermKey, np.ndarray]:
    """Rewrite K . T as T' . K for the linear part T (K = conjugation)."""
    return {(negate_mode(k), d): np.conj(g) for (k, d), g in terms.items()}


class FieldOperator:
    __slots__ = ("fiber_dim", "antilinear", "terms")

    def __init__(
        self,
        fiber_dim: int,
        terms: Mapping[TermKey, np.ndarray] | None = None,
        antilinear: bool = False,
    ):
        self.fiber_dim = int(fiber_dim)
        self.antilinear = bool(antilinear)
        self.terms: dict[TermKey, np.ndarray] = {}
        if terms:
            for (k, d), g in terms.items():
                g = np.asarray(g, dtype=complex)
                if g.shape != (self.fiber_dim, self.fiber_dim):
                    raise ValueError("matrix shape does not match fiber dimension")
                self._accumulate((tuple(k), tuple(sorted(d))), g)

    def _accumulate(self, key: TermKey, g: np.ndarray) -> None:
        if key in self.terms:
            self.terms[key] = self.terms[key] + g
        else:
            self.terms[key] = g.copy()

    def _pruned(self) -> "FieldOperator":
        self.terms = {k: g for k, g in self.terms.items() if np.any(g != 0)}
        return self

    # ----- constructors -------------------------------------------------
    @staticmethod
    def zero(n: int, antilinear: bool = False) -> "FieldOperator":
        return FieldOperator(n, {}, antilinear)

    @staticmethod
    def identity(n: int) -> "FieldOperator":
        return FieldOperator(n, {(ZERO_MODE, ()): np.eye(n, dtype=complex)})

    @staticmethod
    def from_matrix(g: np.ndarray) -> "FieldOperator":
        g = np.asarray(g, dtype=complex)
        return FieldOperator(g.shape[0], {(ZERO_MODE, ()): g})

    @staticmethod
    def derivative(n: int, mu: int) -> "FieldOperator":
        return FieldOperator(n, {(ZERO_MODE, (mu,)): np.eye(n, dtype=complex)})

    @staticmethod
    def phase(n: int, mode: Mode) -> "FieldOperator":
        return FieldOperator(n, {(tuple(mode), ()): np.eye(n, dtype=complex)})

    @staticmethod
    def conjugation(n: int) -> "FieldOperator":
        return FieldOperator(n, {(ZERO_MODE, ()): np.eye(n, dtype=complex)}, antilinear=True)

    @staticmethod
    def from_function_matrix(entries) -> "FieldOperator":
        """Multiplication operator by a matrix of torus functions."""
        entries = np.asarray(entries, dtype=object)
        n = entries.shape[0]
        terms: dict[TermKey, np.ndarray] = {}
        for i in range(n):
            for j in range(n):
                f = entries[i, j]
                if f is None:
                    continue
                for k, c in f.coeffs.items():
                    key = (k, ())
                    if key not in terms:
                        terms[key] = np.zeros((n, n), dtype=complex)
                    terms[key][i, j] += c
        return FieldOperator(n, terms)

    # ----- linear structure ---------------------------------------------
    def __add__(self, other: "FieldOperator") -> "FieldOperator":
        if self.fiber_dim != other.fiber_dim:
            raise ValueError("fiber dimensions differ")
        if self.antilinear != other.antilinear:
            raise ValueError("cannot add linear and antilinear operators")
        out = FieldOperator(self.fiber_dim, self.terms, self.antilinear)
        for key, g in other.terms.items():
            out._accumulate(key, g)
        return out._pruned()

    def __sub__(self, other: "FieldOperator") -> "FieldOperator":
        return self + other.scale(-1.0)

    def __neg__(self) -> "FieldOperator":
        return self.scale(-1.0)

    def scale(self, c: complex) -> "FieldOperator":
        out = FieldOperator(self.fiber_dim, {}, self.antilinear)
        for key, g in self.terms.items():
            out.terms[key] = c * g
        return out._pruned()

    # ----- composition ---------------------------------------------------
    def __matmul__(self, other: "FieldOperator") -> "FieldOperator":
        return self.compose(other)

    def compose(self, other: "FieldOperator") -> "FieldOperator":
        if self.fiber_dim != other.fiber_dim:
            raise ValueError("fiber dimensions differ")
        b_terms = _conj_pushed(other.terms) if self.antilinear else other.terms
        out = FieldOperator(
            self.fiber_dim, {}, self.antilinear != other.antilinear
        )
        for (ka, da), ga in self.terms.items():
            for (kb, db), gb in b_terms.items():
                gab = ga @ gb
                mode = add_modes(ka, kb)
                # d^{da} e^{i kb.x} = e^{i kb.x} prod_mu (i kb_mu + d_mu):
                # expand over which factors keep the derivative.
                positions = range(len(da))
                for r in range(len(da) + 1):
                    for kept in combinations(positions, r):
                        kept_set = set(kept)
                        coeff = 1.0 + 0.0j
                        for p in positions:
                            if p not in kept_set:
                                coeff *= 1j * kb[da[p]]
                        if coeff == 0:
                            continue
                        d_new = tuple(sorted(tuple(da[p] for p in kept) + db))
                        out._accumulate((mode, d_new), coeff * gab)
        return out._pruned()

    # ----- involutions ---------------------------------------------------
    def conjugate_by(self, u: np.ndarray) -> "FieldOperator":
        """U O U^dagger for a constant unitary U."""
        u = np.asarray(u, dtype=complex)
        right = u.T if self.antilinear else u.conj().T
        out = FieldOperator(self.fiber_dim, {}, self.antilinear)
        for key, g in self.terms.items():
            out.terms[key] = u @ g @ right
        return out._pruned()

    def adjoint(self) -> "FieldOperator":
        if self.antilinear:
            lin = FieldOperator(self.fiber_dim, self.terms, False)
            adj = lin.adjoint()
            return FieldOperator(self.fiber_dim, _conj_pushed(adj.terms), True)
        n = self.fiber_dim
        out = FieldOperator(n, {}, False)
        for (k, d), g in self.terms.items():
            head = FieldOperator(n, {(ZERO_MODE, d): ((-1.0) ** len(d)) * g.conj().T})
            tail = FieldOperator.phase(n, negate_mode(k))
            out = out + head.compose(tail)
        return out._pruned()

    # ----- action on sections ---------------------------------------------
    def apply(self, section: Section) -> Section:
        if section.fiber_dim != self.fiber_dim:
            raise ValueError("fiber dimensions differ")
        src = section.conjugate() if self.antilinear else section
        out = Section(self.fiber_dim)
        for (k, d), g in self.terms.items():
            # gamma-structure matrices are sparse; an explicit entry list keeps
            # the object-dtype (Grassmann) path from touching zero entries
            rows = cols = vals = None
            for m, v in src.coeffs.items():
                factor = 1.0 + 0.0j
                for mu in d:
                    factor *= 1j * m[mu]
                if factor == 0:
                    continue
                target = add_modes(m, k)
                if v.dtype == object:
                    if rows is None:
                        rows, cols = np.nonzero(g)
                        vals = g[rows, cols]
                    w = np.zeros(self.fiber_dim, dtype=object)
                    for r, c, gv in zip(rows, cols, vals):
                        w[r] = w[r] + (factor * gv) * v[c]
                else:
                    w = np.dot(g, factor * v)
                if target in out.coeffs:
                    out.coeffs[target] = out.coeffs[target] + w
                else:
                    out.coeffs[target] = w
        return out

    # ----- diagnostics -----------------------------------------------------
    def max_abs(self) -> float:
        if not self.terms:
            return 0.0
        return max(float(np.max(np.abs(g))) for g in self.terms.values())

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.max_abs() <= tol

    def max_deriv_order(self) -> int:
        return max((len(d) for _, d in self.terms), default=0)

    def __repr__(self) -> str:
        kind = "antilinear" if self.antilinear else "linear"
        return f"FieldOperator(n={self.fiber_dim}, {kind}, {len(self.terms)} terms)"


# ----- derived constructions ------------------------------------------------

def twisted_commutator(
    d_op: FieldOperator, a: FieldOperator, a_twisted: FieldOperator
) -> FieldOperator:
    """D a - rho(a) D with the twisted image supplied by the caller."""
    return d_op.compose(a) - a_twisted.compose(d_op)


def commutator(a: FieldOperator, b: FieldOperator) -> FieldOperator:
    return a.compose(b) - b.compose(a)


def twist_by(o: FieldOperator, r: np.ndarray) -> FieldOperator:
    """The inner twist R O R^dagger."""
    return o.conjugate_by(r)


def twisted_adjoint(o: FieldOperator, r: np.ndarray) -> FieldOperator:
    """(R O R^dagger)^dagger, the adjoint taken after the inner twist."""
    return twist_by(o, r).adjoint()


def normal_form_distance(o1: FieldOperator, o2: FieldOperator) -> float:
    if o1.antilinear != o2.antilinear:
        return max(o1.max_abs(), o2.max_abs())
    keys = set(o1.terms) | set(o2.terms)
    n = o1.fiber_dim
    zero = np.zeros((n, n))
    best = 0.0
    for key in keys:
        g1 = o1.terms.get(key, zero)
        g2 = o2.terms.get(key, zero)
        best = max(best, float(np.max(np.abs(g1 - g2))))
    return best


def _probe_distance(diff: FieldOperator, probe_cutoff: int) -> float:
    """Max output amplitude of diff over all plane-wave basis probes.

    Applying to every fiber basis vector at a fixed probe mode at once
    amounts to accumulating factor-scaled copies of the term matrices.
    """
    rng = range(-probe_cutoff, probe_cutoff + 1)
    best = 0.0
    for k0 in rng:
        for k1 in rng:
            for k2 in rng:
                for k3 in rng:
                    m = (k0, k1, k2, k3)
                    m_eff = negate_mode(m) if diff.antilinear else m
                    acc: dict[Mode, np.ndarray] = {}
                    for (k, d), g in diff.terms.items():
                        factor = 1.0 + 0.0j
                        for mu in d:
                            factor *= 1j * m_eff[mu]
                        if factor == 0:
                            continue
                        target = add_modes(m_eff, k)
                        if target in acc:
                            acc[target] = acc[target] + factor * g
                        else:
                            acc[target] = factor * g
                    for mat in acc.values():
                        best = max(best, float(np.max(np.abs(mat))))
    return best


@dataclass(frozen=True)
class OperatorComparison:
    equal: bool
    max_abs_error: float
    normal_form_error: float
    probe_error: float


def operator_equal(
    o1: FieldOperator,
    o2: FieldOperator,
    probe_cutoff: int = 3,
    tol: float = 1e-12,
) -> OperatorComparison:
    """Compare two operators along two independent routes.

    Route one compares canonical normal forms; route two applies the
    difference to every plane-wave probe within the cutoff.  The two routes
    must agree on the verdict (the probe route's threshold is scaled by the
    worst derivative amplification) -- a disagreement raises, since it would
    mean the normal form is not faithful.
    """
    nf = normal_form_distance(o1, o2)
    if o1.antilinear != o2.antilinear:
        pr = max(
            _probe_distance(o1, probe_cutoff), _probe_distance(o2, probe_cutoff)
        )
    else:
        pr = _probe_distance(o1 - o2, probe_cutoff)
    order = max(o1.max_deriv_order(), o2.max_deriv_order())
    probe_tol = tol * max(1.0, float(probe_cutoff) ** order) * 4.0
    equal_nf = nf <= tol
    equal_pr = pr <= probe_tol
    if equal_nf != equal_pr:
        raise RuntimeError(
            f"equality routes disagree: normal-form {nf:.3e}, probe {pr:.3e}"
        )
    return OperatorComparison(equal_nf, max(nf, pr), nf, pr)
