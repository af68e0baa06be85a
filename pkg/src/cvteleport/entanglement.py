"""Entanglement measures for the symmetric squeezed-thermal resource family.

All measures funnel through the smallest symplectic eigenvalue eta of the
partially transposed covariance matrix (PPT criterion: entangled iff eta < 1)
and its N-mode generalization eta_N.  Entropic quantities default to base-2
logarithms (ebits); pass ``base=np.e`` for nats.  Monotonicity statements are
base independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gaussian import (
    CovarianceMatrix,
    ResourceSpec,
    build_resource,
    partial_transpose,
    purity,
    symplectic_eigenvalues,
)

DISCRIMINANT_TOL = 1e-9
GHZ_LIMIT_TOL = 1e-12


@dataclass(frozen=True)
class TwoModeBlocks:
    """alpha/beta: single-mode 2x2 blocks; gamma: intermodal correlations."""

    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray

    @classmethod
    def from_cm(cls, sigma: CovarianceMatrix) -> "TwoModeBlocks":
        if sigma.n_modes != 2:
            raise ValueError(f"expected a two-mode state, got {sigma.n_modes} modes")
        return cls(sigma.mode_block(0, 0), sigma.mode_block(1, 1), sigma.mode_block(0, 1))


@dataclass(frozen=True)
class EntanglementReport:
    """All measures of a resource in one record.

    eta / E_F refer to the 1|rest mode bipartition and are filled only for
    N = 2, where the state is symmetric and the formation entanglement has a
    closed form.  E_tau is filled only for pure three-mode resources.
    """

    eta: float | None
    eta_N: float
    E_F: float | None
    E_T: float
    E_F_loc: float
    E_tau: float | None


def eta_two_mode(sigma: CovarianceMatrix) -> float:
    """Smallest symplectic eigenvalue of the partial transpose of a two-mode CM.

    Uses the determinant formula 2 eta^2 = S - sqrt(S^2 - 4 det sigma) with
    S = det alpha + det beta - 2 det gamma.
    """
    b = TwoModeBlocks.from_cm(sigma)
    S = float(np.linalg.det(b.alpha) + np.linalg.det(b.beta) - 2.0 * np.linalg.det(b.gamma))
    det = float(np.linalg.det(sigma.entries))
    disc = S * S - 4.0 * det
    if disc < -DISCRIMINANT_TOL:
        raise ArithmeticError(f"negative discriminant {disc} in symplectic eigenvalue formula")
    disc = max(disc, 0.0)
    eta2 = 0.5 * (S - math.sqrt(disc))
    if eta2 < -DISCRIMINANT_TOL:
        raise ArithmeticError(f"negative squared eigenvalue {eta2}")
    return math.sqrt(max(eta2, 0.0))


def eta_closed_form(n1: float, n2: float, r1: float, r2: float) -> float:
    """PPT symplectic eigenvalue of the two-mode resource: sqrt(n1 n2) e^{-(r1+r2)}."""
    if n1 < 1.0 or n2 < 1.0:
        raise ValueError("thermal noise factors must be >= 1")
    return math.sqrt(n1 * n2) * math.exp(-(r1 + r2))


def is_entangled(eta: float) -> bool:
    """PPT criterion: a two-mode Gaussian state is entangled iff eta < 1."""
    if eta <= 0.0:
        raise ValueError(f"eta must be positive, got {eta}")
    return eta < 1.0


def _f(x: float, base: float) -> float:
    """Entropic function f(x) of the symmetric-state formation entanglement."""
    lb = math.log(base)
    a = (1.0 + x) ** 2 / (4.0 * x)
    b = (1.0 - x) ** 2 / (4.0 * x)
    out = a * math.log(a) / lb
    if b > 0.0:
        out -= b * math.log(b) / lb
    return out


def eof_symmetric(eta: float, base: float = 2.0) -> float:
    """Entanglement of formation of a symmetric two-mode Gaussian state.

    E_F = max{0, f(eta)}; zero at and above the separability threshold eta = 1,
    divergent as eta -> 0.
    """
    if eta <= 0.0:
        raise ValueError(f"eta must be positive, got {eta}")
    if eta >= 1.0:
        return 0.0
    return _f(eta, base)


def eta_generalized(spec: ResourceSpec) -> float:
    """Generalized PPT eigenvalue eta_N of the optimized N-mode resource.

    eta_N = sqrt(N n1 n2 / (2 e^{4 rbar} + (N-2) n1/n2)); depends on the
    iso-entangled class (N, n1, n2, rbar) only -- the bias d is ignored.
    Reduces to eta_closed_form(n1, n2, rbar, rbar) at N = 2.
    """
    N, n1, n2 = spec.N, spec.n1, spec.n2
    return math.sqrt(N * n1 * n2 / (2.0 * math.exp(4.0 * spec.rbar) + (N - 2) * n1 / n2))


def entanglement_of_teleportation(eta_N: float) -> float:
    """E_T = max{0, (1 - eta_N)/(1 + eta_N)}, in [0, 1)."""
    if eta_N <= 0.0:
        raise ValueError(f"eta_N must be positive, got {eta_N}")
    return max(0.0, (1.0 - eta_N) / (1.0 + eta_N))


def eof_localizable(E_T: float, base: float = 2.0) -> float:
    """Localizable entanglement of formation: f applied to (1-E_T)/(1+E_T)."""
    if not 0.0 <= E_T < 1.0:
        raise ValueError(f"E_T must lie in [0, 1), got {E_T}")
    if E_T == 0.0:
        return 0.0
    return _f((1.0 - E_T) / (1.0 + E_T), base)


def contangle_from_ET(E_T: float, base: float = 2.0, pure_three_mode: bool = True) -> float:
    """Residual contangle of a pure symmetric three-mode resource from E_T.

    Valid only for pure three-mode symmetric states; the caller asserts this
    via ``pure_three_mode``.  Returns math.inf for E_T within 1e-12 of the
    (unnormalizable) GHZ limit E_T = 1.
    """
    if not pure_three_mode:
        raise ValueError("contangle formula is valid only for pure symmetric three-mode states")
    if not 0.0 <= E_T < 1.0:
        raise ValueError(f"E_T must lie in [0, 1), got {E_T}")
    if E_T >= 1.0 - GHZ_LIMIT_TOL:
        return math.inf
    if E_T == 0.0:
        return 0.0
    lb = math.log(base)
    num = 2.0 * math.sqrt(2.0) * E_T - (E_T + 1.0) * math.sqrt(E_T ** 2 + 1.0)
    den = (E_T - 1.0) * math.sqrt(E_T * (E_T + 4.0) + 1.0)
    first = math.log(num / den) / lb
    second = math.log((E_T ** 2 + 1.0) / (E_T * (E_T + 4.0) + 1.0)) / lb
    return first ** 2 - 0.5 * second ** 2


def epr_eta_symmetric(sigma: CovarianceMatrix, tol: float = 1e-8) -> float:
    """eta of a symmetric two-mode state from its EPR correlations.

    4 eta = <(x1 - x2)^2> + <(p1 + p2)^2>; holds only when det alpha equals
    det beta, so asymmetric inputs are rejected.
    """
    b = TwoModeBlocks.from_cm(sigma)
    da, db = np.linalg.det(b.alpha), np.linalg.det(b.beta)
    if abs(da - db) > tol * max(1.0, abs(da), abs(db)):
        raise ValueError("EPR identity requires a symmetric state (det alpha = det beta)")
    m = sigma.entries
    var_x_rel = m[0, 0] - 2.0 * m[0, 2] + m[2, 2]
    var_p_tot = m[1, 1] + 2.0 * m[1, 3] + m[3, 3]
    return 0.25 * (var_x_rel + var_p_tot)


def entanglement_report(spec: ResourceSpec, base: float = 2.0) -> EntanglementReport:
    """Assemble every applicable measure for one resource.

    eta is taken from the covariance-matrix pipeline (partial transpose of the
    first mode); eta_N, E_T and E_F_loc from the closed forms.  E_tau is
    evaluated only for pure three-mode resources, where the contangle formula
    applies.
    """
    sigma = build_resource(spec)
    eta_pt = float(np.min(symplectic_eigenvalues(partial_transpose(sigma, {0}))))
    eta_n = eta_generalized(spec)
    E_T = entanglement_of_teleportation(eta_n)
    E_F = eof_symmetric(eta_two_mode(sigma), base) if spec.N == 2 else None
    is_pure_three = spec.N == 3 and abs(purity(sigma) - 1.0) <= 1e-9
    E_tau = contangle_from_ET(E_T, base) if is_pure_three else None
    return EntanglementReport(
        eta=eta_pt,
        eta_N=eta_n,
        E_F=E_F,
        E_T=E_T,
        E_F_loc=eof_localizable(E_T, base),
        E_tau=E_tau,
    )
