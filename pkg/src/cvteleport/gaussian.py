"""Covariance-matrix representation of Gaussian states and symplectic transforms.

Conventions used throughout the package:

* quadrature ordering is interleaved, ``(x1, p1, x2, p2, ..., xN, pN)``
* vacuum-normalized units: the vacuum covariance matrix is the identity,
  so a state is physical iff every symplectic eigenvalue is >= 1
* the beam splitter follows the phase-free convention
  ``a_i -> a_i cos(t) + a_j sin(t)``, ``a_j -> a_i sin(t) - a_j cos(t)``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

SYMMETRY_TOL = 1e-12
PHYSICALITY_TOL = 1e-9


def omega(n_modes: int) -> np.ndarray:
    """Symplectic form: block diagonal with per-mode blocks [[0, 1], [-1, 0]]."""
    J = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return np.kron(np.eye(n_modes), J)


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class CovarianceMatrix:
    """Real symmetric 2N x 2N matrix of quadrature second moments.

    Validated on construction: symmetry to 1e-12, positive definiteness, and
    physicality (all symplectic eigenvalues >= 1 - 1e-9).
    """

    entries: np.ndarray
    n_modes: int = field(init=False)

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2 != 0:
            raise ValueError(f"covariance matrix must be 2N x 2N, got shape {m.shape}")
        if np.max(np.abs(m - m.T)) > SYMMETRY_TOL:
            raise ValueError("covariance matrix is not symmetric to 1e-12")
        m = 0.5 * (m + m.T)
        object.__setattr__(self, "entries", _freeze(m))
        object.__setattr__(self, "n_modes", m.shape[0] // 2)
        try:
            np.linalg.cholesky(m)
        except np.linalg.LinAlgError:
            raise ValueError("covariance matrix is not positive definite") from None
        nu_min = np.min(symplectic_eigenvalues(self))
        # norm-scaled slack only matters for extreme squeezing (entries >> 1e6),
        # where the eigensolve cannot resolve nu to 1e-9 in double precision
        tol = max(PHYSICALITY_TOL, 64 * np.finfo(float).eps * np.linalg.norm(m, 2))
        if nu_min < 1.0 - tol:
            raise ValueError(
                f"unphysical covariance matrix: min symplectic eigenvalue {nu_min}"
            )

    def mode_block(self, i: int, j: int) -> np.ndarray:
        """2x2 block coupling modes i and j (i == j gives a single-mode CM)."""
        return self.entries[2 * i:2 * i + 2, 2 * j:2 * j + 2]


@dataclass(frozen=True)
class SymplecticTransform:
    """Real 2N x 2N matrix S with S Omega S^T = Omega (checked to 1e-12)."""

    entries: np.ndarray
    n_modes: int = field(init=False)

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2 != 0:
            raise ValueError(f"symplectic matrix must be 2N x 2N, got shape {m.shape}")
        n = m.shape[0] // 2
        W = omega(n)
        if np.max(np.abs(m @ W @ m.T - W)) > SYMMETRY_TOL:
            raise ValueError("matrix does not preserve the symplectic form")
        object.__setattr__(self, "entries", _freeze(m))
        object.__setattr__(self, "n_modes", n)


@dataclass(frozen=True)
class ResourceSpec:
    """Knobs of the symmetric N-mode squeezed-thermal resource family.

    One momentum-squeezed mode (noise n1, squeezing r1 = rbar + d) is combined
    with N - 1 position-squeezed modes (noise n2, squeezing r2 = rbar - d)
    through a balanced N-splitter.

    By default the bias is constrained to |d| <= rbar so both squeezings stay
    nonnegative.  Pass ``constrain_bias=False`` to allow the unconstrained
    optimal bias, which may drive r2 slightly negative (an anti-squeezed but
    still physical input).
    """

    N: int
    n1: float
    n2: float
    rbar: float
    d: float = 0.0
    constrain_bias: bool = True

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise ValueError(f"N must be an integer >= 2, got {self.N}")
        object.__setattr__(self, "N", int(self.N))
        if self.n1 < 1.0 or self.n2 < 1.0:
            raise ValueError("thermal noise factors must be >= 1")
        if self.rbar < 0.0:
            raise ValueError("average squeezing rbar must be >= 0")
        if self.constrain_bias and abs(self.d) > self.rbar + 1e-12:
            raise ValueError(f"bias d={self.d} outside [-rbar, rbar] with rbar={self.rbar}")

    @property
    def r1(self) -> float:
        return self.rbar + self.d

    @property
    def r2(self) -> float:
        return self.rbar - self.d


def vacuum_cm(n_modes: int) -> CovarianceMatrix:
    """Vacuum state of n_modes modes: the 2N x 2N identity."""
    if n_modes < 1:
        raise ValueError(f"n_modes must be >= 1, got {n_modes}")
    return CovarianceMatrix(np.eye(2 * n_modes))


def squeezed_thermal_cm(n: float, r: float, axis: str = "momentum") -> CovarianceMatrix:
    """Single-mode squeezed thermal state.

    axis="momentum": diag(n e^{2r}, n e^{-2r}) (reduced p variance);
    axis="position": diag(n e^{-2r}, n e^{2r}).  Negative r is accepted and
    simply swaps the squeezed quadrature.
    """
    if n < 1.0:
        raise ValueError(f"thermal noise factor must be >= 1, got {n}")
    if axis not in ("momentum", "position"):
        raise ValueError(f"axis must be 'momentum' or 'position', got {axis!r}")
    s = np.exp(2.0 * r)
    if axis == "momentum":
        return CovarianceMatrix(np.diag([n * s, n / s]))
    return CovarianceMatrix(np.diag([n / s, n * s]))


def beam_splitter(theta: float, i: int, j: int, n_modes: int) -> SymplecticTransform:
    """Phase-free beam splitter between modes i and j of an n_modes system.

    Acts as (x_i, p_i) -> cos(t)(x_i, p_i) + sin(t)(x_j, p_j) and
    (x_j, p_j) -> sin(t)(x_i, p_i) - cos(t)(x_j, p_j); identity elsewhere.
    Note the minus sign on the second output mode.
    """
    if i == j:
        raise ValueError("beam splitter needs two distinct modes")
    if not (0 <= i < n_modes and 0 <= j < n_modes):
        raise ValueError(f"mode indices ({i}, {j}) out of range for {n_modes} modes")
    c, s = np.cos(theta), np.sin(theta)
    S = np.eye(2 * n_modes)
    for q in (0, 1):  # same action on x and p (phase-free)
        a, b = 2 * i + q, 2 * j + q
        S[a, a] = c
        S[a, b] = s
        S[b, a] = s
        S[b, b] = -c
    return SymplecticTransform(S)


def squeezer(r: float, mode: int, n_modes: int) -> SymplecticTransform:
    """Single-mode squeezer diag(e^r, e^{-r}) on the given mode."""
    if not 0 <= mode < n_modes:
        raise ValueError(f"mode {mode} out of range for {n_modes} modes")
    S = np.eye(2 * n_modes)
    S[2 * mode, 2 * mode] = np.exp(r)
    S[2 * mode + 1, 2 * mode + 1] = np.exp(-r)
    return SymplecticTransform(S)


@lru_cache(maxsize=None)
def n_splitter(N: int) -> SymplecticTransform:
    """Balanced N-splitter distributing mode 0 evenly over all N outputs.

    Cascade of beam splitters B_{N-1,N}(pi/4) ... B_{1,2}(arccos 1/sqrt(N))
    (1-based mode labels), with the rightmost factor applied first.  The
    first input column of the resulting transform is 1/sqrt(N) on every mode.
    """
    if N < 2:
        raise ValueError(f"N-splitter needs N >= 2, got {N}")
    S = np.eye(2 * N)
    for k in range(1, N):  # k-th factor: B_{k,k+1}(arccos 1/sqrt(N-k+1))
        theta = np.arccos(1.0 / np.sqrt(N - k + 1))
        S = beam_splitter(theta, k - 1, k, N).entries @ S
    return SymplecticTransform(S)


def apply(S: SymplecticTransform, sigma: CovarianceMatrix) -> CovarianceMatrix:
    """Transform the state: sigma -> S sigma S^T."""
    if S.n_modes != sigma.n_modes:
        raise ValueError(
            f"dimension mismatch: transform has {S.n_modes} modes, state {sigma.n_modes}"
        )
    out = S.entries @ sigma.entries @ S.entries.T
    return CovarianceMatrix(0.5 * (out + out.T))


def block_diag_cm(*cms: CovarianceMatrix) -> CovarianceMatrix:
    """Product (uncorrelated) state of the given single- or multi-mode states."""
    total = sum(c.n_modes for c in cms)
    out = np.zeros((2 * total, 2 * total))
    at = 0
    for c in cms:
        k = 2 * c.n_modes
        out[at:at + k, at:at + k] = c.entries
        at += k
    return CovarianceMatrix(out)


def build_resource(spec: ResourceSpec) -> CovarianceMatrix:
    """N-mode symmetric resource: N-splitter on one momentum-squeezed mode
    (n1, r1) and N-1 position-squeezed modes (n2, r2)."""
    inputs = [squeezed_thermal_cm(spec.n1, spec.r1, "momentum")]
    inputs += [squeezed_thermal_cm(spec.n2, spec.r2, "position")] * (spec.N - 1)
    return apply(n_splitter(spec.N), block_diag_cm(*inputs))


def symplectic_eigenvalues(sigma) -> np.ndarray:
    """Symplectic spectrum of a CM-shaped matrix, sorted ascending.

    Returns the N moduli of the spectrum of i*Omega*sigma (each doubly
    degenerate pair collapsed to one), computed as the positive square roots
    of the eigenvalues of -(Omega sigma)^2.  Accepts a CovarianceMatrix or a
    raw symmetric matrix (e.g. a partial transpose, which may be unphysical).
    """
    m = sigma.entries if isinstance(sigma, CovarianceMatrix) else np.asarray(sigma, float)
    n = m.shape[0] // 2
    ws = omega(n) @ m
    ev = np.linalg.eigvals(-ws @ ws)
    ev = np.sort(np.clip(ev.real, 0.0, None))
    nu = np.sqrt(ev)
    return 0.5 * (nu[0::2] + nu[1::2])  # collapse the degenerate pairs


def partial_transpose(sigma: CovarianceMatrix, modes) -> np.ndarray:
    """Time reversal (p -> -p) on the selected modes: returns Lambda sigma Lambda.

    The result is a plain matrix because it is generally not a physical state;
    its symplectic spectrum dropping below 1 is exactly the entanglement
    witness.
    """
    modes = sorted(set(modes))
    if not modes or len(modes) >= sigma.n_modes:
        raise ValueError("modes must be a non-empty proper subset of the state's modes")
    if modes[0] < 0 or modes[-1] >= sigma.n_modes:
        raise ValueError(f"mode indices {modes} out of range")
    lam = np.ones(2 * sigma.n_modes)
    for m in modes:
        lam[2 * m + 1] = -1.0
    return sigma.entries * np.outer(lam, lam)


def purity(sigma: CovarianceMatrix) -> float:
    """Purity of the Gaussian state, 1/sqrt(det sigma)."""
    sign, logdet = np.linalg.slogdet(sigma.entries)
    return float(np.exp(-0.5 * logdet))
