"""Dense symmetric matrices built from radial kernels on point sets.

The eigensolver is a cyclic Jacobi iteration (rotations sweep the upper
triangle until the off-diagonal Frobenius norm falls below 1e-14 times
the matrix norm).  On top of it: inertia counts under a tolerance, the
negative-eigenvalue counter for kernel matrices, closed-form circulant
spectra for polygon configurations, and the block-matrix lambda formula
for the simplex-with-center witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geometry, kernels, specfun
from .errors import DomainError, NumericalFailureError
from .geometry import PointConfig
from .kernels import RadialKernel

__all__ = [
    "SymmetricMatrix",
    "Inertia",
    "schoenberg_matrix",
    "sym_eigenvalues",
    "inertia_of",
    "default_tolerance",
    "kappa_minus",
    "circulant_eigs",
    "polygon_circulant_row",
    "simplex_lambda",
]

MAX_DENSE_ORDER = 4000


@dataclass(frozen=True)
class SymmetricMatrix:
    """Dense real symmetric matrix; symmetry is enforced by mirroring the
    upper triangle into storage."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DomainError("entries must form a nonempty square matrix")
        if not np.isfinite(a).all():
            raise DomainError("matrix entries must be finite")
        upper = np.triu(a)
        sym = upper + np.triu(a, k=1).T
        sym.flags.writeable = False
        object.__setattr__(self, "entries", sym)

    @classmethod
    def from_array(cls, a: np.ndarray, asym_tol: float = 1e-9) -> "SymmetricMatrix":
        a = np.asarray(a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DomainError("expected a square matrix")
        scale = max(1.0, float(np.abs(a).max()) if a.size else 0.0)
        if a.size and float(np.abs(a - a.T).max()) > asym_tol * scale:
            raise DomainError("matrix is not symmetric")
        return cls(entries=a)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def norm_inf(self) -> float:
        return float(np.abs(self.entries).sum(axis=1).max())


@dataclass(frozen=True)
class Inertia:
    """Eigenvalue counts below -tol, within [-tol, tol], and above tol."""

    n_neg: int
    n_zero: int
    n_pos: int
    tol: float

    def __post_init__(self):
        if not self.tol > 0.0:
            raise DomainError("inertia tolerance must be positive")

    @property
    def order(self) -> int:
        return self.n_neg + self.n_zero + self.n_pos


def schoenberg_matrix(k: RadialKernel, config: PointConfig) -> SymmetricMatrix:
    """The matrix f(|x_i - x_j|) of the kernel over the point set.

    Kernel values are cached per distinct distance, which collapses the
    work for highly symmetric configurations.
    """
    d = geometry.pairwise_distances(config)
    flat = d.ravel()
    uniq, inverse = np.unique(flat, return_inverse=True)
    vals = np.array([kernels.eval_kernel(k, float(r)) for r in uniq])
    entries = vals[inverse].reshape(d.shape)
    # exact symmetry: distances d[i,j] and d[j,i] are the same float
    return SymmetricMatrix(entries=entries)


def sym_eigenvalues(a: SymmetricMatrix, sweep_cap: int = 40) -> np.ndarray:
    """All eigenvalues, ascending, by cyclic Jacobi rotations.

    Rotations run until the off-diagonal Frobenius norm drops below
    1e-14 times the matrix Frobenius norm; each eigenvalue then carries
    an error well below 1e-10 * ||A||.
    """
    n = a.order
    if n > MAX_DENSE_ORDER:
        raise DomainError(f"dense eigensolver capped at order {MAX_DENSE_ORDER}")
    m = a.entries.copy()
    if n == 1:
        return m.diagonal().copy()
    norm = float(np.linalg.norm(m))
    if norm == 0.0:
        return np.zeros(n)
    target = 1e-14 * norm
    # rotations cannot push the off-norm below this, so skip tiny pivots
    pivot_floor = target / (n * n)

    for _ in range(sweep_cap):
        off = math.sqrt(max(0.0, float(np.sum(m * m)) - float(np.sum(m.diagonal() ** 2))))
        if off <= target:
            return np.sort(m.diagonal().copy())
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if abs(apq) <= pivot_floor:
                    continue
                theta = 0.5 * (m[q, q] - m[p, p]) / apq
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                row_p = m[p, :].copy()
                row_q = m[q, :].copy()
                m[p, :] = c * row_p - s * row_q
                m[q, :] = s * row_p + c * row_q
                col_p = m[:, p].copy()
                col_q = m[:, q].copy()
                m[:, p] = c * col_p - s * col_q
                m[:, q] = s * col_p + c * col_q
                m[p, q] = 0.0
                m[q, p] = 0.0

    off = math.sqrt(max(0.0, float(np.sum(m * m)) - float(np.sum(m.diagonal() ** 2))))
    raise NumericalFailureError(
        f"Jacobi failed to converge in {sweep_cap} sweeps (off-norm {off:.3e}, "
        f"target {target:.3e})",
        detail=off,
    )


def default_tolerance(a: SymmetricMatrix) -> float:
    """Negative-eigenvalue threshold separating genuine negativity from
    rounding: 1e-9 * max(1, ||A||_inf)."""
    return 1e-9 * max(1.0, a.norm_inf())


def inertia_of(a: SymmetricMatrix, tol: float) -> Inertia:
    if not tol > 0.0:
        raise DomainError("inertia tolerance must be positive")
    eigs = sym_eigenvalues(a)
    n_neg = int(np.sum(eigs < -tol))
    n_pos = int(np.sum(eigs > tol))
    return Inertia(n_neg=n_neg, n_zero=a.order - n_neg - n_pos, n_pos=n_pos, tol=tol)


def kappa_minus(k: RadialKernel, config: PointConfig, tol: float | None = None) -> int:
    """Number of eigenvalues of the kernel matrix over the configuration
    below -tol (tol defaults to default_tolerance of the matrix)."""
    a = schoenberg_matrix(k, config)
    if tol is None:
        tol = default_tolerance(a)
    return inertia_of(a, tol).n_neg


def circulant_eigs(first_row: np.ndarray) -> np.ndarray:
    """Spectrum of the symmetric circulant with the given first row:

        lambda_k = sum_{j=1..m} a_j cos(2 pi k j / m),  k = 1..m,

    returned in that k order (a_m means a_0 by periodicity)."""
    row = np.asarray(first_row, dtype=float)
    if row.ndim != 1 or row.size == 0:
        raise DomainError("first_row must be a nonempty vector")
    m = row.size
    scale = max(1.0, float(np.abs(row).max()))
    if float(np.abs(row[1:] - row[1:][::-1]).max(initial=0.0)) > 1e-12 * scale:
        raise DomainError("circulant row lacks the even symmetry a_{m-j} = a_j")
    lam = np.fft.fft(row).real
    return np.concatenate([lam[1:], lam[:1]])


def polygon_circulant_row(k: RadialKernel, m: int, r: float) -> np.ndarray:
    """First row of the kernel matrix over the regular m-gon of radius r:
    entries g(2 r sin(pi j / m)), j = 0..m-1."""
    if m < 3:
        raise DomainError("polygon needs m >= 3")
    if not r > 0.0:
        raise DomainError("radius must be positive")
    j = np.arange(m)
    folded = np.minimum(j, m - j)  # sin(pi j/m) = sin(pi (m-j)/m), made exact
    chords = 2.0 * r * np.sin(np.pi * folded / m)
    row = np.empty(m)
    cache: dict[float, float] = {}
    for i, c in enumerate(chords):
        key = float(c)
        if key not in cache:
            cache[key] = kernels.eval_kernel(k, key)
        row[i] = cache[key]
    return row


def simplex_lambda(m: int, k: RadialKernel, t: float) -> tuple[float, bool]:
    """The decisive eigenvalue of the simplex-with-center kernel matrix:

        lambda = 1 + (m+1) f(t) - (m+2) f(rho_m t)**2

    plus the flag that the matrix has a negative eigenvalue, which happens
    iff f(t) > 1 or lambda < 0.
    """
    if m < 1:
        raise DomainError("simplex_lambda requires m >= 1")
    if not t > 0.0:
        raise DomainError("scale t must be positive")
    rho = geometry.simplex_circumradius_factor(m)
    ft = kernels.eval_kernel(k, t)
    fb = kernels.eval_kernel(k, rho * t)
    lam = 1.0 + (m + 1) * ft - (m + 2) * fb * fb
    return lam, (ft > 1.0) or (lam < 0.0)
