"""Higher-level certification procedures.

Moment-determinant obstructions, Fourier coefficients of kernels over
circles, closed-form polygon spectra and their negative counts, counts of
negative even-order Bessel values, the oscillatory functional h for
measures separated from the origin, and the spacing search that drives
the negative-eigenvalue count of shifted-union matrices past any target.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import geometry, kernels, matrices, quadrature, specfun
from .errors import AccuracyError, DomainError, SearchFailureError
from .geometry import PointConfig
from .kernels import RadialKernel
from .measures import DEFAULT_SPEC, QuadratureSpec, RadialMeasure

__all__ = [
    "CertificateReport",
    "omega_moments",
    "moment_determinant",
    "fourier_coefficient",
    "polygon_negative_count",
    "even_bessel_negative_count",
    "h_oscillatory",
    "kernel_limit_at_infinity",
    "simplex_witness_scan",
    "strongest_simplex_witness",
    "negative_squares_growth",
]


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of a certification run: what was claimed, the witness
    parameters, the quantitative margin, and the verdict.

    ``passed`` requires the margin to exceed the declared tolerance by a
    factor of at least 10.
    """

    claim: str
    witness: dict
    margin: float
    tolerance: float
    passed: bool

    def __post_init__(self):
        if self.passed and not self.margin >= 10.0 * self.tolerance:
            raise DomainError("a passing certificate needs margin >= 10 * tolerance")

    def to_json(self) -> str:
        payload = {
            "claim": self.claim,
            "witness": self.witness,
            "margin": self.margin,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }
        return json.dumps(payload, sort_keys=True)


def omega_moments(n: int, big_k: int) -> list[float]:
    """[s_0, s_2, ..., s_{2K}] of the hypothetical mixing measure that
    would push Omega_n one dimension up:

        s_0 = 1,  s_{2k} = prod_{j=1..k} (n+2j-1)/(n+2j-2).
    """
    if n < 1 or big_k < 1:
        raise DomainError("omega_moments requires n >= 1 and K >= 1")
    out = [1.0]
    acc = 1.0
    for j in range(1, big_k + 1):
        acc *= (n + 2 * j - 1) / (n + 2 * j - 2)
        out.append(acc)
    return out


def moment_determinant(n: int) -> float:
    """det [[s_0, s_2], [s_2, s_4]] of those moments.

    Equals -(n+1)/(n**2 (n+2)) in closed form; its negativity certifies
    that no such mixing measure exists, i.e. Omega_n does not extend one
    dimension up.
    """
    s = omega_moments(n, 2)
    return s[0] * s[2] - s[1] * s[1]


def fourier_coefficient(
    k: RadialKernel, idx: int, r: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Cosine Fourier coefficient of the kernel restricted to a circle:

        g_hat(idx, r) = (1/2 pi) int_0^{2 pi} g(2 r sin(t/2)) cos(idx t) dt

    by the periodic trapezoid rule with node doubling.
    """
    if idx < 1:
        raise DomainError("fourier_coefficient requires idx >= 1")
    if not r > 0.0:
        raise DomainError("fourier_coefficient requires r > 0")

    def integrand(t: float) -> float:
        return kernels.eval_kernel(k, 2.0 * r * math.sin(0.5 * t)) * math.cos(idx * t)

    start = 64
    while start < 8 * idx:
        start *= 2
    val, _ = quadrature.periodic_trapezoid(
        integrand, 0.0, 2.0 * math.pi, abs_tol=spec.abs_tol, start_nodes=start
    )
    return val / (2.0 * math.pi)


def polygon_spectrum(k: RadialKernel, m: int, r: float) -> np.ndarray:
    """Closed-form spectrum (k = 1..m) of the kernel matrix over the
    regular m-gon of radius r."""
    row = matrices.polygon_circulant_row(k, m, r)
    return matrices.circulant_eigs(row)


def polygon_negative_count(k: RadialKernel, m: int, r: float, tol: float) -> int:
    """Number of closed-form polygon eigenvalues below -tol."""
    if not tol > 0.0:
        raise DomainError("tolerance must be positive")
    lam = polygon_spectrum(k, m, r)
    return int(np.sum(lam < -tol))


def even_bessel_negative_count(x: float, big_k: int) -> int:
    """Count of negatives among {J_{2p}(x)}_{p=1..K}.

    If any |J_{2p}(x)| falls below 1e-12 the argument is nudged by 1e-6
    so the count is taken away from a zero.
    """
    if not x > 0.0:
        raise DomainError("even_bessel_negative_count requires x > 0")
    if big_k < 1:
        raise DomainError("K must be at least 1")
    for _ in range(8):
        seq = specfun.bessel_j_even_sequence(x, big_k)
        if min(abs(v) for v in seq[1:]) >= 1e-12:
            break
        x += 1e-6
    return sum(1 for v in seq[1:] if v < 0.0)


def h_oscillatory(nu: RadialMeasure, r: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """The oscillatory functional

        h(r) = (1/(2 pi**1.5)) int cos(2 r s - pi/4) / sqrt(s) nu(ds)

    for measures whose support stays away from the origin.  Discrete
    measures are summed exactly.
    """
    if not r > 0.0:
        raise DomainError("h_oscillatory requires r > 0")
    if nu.support_lower() <= 0.0:
        raise DomainError("h_oscillatory needs support separated from the origin")
    pref = 1.0 / (2.0 * math.pi**1.5)
    total = sum(
        mass * math.cos(2.0 * r * loc - 0.25 * math.pi) / math.sqrt(loc)
        for loc, mass in nu.atoms
    )
    d = nu.density
    if d is not None:

        def integrand(s: float, dlo: float, dhi: float) -> float:
            return math.cos(2.0 * r * s - 0.25 * math.pi) / math.sqrt(s) * d.eval_aware(
                s, dlo, dhi
            )

        if math.isinf(d.hi) and r > 1.0:
            u0 = d.lo + 40.0 / (2.0 * r)
            head, _ = quadrature.tanh_sinh_aware(
                integrand, d.lo, u0, abs_tol=spec.abs_tol, max_refinements=spec.max_refinements
            )
            tail, _ = quadrature.oscillatory_tail(
                integrand, u0, math.pi / (2.0 * r), abs_tol=spec.abs_tol
            )
            total += head + tail
        else:
            val, _ = quadrature.integrate(
                integrand,
                d.lo,
                d.hi,
                spec,
                left_exponent=d.left_exponent,
                right_exponent=d.right_exponent,
                decay=d.decay,
                endpoint_aware=True,
            )
            total += val
    return pref * total


_LIMIT_GRID_LO = 6  # dyadic octaves 2**6 .. 2**23
_LIMIT_GRID_HI = 23
_LIMIT_OSC_TOL = 1e-3


def kernel_limit_at_infinity(k: RadialKernel) -> float:
    """Numerical detection of lim g(r) as r -> inf on a dyadic log grid.

    Each octave [2**j, 2**(j+1)] is sampled at 8 points; the limit is
    accepted once the oscillation (max - min) within an octave falls
    below 1e-3, and its value is the octave mean.  Kernels that keep
    oscillating (cosine types) raise DomainError.
    """
    offsets = np.linspace(0.0, 1.0, 8, endpoint=False)
    for j in range(_LIMIT_GRID_LO, _LIMIT_GRID_HI + 1):
        base = 2.0**j
        vals = [kernels.eval_kernel(k, float(base * (1.0 + off))) for off in offsets]
        if max(vals) - min(vals) < _LIMIT_OSC_TOL:
            mean = sum(vals) / len(vals)
            if mean < -_LIMIT_OSC_TOL:
                raise DomainError(f"kernel tends to a negative limit {mean:.3e}")
            return mean
    raise DomainError(
        "no limit at infinity detected on the dyadic grid (oscillation persists)"
    )


def simplex_witness_scan(
    k: RadialKernel, m: int, tol: float | None = None, t_start: float = 0.5, max_halvings: int = 40
) -> tuple[float, float, PointConfig]:
    """Scan t in {t_start, t_start/2, ...} until the simplex lambda drops
    below -10 * tol * (m+3); returns (t, lambda, configuration)."""
    t = t_start
    for _ in range(max_halvings):
        lam, has_neg = matrices.simplex_lambda(m, k, t)
        cfg = geometry.simplex_with_center(m, t)
        if tol is None:
            a = matrices.schoenberg_matrix(k, cfg)
            eff_tol = matrices.default_tolerance(a)
        else:
            eff_tol = tol
        if has_neg and lam < -10.0 * eff_tol * (m + 3):
            return t, lam, cfg
        t *= 0.5
    raise SearchFailureError(
        f"no simplex witness found for m={m} down to t={t:g}", best=None
    )


def strongest_simplex_witness(
    k: RadialKernel, m: int, t_grid: list[float] | None = None
) -> tuple[float, float, PointConfig]:
    """The scale t minimising the simplex lambda over a coarse grid
    (a deeper negative eigenvalue survives larger shift couplings in the
    spacing search)."""
    if t_grid is None:
        t_grid = [0.25 * j for j in range(1, 25)]
    best = None
    for t in t_grid:
        lam, _ = matrices.simplex_lambda(m, k, t)
        if best is None or lam < best[1]:
            best = (t, lam)
    t, lam = best
    if lam >= 0.0:
        raise SearchFailureError(f"no negative simplex lambda on the grid for m={m}")
    return t, lam, geometry.simplex_with_center(m, t)


def negative_squares_growth(
    k: RadialKernel,
    base: PointConfig,
    target: int,
    tol: float | None = None,
    gap_cap_factor: float = 2.0**20,
) -> CertificateReport:
    """Drive the negative-eigenvalue count of a shifted-union matrix to the
    target by doubling the copy spacing.

    Preconditions: the base configuration already carries one negative
    eigenvalue, and the kernel has a (numerically detected) limit at
    infinity; kernels without one (cosine types) are rejected, and their
    counts should be produced by polygon_negative_count instead.  When the
    limit is positive the rank-one correction argument only guarantees
    target-1 negatives; the report states what was achieved.
    """
    if target < 1:
        raise DomainError("target count must be >= 1")
    base_matrix = matrices.schoenberg_matrix(k, base)
    eff_tol = tol if tol is not None else matrices.default_tolerance(base_matrix)
    base_inertia = matrices.inertia_of(base_matrix, eff_tol)
    if base_inertia.n_neg < 1:
        raise DomainError("the base configuration carries no negative eigenvalue")
    limit = kernel_limit_at_infinity(k)

    kernel_text = kernels.format_kernel(k)
    claim = f"kernel matrices of {kernel_text} reach >= {target} negative eigenvalues"
    if target == 1:
        eigs = matrices.sym_eigenvalues(base_matrix)
        return CertificateReport(
            claim=claim,
            witness={"base": base.label, "spacings": [0.0], "achieved": base_inertia.n_neg,
                     "limit_at_infinity": limit, "guaranteed": target},
            margin=float(-eigs[0]),
            tolerance=eff_tol,
            passed=True,
        )

    diam = base.diameter()
    gap = 10.0 * diam
    best_count = base_inertia.n_neg
    best_witness = None
    while gap <= gap_cap_factor * diam:
        spacings = [j * gap for j in range(target)]
        union = geometry.shifted_union(base, spacings, axis=0)
        a = matrices.schoenberg_matrix(k, union)
        eigs = matrices.sym_eigenvalues(a)
        count = int(np.sum(eigs < -eff_tol))
        if count > best_count:
            best_count = count
            best_witness = {"base": base.label, "spacings": spacings, "achieved": count,
                            "limit_at_infinity": limit,
                            "guaranteed": target - (1 if limit > 0.0 else 0)}
        if count >= target:
            margin = float(-np.sort(eigs)[target - 1])
            return CertificateReport(
                claim=claim,
                witness={"base": base.label, "spacings": spacings, "achieved": count,
                         "limit_at_infinity": limit,
                         "guaranteed": target - (1 if limit > 0.0 else 0)},
                margin=margin,
                tolerance=eff_tol,
                passed=margin >= 10.0 * eff_tol,
            )
        gap *= 2.0
    raise SearchFailureError(
        f"spacing search hit its cap with best count {best_count} < {target}",
        best=CertificateReport(
            claim=claim,
            witness=best_witness or {"base": base.label, "achieved": best_count},
            margin=0.0,
            tolerance=eff_tol,
            passed=False,
        ),
    )
