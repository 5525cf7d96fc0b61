"""Adaptive quadrature engine.

Three rules cover everything the package integrates:

* tanh-sinh (double exponential), the default.  Handles integrable endpoint
  singularities ``(x-lo)**p`` with ``p > -1`` without any mesh grading,
  which is exactly what the transition densities need (exponent -1/2 at
  both ends in the worst case).
* composite Gauss-Legendre panels for smooth integrands.
* periodic trapezoid with node doubling for full-period integrals of
  smooth periodic functions (spectrally accurate).

Endpoint-singular integrands must not recompute ``x - lo`` from the node
position ``x`` (the subtraction throws away the very digits that matter),
so the engine supports an *endpoint-aware* calling convention
``f(x, dlo, dhi)`` where ``dlo`` and ``dhi`` are the distances to the two
endpoints, computed without cancellation.  Plain one-argument integrands
are wrapped automatically.

Semi-infinite integrals are mapped onto [0, 1) by ``u = lo + s/(1-s)``;
the caller must declare how the integrand decays so the map is known to
be integrable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import AccuracyError, DomainError, NumericalFailureError

Integrand = Callable[[float], float]
AwareIntegrand = Callable[[float, float, float], float]

_HALF_PI = math.pi / 2.0
# node parameter range: by |t| ~ 6.6 the node-to-endpoint distance has
# fallen below ~1e-304, the bottom of the double range (multi-scale
# singular integrands need the deep nodes, e.g. hypergeometrics evaluated
# within an ulp of z = 1)
_T_MAX = 6.6


@dataclass(frozen=True)
class QuadratureSpec:
    """Integration method, absolute tolerance, and refinement budget."""

    method: str = "tanh_sinh"
    abs_tol: float = 1e-10
    max_refinements: int = 12

    def __post_init__(self):
        if self.method not in ("tanh_sinh", "compound_gauss", "periodic_trapezoid"):
            raise DomainError(f"unknown quadrature method {self.method!r}")
        if not self.abs_tol >= 1e-14:
            raise DomainError("abs_tol must be at least 1e-14")
        if self.max_refinements < 1:
            raise DomainError("max_refinements must be a positive integer")


DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True)
class Decay:
    """Declared tail behaviour of an integrand on ``[lo, inf)``.

    ``power`` means O(u**-rate) with rate >= 1.5, ``exp`` means
    O(exp(-rate*u)), ``gauss`` means O(exp(-rate*u**2)).
    """

    kind: str
    rate: float = 1.0

    def __post_init__(self):
        if self.kind not in ("power", "exp", "gauss"):
            raise DomainError(f"unknown decay kind {self.kind!r}")
        if self.rate <= 0:
            raise DomainError("decay rate must be positive")
        if self.kind == "power" and self.rate < 1.5:
            # slower power tails carry non-negligible mass beyond any
            # floating-point cutoff; refuse rather than silently truncate
            raise DomainError("power decay must have rate >= 1.5")


def _check_value(v: float, x: float) -> float:
    if math.isfinite(v):
        return v
    raise NumericalFailureError(f"integrand returned non-finite value at x={x!r}")


def _as_aware(f: Integrand, lo: float = -math.inf, hi: float = math.inf) -> AwareIntegrand:
    # a plain integrand cannot resolve points closer to an endpoint than one
    # ulp, so nodes that collide with an endpoint contribute nothing
    def g(x: float, dlo: float, dhi: float) -> float:
        if x <= lo or x >= hi:
            return 0.0
        return f(x)

    return g


def tanh_sinh_aware(
    f: AwareIntegrand,
    lo: float,
    hi: float,
    abs_tol: float = 1e-10,
    max_refinements: int = 12,
    rel_tol: float = 0.0,
) -> tuple[float, float]:
    """tanh-sinh over a finite interval with the f(x, dlo, dhi) convention."""
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise DomainError("tanh_sinh needs a finite interval")
    if hi <= lo:
        return 0.0, 0.0

    span = hi - lo
    half = 0.5 * span
    mid = 0.5 * (hi + lo)
    skip = 1e-306  # weights have underflown long before d gets here

    def node_pair_sum(t: float) -> tuple[float, float]:
        """phi'(t) * (f at -t node + f at +t node), plus the |.| version."""
        y = _HALF_PI * math.sinh(t)
        if y > 350.0:
            return 0.0, 0.0
        dphi = _HALF_PI * math.cosh(t) / math.cosh(y) ** 2
        eps_t = 2.0 / (1.0 + math.exp(2.0 * y))  # 1 - tanh(y), no cancellation
        d = half * eps_t
        if d < skip:
            return 0.0, 0.0
        far = span - d
        # x below is a label for the smooth parts of the integrand; singular
        # factors must be built from the exact distances dlo/dhi, so nodes
        # are evaluated even when x rounds onto an endpoint
        total = _check_value(f(lo + d, d, far), lo + d)
        total += _check_value(f(hi - d, far, d), hi - d)
        return dphi * total, abs(dphi) * abs(total)

    h = 1.0
    center = _HALF_PI * _check_value(f(mid, half, half), mid)
    s = center
    sabs = abs(center)
    k = 1
    while k * h <= _T_MAX:
        ds, dsabs = node_pair_sum(k * h)
        s += ds
        sabs += dsabs
        k += 1
    value = half * h * s
    prev = value

    for level in range(1, max_refinements + 1):
        h *= 0.5
        k = 1
        while k * h <= _T_MAX:
            ds, dsabs = node_pair_sum(k * h)
            s += ds
            sabs += dsabs
            k += 2  # odd multiples only; even ones were done at coarser levels
        value = half * h * s
        err = abs(value - prev)
        tol = max(abs_tol, rel_tol * abs(value))
        if level >= 2 and err <= tol:
            floor = abs(half * h * sabs) * 1e-15
            return value, max(err, floor)
        prev = value

    raise AccuracyError(
        f"tanh-sinh did not reach tol={abs_tol:g} within {max_refinements} refinements",
        value=value,
        est_error=abs(value - prev),
    )


def tanh_sinh(
    f: Integrand,
    lo: float,
    hi: float,
    abs_tol: float = 1e-10,
    max_refinements: int = 12,
    rel_tol: float = 0.0,
) -> tuple[float, float]:
    """Integrate a plain f(x) over the finite interval [lo, hi]."""
    return tanh_sinh_aware(_as_aware(f, lo, hi), lo, hi, abs_tol, max_refinements, rel_tol)


_GAUSS_NODES, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(16)


def compound_gauss_aware(
    f: AwareIntegrand,
    lo: float,
    hi: float,
    abs_tol: float = 1e-10,
    max_refinements: int = 12,
) -> tuple[float, float]:
    """Composite 16-point Gauss-Legendre with panel doubling.

    Intended for smooth integrands; endpoint singularities converge
    slowly here (use tanh_sinh for those).
    """
    if hi <= lo:
        return 0.0, 0.0
    prev = None
    value = 0.0
    for level in range(max_refinements + 1):
        panels = 2**level
        width = (hi - lo) / panels
        total = 0.0
        for p in range(panels):
            a = lo + p * width
            c = a + 0.5 * width
            hw = 0.5 * width
            for xi, wi in zip(_GAUSS_NODES, _GAUSS_WEIGHTS):
                x = c + hw * xi
                total += wi * _check_value(f(x, x - lo, hi - x), x)
        value = total * 0.5 * width
        if prev is not None and abs(value - prev) <= abs_tol:
            return value, max(abs(value - prev), abs(value) * 1e-15)
        prev = value
    raise AccuracyError(
        f"compound Gauss did not reach tol={abs_tol:g} within {max_refinements} refinements",
        value=value,
        est_error=abs(value - prev) if prev is not None else math.inf,
    )


def periodic_trapezoid_aware(
    f: AwareIntegrand,
    lo: float,
    hi: float,
    abs_tol: float = 1e-10,
    max_nodes: int = 2**18,
    start_nodes: int = 64,
) -> tuple[float, float]:
    """Trapezoid rule over one full period [lo, hi] with node doubling."""
    if hi <= lo:
        return 0.0, 0.0
    period = hi - lo
    n = start_nodes
    prev = None
    while n <= max_nodes:
        step = period / n
        total = 0.0
        for j in range(n):
            x = lo + j * step
            total += _check_value(f(x, x - lo, hi - x), x)
        value = total * step
        if prev is not None and abs(value - prev) <= abs_tol:
            return value, max(abs(value - prev), abs(value) * 1e-15)
        prev = value
        n *= 2
    raise AccuracyError(
        f"periodic trapezoid did not converge below tol={abs_tol:g} by {max_nodes} nodes",
        value=prev if prev is not None else 0.0,
        est_error=math.inf,
    )


def periodic_trapezoid(
    f: Integrand,
    lo: float,
    hi: float,
    abs_tol: float = 1e-10,
    max_nodes: int = 2**18,
    start_nodes: int = 64,
) -> tuple[float, float]:
    return periodic_trapezoid_aware(_as_aware(f), lo, hi, abs_tol, max_nodes, start_nodes)


def oscillatory_tail(
    f: AwareIntegrand,
    u0: float,
    half_period: float,
    abs_tol: float = 1e-11,
    max_blocks: int = 64,
) -> tuple[float, float]:
    """Tail integral of an oscillating integrand with decaying envelope.

    Integrates f over [u0, inf) by summing half-period blocks (each one
    smooth, done with a single 16-point Gauss panel) and accelerating the
    asymptotically alternating block series by iterated averaging.  The
    caller supplies the half period of the oscillation.
    """
    if half_period <= 0.0:
        raise DomainError("half_period must be positive")
    blocks: list[float] = []
    partials: list[float] = []
    running = 0.0
    for j in range(max_blocks):
        a = u0 + j * half_period
        c = a + 0.5 * half_period
        hw = 0.5 * half_period
        total = 0.0
        for xi, wi in zip(_GAUSS_NODES, _GAUSS_WEIGHTS):
            x = c + hw * xi
            total += wi * _check_value(f(x, x - u0, math.inf), x)
        b = total * hw
        blocks.append(b)
        running += b
        partials.append(running)
        if j >= 4 and abs(b) <= 0.05 * abs_tol:
            return running, abs(b)  # plain convergence, no acceleration needed
    # iterated averaging of the partial sums (Euler transform diagonal)
    stage = partials[max(0, len(partials) - 48) :]
    ends = [stage[-1]]
    while len(stage) > 1:
        stage = [0.5 * (stage[i] + stage[i + 1]) for i in range(len(stage) - 1)]
        ends.append(stage[-1])
    est = abs(ends[-1] - ends[-2]) if len(ends) > 1 else abs(blocks[-1])
    return stage[0], max(est, 1e-15 * abs(stage[0]))


def _map_semi_infinite(f: AwareIntegrand, lo: float, decay: Optional[Decay]) -> AwareIntegrand:
    if decay is None:
        raise DomainError("integration to infinity requires a declared decay rate")

    def g(s: float, dlo: float, dhi: float) -> float:
        om = dhi  # = 1 - s, exact
        if om <= 1e-150:
            return 0.0  # tail mass beyond u ~ 1e150 is negligible for rate >= 1.5
        offset = s / om  # = u - lo, no cancellation near either endpoint
        u = lo + offset
        return f(u, offset, math.inf) / (om * om)

    return g


def integrate(
    f,
    lo: float,
    hi: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    *,
    left_exponent: float = 0.0,
    right_exponent: float = 0.0,
    decay: Optional[Decay] = None,
    endpoint_aware: bool = False,
) -> tuple[float, float]:
    """Integrate f over [lo, hi] (hi may be inf) under the given spec.

    ``left_exponent`` / ``right_exponent`` declare endpoint behaviour
    (x-lo)**p and (hi-x)**p; they must be > -1 for the integral to exist.
    Infinite upper limits additionally need ``decay``.  With
    ``endpoint_aware`` the integrand is called as f(x, dlo, dhi) and may
    use the exact endpoint distances instead of recomputing them.
    Returns (value, est_error) with est_error <= spec.abs_tol on success.
    """
    if left_exponent <= -1.0 or right_exponent <= -1.0:
        raise DomainError("declared endpoint exponents must be > -1")
    if math.isinf(lo) or (math.isinf(hi) and hi < 0):
        raise DomainError("lower limit must be finite and upper limit not -inf")
    if hi <= lo:
        return 0.0, 0.0

    if endpoint_aware:
        g: AwareIntegrand = f
    elif spec.method == "periodic_trapezoid":
        g = _as_aware(f)  # the node at lo is a legitimate sample of a period
    else:
        g = _as_aware(f, lo, hi)
    if math.isinf(hi):
        g = _map_semi_infinite(g, lo, decay)
        a, b = 0.0, 1.0
    else:
        a, b = lo, hi

    if spec.method == "tanh_sinh":
        return tanh_sinh_aware(g, a, b, spec.abs_tol, spec.max_refinements)
    if spec.method == "compound_gauss":
        return compound_gauss_aware(g, a, b, spec.abs_tol, spec.max_refinements)
    # one full period of a periodic integrand
    return periodic_trapezoid_aware(g, a, b, spec.abs_tol)
