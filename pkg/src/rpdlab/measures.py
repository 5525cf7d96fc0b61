"""Radial measures on the half line and the integral transforms between them.

A RadialMeasure is a finite positive Borel measure given as point masses
plus an optional density with declared support and endpoint exponents.
On top of it live the Schoenberg transform (measure -> radial function in
dimension n), the k-step transition formula relating the representing
measures of one function in different dimensions, the closed-form measure
families of exp(-r) and exp(-r**2), Gaussian scale mixtures, and the
densities occurring for products and squares of the kernels Omega_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from . import quadrature, specfun
from .errors import AccuracyError, DomainError, PrincipalValueError, UnsupportedKernelError
from .quadrature import DEFAULT_SPEC, Decay, QuadratureSpec, integrate

__all__ = [
    "Decay",
    "Density",
    "QuadratureSpec",
    "DEFAULT_SPEC",
    "RadialMeasure",
    "integrate",
    "blocks_promotion",
    "classical_family_density",
    "exp_family",
    "gauss_family",
    "gaussian_mixture_density",
    "gaussian_mixture_measure",
    "omega_sq_density",
    "omega_sq_measure",
    "omega_sq_step_back_density",
    "phi2_subclass_density",
    "point_masses",
    "product_kernel_support",
    "schoenberg_transform",
    "transition_density",
    "transition_measure",
    "parse_measure",
    "format_measure",
    "load_measure",
]

MASS_CHECK_TOL = 1e-8


@dataclass(frozen=True)
class Density:
    """Density part of a radial measure.

    ``fn`` is the plain pointwise density.  ``fn_aware``, when given, takes
    (x, dlo, dhi) with exact distances to the support endpoints and should
    be supplied for densities singular at an endpoint (it keeps quadrature
    nodes near the singularity at full precision).  ``decay`` is mandatory
    for unbounded support.
    """

    fn: Callable[[float], float]
    lo: float
    hi: float
    left_exponent: float = 0.0
    right_exponent: float = 0.0
    decay: Optional[Decay] = None
    family: Optional[str] = None
    fn_aware: Optional[Callable[[float, float, float], float]] = None

    def __post_init__(self):
        if not (self.lo >= 0.0 and self.hi > self.lo):
            raise DomainError("density support must satisfy 0 <= lo < hi")
        if self.left_exponent <= -1.0 or self.right_exponent <= -1.0:
            raise DomainError("endpoint exponents must be > -1")
        if math.isinf(self.hi) and self.decay is None:
            raise DomainError("a density on an unbounded support needs a declared decay")

    def eval_aware(self, x: float, dlo: float, dhi: float) -> float:
        """Evaluate with exact endpoint distances (dlo to self.lo, dhi to self.hi)."""
        if self.fn_aware is not None:
            return self.fn_aware(x, dlo, dhi)
        if x <= self.lo or x >= self.hi:
            return 0.0  # a plain density cannot resolve sub-ulp distances
        return self.fn(x)


@dataclass(frozen=True)
class RadialMeasure:
    """Finite positive measure on [0, inf): atoms plus an optional density.

    The constructor verifies by quadrature that atom masses plus the
    density integral reproduce ``total_mass`` to 1e-8 (pass
    ``total_mass=None`` to have it computed instead).
    """

    atoms: tuple[tuple[float, float], ...] = ()
    density: Optional[Density] = None
    total_mass: Optional[float] = 1.0

    def __post_init__(self):
        for loc, mass in self.atoms:
            if loc < 0.0:
                raise DomainError("atom locations must be >= 0")
            if not mass > 0.0:
                raise DomainError("atom masses must be positive")
        if not self.atoms and self.density is None:
            raise DomainError("a measure needs atoms or a density")
        computed = sum(mass for _, mass in self.atoms) + self._density_mass()
        if self.total_mass is None:
            object.__setattr__(self, "total_mass", computed)
        elif abs(computed - self.total_mass) > MASS_CHECK_TOL:
            raise DomainError(
                f"declared total mass {self.total_mass} but atoms+density integrate "
                f"to {computed:.12g}"
            )
        if not self.total_mass > 0.0:
            raise DomainError("total mass must be positive")

    def _density_mass(self) -> float:
        if self.density is None:
            return 0.0
        d = self.density
        val, _ = integrate(
            d.eval_aware,
            d.lo,
            d.hi,
            DEFAULT_SPEC,
            left_exponent=d.left_exponent,
            right_exponent=d.right_exponent,
            decay=d.decay,
            endpoint_aware=True,
        )
        return val

    @property
    def is_probability(self) -> bool:
        return abs(self.total_mass - 1.0) <= MASS_CHECK_TOL

    def support_upper(self) -> float:
        hi = max((loc for loc, _ in self.atoms), default=0.0)
        if self.density is not None:
            hi = max(hi, self.density.hi)
        return hi

    def support_lower(self) -> float:
        lo = min((loc for loc, _ in self.atoms), default=math.inf)
        if self.density is not None:
            lo = min(lo, self.density.lo)
        return lo


def point_masses(*pairs: tuple[float, float]) -> RadialMeasure:
    """A purely atomic measure from (location, mass) pairs."""
    return RadialMeasure(atoms=tuple(pairs), total_mass=None)


def blocks_promotion(measure: RadialMeasure) -> bool:
    """True when the measure cannot be the representing measure of any
    function living in a higher dimension: it has atoms, or its density
    support stays away from the origin.

    (A representing measure one dimension down is necessarily absolutely
    continuous with mass in every neighbourhood of 0.)
    """
    if measure.atoms:
        return True
    return measure.density is not None and measure.density.lo > 0.0


# ---------------------------------------------------------------------------
# Schoenberg transform
# ---------------------------------------------------------------------------


def _oscillation_count(r: float, decay: Decay) -> float:
    # kernel oscillations within the effective support of the tail
    if decay.kind == "power":
        return math.inf if r > 0.25 else 0.0
    u_eff = 40.0 / decay.rate if decay.kind == "exp" else math.sqrt(40.0 / decay.rate)
    return r * u_eff / math.pi


def _transform_density_blockwise(
    n: int, d: Density, r: float, spec: QuadratureSpec
) -> float:
    """Head by tanh-sinh plus oscillatory half-period block tail."""

    def integrand(t: float, dlo: float, dhi: float) -> float:
        return specfun.omega(n, r * t) * d.eval_aware(t, t - d.lo, math.inf)

    u0 = d.lo + max(40.0 / r, 10.0)
    head = quadrature.tanh_sinh_aware(
        lambda t, dlo, dhi: specfun.omega(n, r * t) * d.eval_aware(t, dlo, math.inf),
        d.lo,
        u0,
        abs_tol=spec.abs_tol,
        max_refinements=spec.max_refinements,
    )[0]
    tail, _ = quadrature.oscillatory_tail(
        integrand, u0, math.pi / r, abs_tol=spec.abs_tol
    )
    return head + tail


def schoenberg_transform(
    n: int, nu: RadialMeasure, r: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """f(r) = sum_i m_i Omega_n(r t_i) + int Omega_n(r t) p(t) dt."""
    if r < 0.0:
        raise DomainError("schoenberg_transform requires r >= 0")
    total = sum(mass * specfun.omega(n, r * loc) for loc, mass in nu.atoms)
    if nu.density is not None:
        d = nu.density
        if math.isinf(d.hi) and r > 0.0 and _oscillation_count(r, d.decay) > 300.0:
            # the rational map cannot resolve this many kernel oscillations;
            # sum half-period blocks with series acceleration instead
            total += _transform_density_blockwise(n, d, r, spec)
            return total

        def integrand(t: float, dlo: float, dhi: float) -> float:
            return specfun.omega(n, r * t) * d.eval_aware(t, dlo, dhi)

        try:
            val, _ = integrate(
                integrand,
                d.lo,
                d.hi,
                spec,
                left_exponent=d.left_exponent,
                right_exponent=d.right_exponent,
                decay=d.decay,
                endpoint_aware=True,
            )
        except AccuracyError:
            if not math.isinf(d.hi) or r <= 0.0:
                raise
            val = _transform_density_blockwise(n, d, r, spec)
        total += val
    return total


# ---------------------------------------------------------------------------
# k-step transition between representing measures
# ---------------------------------------------------------------------------


def transition_density(
    m: int, k: int, nu: RadialMeasure, x: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Density at x of the dimension-m representing measure of a function
    whose dimension-(m+k) measure is nu:

        p_m(x) = (2 x**(m-1) / B(m/2, k/2)) *
                 int_x^inf (1 - x**2/u**2)**(k/2-1) nu(du) / u**m
    """
    if m < 1 or k < 1:
        raise DomainError("transition_density requires m >= 1 and k >= 1")
    if not x > 0.0:
        raise DomainError("transition_density requires x > 0")
    half_exp = 0.5 * k - 1.0
    pref = 2.0 * x ** (m - 1) / specfun.gamma_beta(0.5 * m, 0.5 * k)

    total = 0.0
    for loc, mass in nu.atoms:
        if loc == x:
            if k <= 2:
                raise PrincipalValueError(
                    f"atom at u = x = {x} makes the {k}-step integrand ill-defined"
                )
            continue  # integrand vanishes at u = x for k > 2
        if loc < x:
            continue
        frac = (loc - x) * (loc + x) / (loc * loc)
        total += mass * frac**half_exp * loc ** (-m)

    d = nu.density
    if d is not None and d.hi > x:
        lo = max(x, d.lo)
        starts_at_x = lo == x

        def integrand(u: float, dlo: float, dhi: float) -> float:
            dens = d.eval_aware(u, u - d.lo if lo > d.lo else dlo, dhi)
            if dens == 0.0:
                return 0.0
            # u - x without cancellation when the interval starts at x
            diff = dlo if starts_at_x else u - x
            frac = diff * (u + x) / (u * u)
            # u**(-m) underflows to 0 instead of overflowing on huge tails
            return frac**half_exp * dens * u ** (-m)

        left = half_exp if starts_at_x else d.left_exponent
        val, _ = integrate(
            integrand,
            lo,
            d.hi,
            spec,
            left_exponent=left,
            right_exponent=d.right_exponent,
            decay=d.decay,
            endpoint_aware=True,
        )
        total += val
    return pref * total


def transition_measure(
    m: int, k: int, nu: RadialMeasure, spec: QuadratureSpec = DEFAULT_SPEC
) -> RadialMeasure:
    """The dimension-m representing measure obtained from nu by the k-step
    transition, packaged as a RadialMeasure (always absolutely continuous)."""
    hi = nu.support_upper()
    decay = None
    if math.isinf(hi):
        # the transition integral inherits the tail class of nu
        decay = nu.density.decay if nu.density is not None else None

    def at(x: float) -> float:
        try:
            return transition_density(m, k, nu, x, spec)
        except PrincipalValueError:
            # x collided with an atom location; the left limit is the
            # correct value for integration purposes
            return transition_density(m, k, nu, math.nextafter(x, 0.0), spec)

    dens = Density(
        fn=at,
        fn_aware=lambda x, dlo, dhi: at(dlo),
        lo=0.0,
        hi=hi,
        left_exponent=float(m - 1),
        right_exponent=min(0.5 * k - 1.0, 0.0),
        decay=decay,
        family=None,
    )
    return RadialMeasure(atoms=(), density=dens, total_mass=nu.total_mass)


# ---------------------------------------------------------------------------
# Closed-form families
# ---------------------------------------------------------------------------


def classical_family_density(family: str, m: int, u: float) -> float:
    """Representing-measure density in dimension m for f(r) = exp(-r)
    ("exp_decay") or f(r) = exp(-r**2) ("gauss_decay")."""
    if m < 1:
        raise DomainError("dimension m must be a positive integer")
    if not u > 0.0:
        raise DomainError("classical_family_density requires u > 0")
    if family == "exp_decay":
        c = 2.0 / specfun.gamma_beta(0.5 * m, 0.5)
        t = u / math.hypot(1.0, u)  # u/sqrt(1+u**2), overflow-safe
        return c * t ** (m - 1) / (1.0 + u * u)
    if family == "gauss_decay":
        arg = 0.25 * u * u
        if arg > 745.0:
            return 0.0
        return (0.5 * u) ** (m - 1) * math.exp(-arg) / specfun.gamma(0.5 * m)
    raise DomainError(f"unknown family {family!r}")


def exp_family(m: int) -> RadialMeasure:
    """The representing measure of exp(-r) in dimension m."""
    return RadialMeasure(
        density=Density(
            fn=lambda u: classical_family_density("exp_decay", m, u),
            lo=0.0,
            hi=math.inf,
            left_exponent=float(m - 1),
            decay=Decay("power", 2.0),
            family=f"exp:{m}",
        ),
        total_mass=1.0,
    )


def gauss_family(m: int) -> RadialMeasure:
    """The representing measure of exp(-r**2) in dimension m."""
    return RadialMeasure(
        density=Density(
            fn=lambda u: classical_family_density("gauss_decay", m, u),
            lo=0.0,
            hi=math.inf,
            left_exponent=float(m - 1),
            decay=Decay("gauss", 0.25),
            family=f"gauss:{m}",
        ),
        total_mass=1.0,
    )


# ---------------------------------------------------------------------------
# Gaussian scale mixtures (the intersection class of all dimensions)
# ---------------------------------------------------------------------------


def gaussian_mixture_density(
    m: int, sigma: RadialMeasure, x: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Density at x of the dimension-m representing measure of
    f(r) = int exp(-s r**2) sigma(ds):

        p(x) = x**(m-1) / (2**(m/2-1) Gamma(m/2)) *
               int (2s)**(-m/2) exp(-x**2/(4s)) sigma(ds)
    """
    if m < 1:
        raise DomainError("dimension m must be a positive integer")
    if not x > 0.0:
        raise DomainError("gaussian_mixture_density requires x > 0")
    for loc, _ in sigma.atoms:
        if loc == 0.0:
            raise DomainError("mixing mass at s = 0 makes the heat kernel singular")

    def heat(s: float) -> float:
        arg = x * x / (4.0 * s)
        if arg > 745.0:
            return 0.0
        return (2.0 * s) ** (-0.5 * m) * math.exp(-arg)

    total = sum(mass * heat(loc) for loc, mass in sigma.atoms)
    d = sigma.density
    if d is not None:

        def integrand(s: float, dlo: float, dhi: float) -> float:
            if s <= 0.0:
                return 0.0
            return heat(s) * d.eval_aware(s, dlo, dhi)

        val, _ = integrate(
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
    if total == 0.0:
        return 0.0  # heat kernels underflowed; skip the prefactor, which may not
    pref = x ** (m - 1) / (2.0 ** (0.5 * m - 1.0) * specfun.gamma(0.5 * m))
    return pref * total


def gaussian_mixture_measure(
    m: int, sigma: RadialMeasure, spec: QuadratureSpec = DEFAULT_SPEC
) -> RadialMeasure:
    """gaussian_mixture_density packaged as a measure; sigma must have
    bounded support so the Gaussian tail rate is known."""
    s_max = sigma.support_upper()
    if math.isinf(s_max):
        raise DomainError("gaussian_mixture_measure needs a mixing measure of bounded support")
    dens = Density(
        fn=lambda x: gaussian_mixture_density(m, sigma, x, spec),
        fn_aware=lambda x, dlo, dhi: gaussian_mixture_density(m, sigma, dlo, spec),
        lo=0.0,
        hi=math.inf,
        left_exponent=float(m - 1),
        decay=Decay("gauss", 1.0 / (4.0 * s_max)),
    )
    return RadialMeasure(density=dens, total_mass=sigma.total_mass)


# ---------------------------------------------------------------------------
# Squares and products of the kernels Omega_n
# ---------------------------------------------------------------------------


def _square_constant(n: int) -> float:
    # C_n = 2 Gamma(n/2)**2 / (pi Gamma(n-1))
    g = specfun.gamma(0.5 * n)
    return 2.0 * g * g / (math.pi * specfun.gamma(n - 1.0))


def omega_sq_density(n: int, x: float) -> float:
    """Density on (0, 2) representing Omega_n**2 in dimension 2n-2:

        p(x) = C_n x**(n-2) / sqrt(4 - x**2),  C_n = 2 Gamma(n/2)**2 / (pi Gamma(n-1)).
    """
    if n < 2:
        raise DomainError("omega_sq_density requires n >= 2 (n = 1 is purely atomic)")
    if not 0.0 < x < 2.0:
        raise DomainError("omega_sq_density is supported on (0, 2)")
    return _square_constant(n) * x ** (n - 2) / math.sqrt((2.0 - x) * (2.0 + x))


def omega_sq_measure(n: int) -> RadialMeasure:
    """The representing measure of Omega_n**2 in dimension 2n-2 (n >= 2);
    for n = 1 the measure is atomic: (delta_0 + delta_2)/2."""
    if n == 1:
        return point_masses((0.0, 0.5), (2.0, 0.5))
    c = _square_constant(n)
    return RadialMeasure(
        density=Density(
            fn=lambda x: omega_sq_density(n, x),
            fn_aware=lambda x, dlo, dhi: c * dlo ** (n - 2) / math.sqrt(dhi * (2.0 + x)),
            lo=0.0,
            hi=2.0,
            left_exponent=float(n - 2),
            right_exponent=-0.5,
            family=f"omegasq:{n}",
        ),
        total_mass=1.0,
    )


_STEPBACK_NORM: dict[int, float] = {}


def _stepback_raw(n: int, x: float, one_minus_z: float) -> float:
    # x**(2n-4) * F((n-1)/2, 1/2; 1; 1 - x**2/4), unnormalised.  Below
    # x ~ 1e-12 the integrand carries < 3e-11 of mass; cutting there keeps
    # the hypergeometric evaluation within the double range.
    if x <= 1e-12:
        return 0.0
    return x ** (2 * n - 4) * specfun.hyp2f1(
        0.5 * (n - 1), 0.5, 1.0, 1.0 - one_minus_z, one_minus_z=one_minus_z
    )


def _stepback_constant(n: int, spec: QuadratureSpec) -> float:
    if n not in _STEPBACK_NORM:

        def integrand(x: float, dlo: float, dhi: float) -> float:
            return _stepback_raw(n, dlo, dlo * dlo / 4.0)

        val, _ = quadrature.tanh_sinh_aware(
            integrand, 0.0, 2.0, abs_tol=min(spec.abs_tol, 1e-10), max_refinements=spec.max_refinements
        )
        _STEPBACK_NORM[n] = 1.0 / val
    return _STEPBACK_NORM[n]


def omega_sq_step_back_density(
    n: int, x: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Density on (0, 2) representing Omega_n**2 in dimension 2n-3, one
    dimension below the square density:

        p(x) = C'_n x**(2n-4) F((n-1)/2, 1/2; 1; (4-x**2)/4)

    with C'_n fixed by total mass 1 (computed once by quadrature and
    cached).
    """
    if n < 2:
        raise DomainError("omega_sq_step_back_density requires n >= 2")
    if not 0.0 < x < 2.0:
        raise DomainError("omega_sq_step_back_density is supported on (0, 2)")
    one_minus_z = x * x / 4.0
    return _stepback_constant(n, spec) * _stepback_raw(n, x, one_minus_z)


@dataclass(frozen=True)
class ProductSupport:
    """Support interval of the representing measure of Omega_n(a.)Omega_n(b.),
    with the promotion-obstruction consequence flag."""

    lo: float
    hi: float
    not_in_next_class: bool  # support misses the origin, so no promotion


def product_kernel_support(n: int, a: float, b: float) -> ProductSupport:
    """Support [|a-b|, a+b] of the measure representing
    Omega_n(a t) Omega_n(b t); when a != b it avoids the origin, which
    obstructs membership one dimension up."""
    if not (a > 0.0 and b > 0.0):
        raise DomainError("product_kernel_support requires a, b > 0")
    if n < 1:
        raise DomainError("dimension n must be a positive integer")
    return ProductSupport(lo=abs(a - b), hi=a + b, not_in_next_class=a != b)


def phi2_subclass_density(
    n: int, sigma: RadialMeasure, u: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Density at u of the dimension-(2n-2) representing measure of
    f(r) = int Omega_n**2(r t) sigma(dt):

        p(u) = C_n int_{u/2}^inf (u/t)**(n-2) sigma(dt) / sqrt(4 t**2 - u**2)
    """
    if n < 2:
        raise DomainError("phi2_subclass_density requires n >= 2")
    if not u > 0.0:
        raise DomainError("phi2_subclass_density requires u > 0")
    lo_t = 0.5 * u
    total = 0.0
    for loc, mass in sigma.atoms:
        if loc == lo_t:
            raise PrincipalValueError(f"atom at t = u/2 = {lo_t} sits on the singularity")
        if loc < lo_t:
            continue
        root = math.sqrt((2.0 * loc - u) * (2.0 * loc + u))
        total += mass * (u / loc) ** (n - 2) / root

    d = sigma.density
    if d is not None and d.hi > lo_t:
        lo = max(lo_t, d.lo)
        starts_at_singularity = lo == lo_t

        def integrand(t: float, dlo: float, dhi: float) -> float:
            gap = 2.0 * dlo if starts_at_singularity else 2.0 * t - u
            root = math.sqrt(gap * (2.0 * t + u))
            dens = d.eval_aware(t, t - d.lo if lo > d.lo else dlo, dhi)
            return (u / t) ** (n - 2) * dens / root

        left = -0.5 if starts_at_singularity else d.left_exponent
        val, _ = integrate(
            integrand,
            lo,
            d.hi,
            spec,
            left_exponent=left,
            right_exponent=d.right_exponent,
            decay=d.decay,
            endpoint_aware=True,
        )
        total += val
    return _square_constant(n) * total


# ---------------------------------------------------------------------------
# Text format:   atom <loc> <mass>
#                density <family>:<params> support <lo> <hi> exps <l> <r>
# ---------------------------------------------------------------------------

_FAMILY_BUILDERS = {
    "exp": lambda arg: exp_family(int(arg)).density,
    "gauss": lambda arg: gauss_family(int(arg)).density,
    "omegasq": lambda arg: omega_sq_measure(int(arg)).density,
}


def _const_density(value: float, lo: float, hi: float) -> Density:
    if not value > 0.0:
        raise DomainError("constant density must be positive")
    if math.isinf(hi):
        raise DomainError("constant density needs bounded support")
    return Density(fn=lambda x: value, lo=lo, hi=hi, family=f"const:{value:.17g}")


def parse_measure(text: str) -> RadialMeasure:
    """Parse the measure text format (see module docstring of the CLI)."""
    atoms: list[tuple[float, float]] = []
    density: Optional[Density] = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "atom":
            if len(parts) != 3:
                raise DomainError(f"malformed atom line: {line!r}")
            atoms.append((float(parts[1]), float(parts[2])))
        elif parts[0] == "density":
            if density is not None:
                raise DomainError("only one density line is allowed")
            if len(parts) != 8 or parts[2] != "support" or parts[5] != "exps":
                raise DomainError(f"malformed density line: {line!r}")
            tag = parts[1]
            lo, hi = float(parts[3]), float(parts[4])
            le, re_ = float(parts[6]), float(parts[7])
            name, _, arg = tag.partition(":")
            if name == "const":
                density = _const_density(float(arg), lo, hi)
            elif name in _FAMILY_BUILDERS:
                density = _FAMILY_BUILDERS[name](arg)
                if (density.lo, density.hi) != (lo, hi):
                    raise DomainError(
                        f"family {tag} has support [{density.lo}, {density.hi}], "
                        f"not [{lo}, {hi}]"
                    )
                if (density.left_exponent, density.right_exponent) != (le, re_):
                    raise DomainError(f"family {tag} has different endpoint exponents")
            else:
                raise DomainError(f"unknown density family {tag!r}")
        else:
            raise DomainError(f"unrecognised measure line: {line!r}")
    return RadialMeasure(atoms=tuple(atoms), density=density, total_mass=None)


def format_measure(measure: RadialMeasure) -> str:
    """Inverse of parse_measure for measures whose density carries a family tag."""
    lines = [f"atom {loc:.17g} {mass:.17g}" for loc, mass in measure.atoms]
    d = measure.density
    if d is not None:
        if d.family is None:
            raise DomainError("only family-tagged densities have a text form")
        lines.append(
            f"density {d.family} support {d.lo:.17g} {d.hi:.17g} "
            f"exps {d.left_exponent:.17g} {d.right_exponent:.17g}"
        )
    return "\n".join(lines) + "\n"


def load_measure(path: str) -> RadialMeasure:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_measure(fh.read())
