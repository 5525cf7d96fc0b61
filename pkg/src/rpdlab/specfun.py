"""Self-contained special functions.

Gamma and Beta, the Bessel function J_nu for nu >= -1/2, the Gauss
hypergeometric 2F1 on [0, 1), and the radial kernel

    Omega_n(s) = Gamma(q+1) (2/s)**q J_q(s),   q = n/2 - 1,

normalised so Omega_n(0) = 1.  Everything is computed from scratch
(rational Gamma approximation, power series, Hankel asymptotics, downward
recurrences); numpy's 80-bit longdouble is used to absorb the cancellation
of the alternating Bessel series.

Branch selection for J_nu(x):

* power series while the absolute-term sum I_nu(x) stays small enough that
  longdouble accumulation keeps the result below ~1e-12 absolute error;
* Hankel asymptotic expansion once x >= max(14, nu**2/14), where its
  semiconvergent tail bottoms out far below 1e-13;
* otherwise (large order, x between the turning point and the asymptotic
  regime, where the series cancellation is hopeless in any hardware
  precision) a downward recurrence normalised against Hankel values at the
  fractional order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quadrature
from .errors import AccuracyError, DomainError, NumericalFailureError

_LD = np.longdouble
_LD_EPS = float(np.finfo(_LD).eps)

_PI = math.pi
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)

# Lanczos coefficients, g = 7, n = 9: relative error below ~1e-14 on the
# positive real axis.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


@dataclass(frozen=True)
class SpecFunResult:
    """A computed value with a rough absolute error estimate and the
    method that produced it."""

    value: float
    est_error: float
    method: str  # series | asymptotic | recurrence | integral

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise NumericalFailureError(
                f"special function produced non-finite value via {self.method}"
            )
        if not self.est_error >= 0.0:
            raise NumericalFailureError("error estimate must be nonnegative")


def _lanczos_sum(z) -> float:
    acc = _LD(_LANCZOS[0])
    for i in range(1, len(_LANCZOS)):
        acc += _LD(_LANCZOS[i]) / (z + i)
    return acc


def gamma(a: float) -> float:
    """Gamma(a) for real a, poles excluded."""
    if a <= 0.0 and a == math.floor(a):
        raise DomainError(f"Gamma has a pole at {a}")
    if a < 0.5:
        # reflection keeps the rational approximation on its good half-line
        return _PI / (math.sin(_PI * a) * gamma(1.0 - a))
    # evaluated in extended precision so the result keeps ~1e-15 relative
    # accuracy across the representable range
    z = _LD(a) - 1.0
    t = z + _LD(_LANCZOS_G) + 0.5
    # split the power so intermediates stay in range up to Gamma(~171)
    u = t ** (0.5 * (z + 0.5)) * np.exp(-0.5 * t)
    return float(_LD(_SQRT_TWO_PI) * u * u * _lanczos_sum(z))


def gammaln(a: float) -> float:
    """log Gamma(a) for a > 0."""
    if a <= 0.0:
        raise DomainError("gammaln requires a > 0")
    if a < 0.5:
        return math.log(_PI / math.sin(_PI * a)) - gammaln(1.0 - a)
    z = a - 1.0
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * _PI) + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))


def gamma_beta(a: float, b: float | None = None) -> float:
    """Gamma(a) when b is omitted, else the Euler beta B(a, b)."""
    if not a > 0.0:
        raise DomainError("gamma_beta requires a > 0")
    if b is None:
        return gamma(a)
    if not b > 0.0:
        raise DomainError("gamma_beta requires b > 0")
    if a + b < 170.0:
        return gamma(a) * gamma(b) / gamma(a + b)
    return math.exp(gammaln(a) + gammaln(b) - gammaln(a + b))


# ---------------------------------------------------------------------------
# Bessel J
# ---------------------------------------------------------------------------

_SERIES_LN_CAP = 12.5  # ln of the largest tolerable absolute-term sum
_ASYMP_X_FLOOR = 14.0


def _ln_abs_term_sum(nu: float, x: float) -> float:
    """Estimate of ln I_nu(x), the sum of |series terms| in J units."""
    if x <= 0.0:
        return -math.inf
    if nu <= 0.0:
        return x - 0.5 * math.log(2.0 * _PI * max(x, 1e-300))
    r = math.hypot(nu, x)
    return r - nu * math.log((nu + r) / x) - 0.5 * math.log(2.0 * _PI * r)


def _bessel_series(nu: float, x: float) -> SpecFunResult:
    xl = _LD(x)
    q = xl * xl / 4
    # nu + 1 >= 1/2 throughout the admissible order range
    ln_pref = nu * math.log(x / 2.0) - gammaln(nu + 1.0)
    pref = np.exp(_LD(ln_pref))
    term = _LD(1.0)
    total = _LD(1.0)
    total_abs = _LD(1.0)
    j = 0
    while j < 2000:
        j += 1
        term = term * (-q) / (_LD(j) * (_LD(nu) + j))
        total += term
        total_abs += abs(term)
        if abs(term) <= abs(total) * _LD_EPS * 0.25 and j >= 4:
            break
    value = float(pref * total)
    est = float(abs(pref) * total_abs) * (3.0 * j * _LD_EPS) + abs(value) * 1e-14
    return SpecFunResult(value=value, est_error=est, method="series")


def _bessel_hankel(nu: float, x: float) -> SpecFunResult:
    xl = _LD(x)
    mu4 = 4.0 * _LD(nu) * _LD(nu)
    c = _LD(1.0)
    p_sum = _LD(1.0)
    q_sum = _LD(0.0)
    last = 1.0  # |c_0|
    min_term = 1.0
    shrinking = False  # terms may grow before the semiconvergent decay sets in
    k = 0
    while k < 400:
        k += 1
        c = c * (mu4 - _LD(2 * k - 1) ** 2) / (8.0 * k * xl)
        mag = float(abs(c))
        if mag < last:
            shrinking = True
        elif shrinking:
            break  # past the minimum of the semiconvergent tail
        last = mag
        min_term = min(min_term, mag)
        half_k = k // 2
        sign = -1.0 if half_k % 2 else 1.0
        if k % 2:
            q_sum += _LD(sign) * c
        else:
            p_sum += _LD(sign) * c
        if mag < 1e-19:
            break
    omega_arg = xl - (_LD(0.5) * _LD(nu) + _LD(0.25)) * _LD(np.pi)
    amp = np.sqrt(_LD(2.0) / (_LD(np.pi) * xl))
    value = float(amp * (p_sum * np.cos(omega_arg) - q_sum * np.sin(omega_arg)))
    est = float(amp) * (min_term + 20.0 * _LD_EPS) + abs(x) * 1.2e-16 * float(amp)
    return SpecFunResult(value=value, est_error=est, method="asymptotic")


def _bessel_miller(nu: float, x: float) -> SpecFunResult:
    n_int = int(math.floor(nu))
    frac = nu - n_int  # in [0, 1); only reached for nu >= 14, x >= 14
    top = max(nu, x)
    m = int(math.ceil(top)) + 20 + 2 * int(math.ceil(math.sqrt(top)))
    vals = np.zeros(m + 2)
    vals[m + 1] = 0.0
    vals[m] = 1e-280
    for i in range(m, 0, -1):
        order = frac + i
        vals[i - 1] = (2.0 * order / x) * vals[i] - vals[i + 1]
        if abs(vals[i - 1]) > 1e250:
            vals[i - 1 :] *= 1e-250
    j0 = _bessel_hankel(frac, x)
    j1 = _bessel_hankel(frac + 1.0, x)
    # normalise against whichever seed is farther from a zero
    if abs(j0.value) >= abs(j1.value):
        scale = j0.value / vals[0]
    else:
        scale = j1.value / vals[1]
    value = scale * vals[n_int]
    est = abs(value) * 1e-13 + max(j0.est_error, j1.est_error)
    return SpecFunResult(value=value, est_error=est, method="recurrence")


def bessel_j_detail(nu: float, x: float) -> SpecFunResult:
    """J_nu(x) with method and error metadata; nu >= -1/2, x >= 0."""
    if nu < -0.5:
        raise DomainError("bessel_j requires nu >= -1/2")
    if x < 0.0:
        raise DomainError("bessel_j requires x >= 0")
    if x == 0.0:
        if nu == 0.0:
            return SpecFunResult(value=1.0, est_error=0.0, method="series")
        if nu > 0.0:
            return SpecFunResult(value=0.0, est_error=0.0, method="series")
        raise DomainError("J_nu(0) diverges for nu < 0")
    if _ln_abs_term_sum(nu, x) <= _SERIES_LN_CAP:
        return _bessel_series(nu, x)
    if x >= max(_ASYMP_X_FLOOR, nu * nu / 14.0):
        return _bessel_hankel(nu, x)
    return _bessel_miller(nu, x)


def bessel_j(nu: float, x: float) -> float:
    """Bessel function of the first kind, nu >= -1/2, x >= 0."""
    return bessel_j_detail(nu, x).value


def bessel_j_even_sequence(x: float, big_k: int) -> list[float]:
    """The even orders {J_0(x), J_2(x), ..., J_{2K}(x)} by downward
    recurrence, normalised through J_0 + 2*sum_p J_{2p} = 1."""
    if not x > 0.0:
        raise DomainError("bessel_j_even_sequence requires x > 0")
    if big_k < 1:
        raise DomainError("K must be at least 1")
    m = 2 * big_k + 20 + int(math.ceil(x))
    vals = np.zeros(m + 2)
    vals[m + 1] = 0.0
    vals[m] = 1e-280
    for p in range(m, 0, -1):
        vals[p - 1] = (2.0 * p / x) * vals[p] - vals[p + 1]
        if abs(vals[p - 1]) > 1e250:
            vals[p - 1 :] *= 1e-250
    norm = vals[0] + 2.0 * vals[2 : m + 1 : 2].sum()
    return [float(v) for v in vals[0 : 2 * big_k + 1 : 2] / norm]


# ---------------------------------------------------------------------------
# Gauss hypergeometric on [0, 1)
# ---------------------------------------------------------------------------


def _hyp2f1_series(a: float, b: float, c: float, z: float) -> float:
    term = _LD(1.0)
    total = _LD(1.0)
    zl = _LD(z)
    j = 0
    while j < 4000:
        term = term * (_LD(a) + j) * (_LD(b) + j) / ((_LD(c) + j) * (j + 1)) * zl
        total += term
        j += 1
        if abs(term) <= abs(total) * _LD_EPS * 0.5 and j >= 4:
            return float(total)
        if term == 0.0:  # terminating (polynomial) case
            return float(total)
    raise AccuracyError("2F1 series did not converge", value=float(total), est_error=float(abs(term)))


def _hyp2f1_euler(a: float, b: float, c: float, z: float, omz: float) -> float:
    if not (c > b > 0.0):
        raise DomainError("the Euler integral route for 2F1 needs c > b > 0")
    if a * math.log(omz) < -700.0:
        raise NumericalFailureError("2F1 value exceeds the double range")
    # factor (1-z)**(-a) out so the integrand cannot overflow near v = 1
    scale = omz ** (-a)
    ratio = z / omz

    def integrand(v: float, dlo: float, dhi: float) -> float:
        # dlo = v and dhi = 1 - v without cancellation; 1 - v*z = omz*(1 + ratio*dhi)
        return dlo ** (b - 1.0) * dhi ** (c - b - 1.0) * (1.0 + ratio * dhi) ** (-a)

    val, _ = quadrature.tanh_sinh_aware(
        integrand, 0.0, 1.0, abs_tol=1e-13, max_refinements=12, rel_tol=5e-13
    )
    return scale * val / gamma_beta(b, c - b)


def hyp2f1(a: float, b: float, c: float, z: float, *, one_minus_z: float | None = None) -> float:
    """2F1(a, b; c; z) for z in [0, 1).

    Series summation up to z = 1/2; past that the Euler integral, which
    requires c > b > 0 (the only parameter pattern this package meets
    near z = 1).  Callers whose z sits within an ulp of 1 can pass the
    exact complement through ``one_minus_z``.
    """
    if c <= 0.0 and c == math.floor(c):
        raise DomainError("2F1 undefined for c a nonpositive integer")
    omz = one_minus_z if one_minus_z is not None else 1.0 - z
    if z < 0.0 or omz <= 0.0:
        raise DomainError("hyp2f1 requires z in [0, 1)")
    if z == 0.0:
        return 1.0
    if z <= 0.5:
        return _hyp2f1_series(a, b, c, z)
    return _hyp2f1_euler(a, b, c, z, omz)


# ---------------------------------------------------------------------------
# The radial kernel Omega_n
# ---------------------------------------------------------------------------

_OMEGA_SERIES_CAP = 14.0


def omega(n: int, s: float) -> float:
    """Omega_n(s), the normalised radial kernel of dimension n.

    Omega_1(s) = cos(s), Omega_2 = J_0, Omega_3 = sin(s)/s; in general
    Gamma(q+1) (2/s)**q J_q(s) with q = n/2 - 1.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise DomainError("omega requires a positive integer dimension")
    if s < 0.0:
        raise DomainError("omega requires s >= 0")
    if s == 0.0:
        return 1.0
    q = 0.5 * n - 1.0
    if s <= _OMEGA_SERIES_CAP:
        # terms shrink with growing q, so the J_0 bound covers every n
        sl = _LD(s)
        z = sl * sl / 4
        term = _LD(1.0)
        total = _LD(1.0)
        j = 0
        while j < 1000:
            j += 1
            term = term * (-z) / (_LD(j) * (_LD(q) + j))
            total += term
            if abs(term) <= abs(total) * _LD_EPS * 0.25 and j >= 4:
                break
        return float(total)
    ln_pref = gammaln(q + 1.0) + q * math.log(2.0 / s)
    jval = bessel_j(q, s)
    if ln_pref < 700.0:
        return math.exp(ln_pref) * jval
    return float(np.exp(_LD(ln_pref)) * _LD(jval))
