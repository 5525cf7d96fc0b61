"""Composable radial kernel descriptions and their evaluation.

A kernel is a tagged union built from the dimension-n kernels Omega(n),
exp(-r), exp(-r**2), cos(s r), scalings, products, integer powers, and
mixtures int Omega_n(rt) nu(dt) against a probability measure.  Every
variant is normalised to 1 at r = 0.

The Taylor front (a1, a2) of f(z) = 1 - a1 z**2 + a2 z**4 - ... is
composed symbolically, and feeds the non-membership criterion: f cannot
be a radial positive definite function on R**(m+1) once
(2m+6) a2 < (m+1) a1**2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

from . import measures, specfun
from .errors import DomainError, UnsupportedKernelError
from .measures import DEFAULT_SPEC, QuadratureSpec, RadialMeasure

__all__ = [
    "Omega",
    "ExpDecay",
    "GaussDecay",
    "Cosine",
    "Scaled",
    "Product",
    "Power",
    "Mixture",
    "RadialKernel",
    "TaylorFront",
    "eval_kernel",
    "taylor_coeffs",
    "taylor_nonmembership",
    "parse_kernel",
    "format_kernel",
]


@dataclass(frozen=True)
class Omega:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError("Omega requires a positive integer dimension")


@dataclass(frozen=True)
class ExpDecay:
    pass


@dataclass(frozen=True)
class GaussDecay:
    pass


@dataclass(frozen=True)
class Cosine:
    s: float

    def __post_init__(self):
        if not self.s > 0.0:
            raise DomainError("Cosine requires a positive frequency")


@dataclass(frozen=True)
class Scaled:
    inner: "RadialKernel"
    a: float

    def __post_init__(self):
        if not self.a > 0.0:
            raise DomainError("Scaled requires a positive scale")


@dataclass(frozen=True)
class Product:
    left: "RadialKernel"
    right: "RadialKernel"


@dataclass(frozen=True)
class Power:
    inner: "RadialKernel"
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 1:
            raise DomainError("Power requires a positive integer exponent")


@dataclass(frozen=True)
class Mixture:
    n: int
    measure: RadialMeasure
    spec: QuadratureSpec = DEFAULT_SPEC

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError("Mixture requires a positive integer dimension")
        if not self.measure.is_probability:
            raise DomainError("Mixture requires a probability measure (so f(0) = 1)")


RadialKernel = Union[Omega, ExpDecay, GaussDecay, Cosine, Scaled, Product, Power, Mixture]


def eval_kernel(k: RadialKernel, r: float) -> float:
    """Value of the radial function at r >= 0."""
    if r < 0.0:
        raise DomainError("radial kernels are evaluated at r >= 0")
    match k:
        case Omega(n):
            return specfun.omega(n, r)
        case ExpDecay():
            return math.exp(-r)
        case GaussDecay():
            return math.exp(-r * r) if r < 27.0 else 0.0
        case Cosine(s):
            return math.cos(s * r)
        case Scaled(inner, a):
            return eval_kernel(inner, a * r)
        case Product(left, right):
            return eval_kernel(left, r) * eval_kernel(right, r)
        case Power(inner, p):
            return eval_kernel(inner, r) ** p
        case Mixture(n, nu, spec):
            return measures.schoenberg_transform(n, nu, r, spec)
    raise DomainError(f"unknown kernel {k!r}")


@dataclass(frozen=True)
class TaylorFront:
    """Leading coefficients of f(z) = 1 - a1 z**2 + a2 z**4 - ..."""

    a1: float
    a2: float

    def __post_init__(self):
        if not (self.a1 > 0.0 and self.a2 > 0.0):
            raise DomainError("an alternating Taylor front needs a1, a2 > 0")


def _measure_even_moment(nu: RadialMeasure, order: int, spec: QuadratureSpec) -> float:
    d = nu.density
    if d is not None and math.isinf(d.hi):
        decay = d.decay
        needs = order + 1.5  # margin past the bare integrability bound order+1
        if decay.kind == "power" and decay.rate < needs:
            raise UnsupportedKernelError(
                f"mixing measure lacks a finite moment of order {order} "
                f"(power tail rate {decay.rate} < {needs})"
            )
    total = sum(mass * loc**order for loc, mass in nu.atoms)
    if d is not None:
        tail = None
        if math.isinf(d.hi):
            dk = d.decay
            tail = dk if dk.kind != "power" else measures.Decay("power", dk.rate - order)
        val, _ = measures.integrate(
            lambda t, dlo, dhi: t**order * d.eval_aware(t, dlo, dhi),
            d.lo,
            d.hi,
            spec,
            left_exponent=d.left_exponent + order,
            right_exponent=d.right_exponent,
            decay=tail,
            endpoint_aware=True,
        )
        total += val
    return total


def taylor_coeffs(k: RadialKernel) -> TaylorFront:
    """Symbolic composition of the leading Taylor coefficients.

    exp(-r) has no even-power expansion at 0 and is rejected; mixtures
    need a finite fourth moment of the mixing measure.
    """
    match k:
        case Omega(n):
            return TaylorFront(1.0 / (2 * n), 1.0 / (8 * n * (n + 2)))
        case GaussDecay():
            return TaylorFront(1.0, 0.5)
        case Cosine(s):
            return TaylorFront(s * s / 2.0, s**4 / 24.0)
        case Scaled(inner, a):
            f = taylor_coeffs(inner)
            return TaylorFront(f.a1 * a * a, f.a2 * a**4)
        case Product(left, right):
            f, g = taylor_coeffs(left), taylor_coeffs(right)
            return TaylorFront(f.a1 + g.a1, f.a2 + g.a2 + f.a1 * g.a1)
        case Power(inner, p):
            f = taylor_coeffs(inner)
            out = f
            for _ in range(p - 1):
                out = TaylorFront(out.a1 + f.a1, out.a2 + f.a2 + out.a1 * f.a1)
            return out
        case Mixture(n, nu, spec):
            s2 = _measure_even_moment(nu, 2, spec)
            s4 = _measure_even_moment(nu, 4, spec)
            return TaylorFront(s2 / (2 * n), s4 / (8 * n * (n + 2)))
        case ExpDecay():
            raise UnsupportedKernelError(
                "exp(-r) is not analytic in r**2 at the origin; no alternating front"
            )
    raise DomainError(f"unknown kernel {k!r}")


def taylor_nonmembership(k: RadialKernel) -> Optional[int]:
    """Smallest m with (2m+6) a2 < (m+1) a1**2, certifying that the kernel
    is not radial positive definite on R**(m+1); None when the criterion
    never fires (a2/a1**2 >= 1/2).

    Ties (exact equality) do not count as non-membership.
    """
    front = taylor_coeffs(k)
    ratio = front.a2 / (front.a1 * front.a1)
    if ratio >= 0.5:
        return None
    # closed-form start, then exact scan over the strict inequality
    m = max(1, int(math.floor((6.0 * ratio - 1.0) / (1.0 - 2.0 * ratio))) - 2)
    while m < 10**9:
        if (2 * m + 6) * front.a2 < (m + 1) * front.a1 * front.a1:
            return m
        m += 1
    raise DomainError("nonmembership scan exceeded its bound")  # pragma: no cover


# ---------------------------------------------------------------------------
# CLI grammar:  omega:n | exp | gauss | cos:s | scale:a(K) | prod(K,K)
#               | pow:p(K) | mix:n@FILE
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, spec: QuadratureSpec):
        self.text = text
        self.pos = 0
        self.spec = spec

    def error(self, msg: str) -> DomainError:
        return DomainError(f"kernel grammar error at {self.pos} in {self.text!r}: {msg}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def until(self, stops: str) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in stops:
            self.pos += 1
        return self.text[start : self.pos]

    def parse(self) -> RadialKernel:
        k = self.kernel()
        if self.pos != len(self.text):
            raise self.error("trailing input")
        return k

    def kernel(self) -> RadialKernel:
        head = self.until(":(,)")
        if head == "exp":
            return ExpDecay()
        if head == "gauss":
            return GaussDecay()
        if head == "omega":
            self.expect(":")
            return Omega(self.int_arg())
        if head == "cos":
            self.expect(":")
            return Cosine(self.float_arg())
        if head == "scale":
            self.expect(":")
            a = self.float_arg()
            self.expect("(")
            inner = self.kernel()
            self.expect(")")
            return Scaled(inner, a)
        if head == "pow":
            self.expect(":")
            p = self.int_arg()
            self.expect("(")
            inner = self.kernel()
            self.expect(")")
            return Power(inner, p)
        if head == "prod":
            self.expect("(")
            left = self.kernel()
            self.expect(",")
            right = self.kernel()
            self.expect(")")
            return Product(left, right)
        if head == "mix":
            self.expect(":")
            rest = self.until("@")
            self.expect("@")
            path = self.until(",)")
            if not path:
                raise self.error("mix needs a measure file path")
            try:
                n = int(rest)
            except ValueError:
                raise self.error(f"bad dimension {rest!r}") from None
            return Mixture(n, measures.load_measure(path), self.spec)
        raise self.error(f"unknown kernel head {head!r}")

    def int_arg(self) -> int:
        tok = self.until("(,)")
        try:
            return int(tok)
        except ValueError:
            raise self.error(f"expected integer, got {tok!r}") from None

    def float_arg(self) -> float:
        tok = self.until("(,)")
        try:
            return float(tok)
        except ValueError:
            raise self.error(f"expected number, got {tok!r}") from None


def parse_kernel(text: str, spec: QuadratureSpec = DEFAULT_SPEC) -> RadialKernel:
    """Parse the CLI kernel grammar."""
    return _Parser(text.strip(), spec).parse()


def format_kernel(k: RadialKernel) -> str:
    """Grammar text for a kernel (mixtures print a placeholder path)."""
    match k:
        case Omega(n):
            return f"omega:{n}"
        case ExpDecay():
            return "exp"
        case GaussDecay():
            return "gauss"
        case Cosine(s):
            return f"cos:{s:.17g}"
        case Scaled(inner, a):
            return f"scale:{a:.17g}({format_kernel(inner)})"
        case Product(left, right):
            return f"prod({format_kernel(left)},{format_kernel(right)})"
        case Power(inner, p):
            return f"pow:{p}({format_kernel(inner)})"
        case Mixture(n, _, _):
            return f"mix:{n}@<measure>"
    raise DomainError(f"unknown kernel {k!r}")
