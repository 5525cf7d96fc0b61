"""Point configurations used as witnesses for kernel matrices.

The constructions: a regular simplex with its centroid (the classical
witness forcing a negative eigenvalue), regular polygons (whose kernel
matrices are circulants), unions of shifted copies (the route to
arbitrarily many negative eigenvalues), and seeded random clouds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateConfigurationError, DomainError

__all__ = [
    "PointConfig",
    "simplex_with_center",
    "regular_polygon",
    "shifted_union",
    "random_config",
    "pairwise_distances",
    "distance_matrix",
    "simplex_circumradius_factor",
    "parse_config",
]


@dataclass(frozen=True)
class PointConfig:
    """A finite set of pairwise distinct points in R**dim."""

    dim: int
    points: np.ndarray  # shape (count, dim)
    label: str

    def __post_init__(self):
        pts = np.ascontiguousarray(np.asarray(self.points, dtype=float))
        if pts.ndim != 2 or pts.shape[1] != self.dim or pts.shape[0] == 0:
            raise DomainError(f"points must form a nonempty (count, {self.dim}) array")
        if not np.isfinite(pts).all():
            raise DomainError("points must be finite")
        if pts.shape[0] > 1:
            d = pairwise_distances_array(pts)
            off = d[np.triu_indices_from(d, k=1)]
            if off.min() == 0.0:
                raise DegenerateConfigurationError(
                    f"configuration {self.label!r} contains coincident points"
                )
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @property
    def count(self) -> int:
        return self.points.shape[0]

    def diameter(self) -> float:
        if self.count == 1:
            return 0.0
        d = pairwise_distances_array(self.points)
        return float(d.max())


def pairwise_distances_array(pts: np.ndarray) -> np.ndarray:
    diff = pts[:, None, :] - pts[None, :, :]
    return np.sqrt((diff * diff).sum(axis=2))


def pairwise_distances(config: PointConfig) -> np.ndarray:
    """Euclidean distance matrix as a plain array."""
    return pairwise_distances_array(config.points)


def simplex_circumradius_factor(m: int) -> float:
    """rho_m = sqrt((m+1)/(2(m+2))): centroid-to-vertex distance of a
    regular simplex in R**(m+1) with unit edge."""
    return math.sqrt((m + 1) / (2.0 * (m + 2)))


def simplex_with_center(m: int, t: float) -> PointConfig:
    """The m+2 vertices of a regular simplex in R**(m+1) with edge length t,
    followed by its centroid: m+3 points in total.

    Construction: center the m+2 standard basis vectors of R**(m+2) (their
    differences span the sum-zero hyperplane), express them in an
    orthonormal basis of that hyperplane, and rescale edges from sqrt(2)
    to t.  Symmetry is exact by construction.
    """
    if m < 1:
        raise DomainError("simplex_with_center requires m >= 1")
    if not t > 0.0:
        raise DomainError("edge length t must be positive")
    p = m + 2
    verts = np.eye(p) - 1.0 / p  # centered standard basis, rows sum to zero
    diffs = (np.eye(p)[:, : p - 1] - np.eye(p)[:, [p - 1]])  # spanning set
    q, _ = np.linalg.qr(diffs)  # orthonormal basis of the hyperplane
    coords = verts @ q * (t / math.sqrt(2.0))
    pts = np.vstack([coords, np.zeros(p - 1)])
    return PointConfig(dim=m + 1, points=pts, label=f"simplex-center:{m}@{t:.17g}")


def regular_polygon(m: int, r: float) -> PointConfig:
    """The m vertices of the regular m-gon of radius r in the plane."""
    if m < 3:
        raise DomainError("regular_polygon requires m >= 3")
    if not r > 0.0:
        raise DomainError("radius must be positive")
    ang = 2.0 * math.pi * np.arange(m) / m
    pts = r * np.column_stack([np.cos(ang), np.sin(ang)])
    return PointConfig(dim=2, points=pts, label=f"polygon:{m}@{r:.17g}")


def shifted_union(config: PointConfig, spacings: list[float], axis: int = 0) -> PointConfig:
    """Union of copies of the configuration translated along a coordinate
    axis by the given spacings (strictly increasing, starting at 0)."""
    if not spacings or spacings[0] != 0.0:
        raise DomainError("spacings must start at 0")
    if any(b <= a for a, b in zip(spacings, spacings[1:])):
        raise DomainError("spacings must be strictly increasing")
    if not 0 <= axis < config.dim:
        raise DomainError(f"axis {axis} out of range for dimension {config.dim}")
    blocks = []
    for u in spacings:
        shifted = config.points.copy()
        shifted[:, axis] += u
        blocks.append(shifted)
    pts = np.vstack(blocks)
    label = f"shifted({config.label}; {','.join(format(u, '.17g') for u in spacings)})"
    return PointConfig(dim=config.dim, points=pts, label=label)


def random_config(dim: int, count: int, seed: int, box: float) -> PointConfig:
    """count points drawn uniformly from [0, box]**dim with a fixed-seed
    generator (identical output for identical seeds)."""
    if dim < 1 or count < 1:
        raise DomainError("dimension and count must be positive")
    if not box > 0.0:
        raise DomainError("box size must be positive")
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0.0, box, size=(count, dim))
    return PointConfig(dim=dim, points=pts, label=f"random:{dim},{count},{seed},{box:.17g}")


def distance_matrix(config: PointConfig):
    """Distance matrix wrapped as a SymmetricMatrix."""
    from . import matrices  # local import to avoid a module cycle

    return matrices.SymmetricMatrix.from_array(pairwise_distances(config))


def parse_config(text: str) -> PointConfig:
    """Parse the CLI configuration grammar:

    simplex-center:m@t | polygon:m@r | shifted(C; u1,...,uN) |
    random:dim,count,seed,box
    """
    text = text.strip()
    if text.startswith("shifted(") and text.endswith(")"):
        body = text[len("shifted(") : -1]
        if ";" not in body:
            raise DomainError("shifted(...) needs '; u1,u2,...' spacings")
        base_text, _, tail = body.rpartition(";")
        base = parse_config(base_text)
        try:
            spacings = [float(tok) for tok in tail.split(",") if tok.strip()]
        except ValueError:
            raise DomainError(f"bad spacing list {tail!r}") from None
        return shifted_union(base, spacings)
    head, _, rest = text.partition(":")
    try:
        if head == "simplex-center":
            m_str, _, t_str = rest.partition("@")
            return simplex_with_center(int(m_str), float(t_str))
        if head == "polygon":
            m_str, _, r_str = rest.partition("@")
            return regular_polygon(int(m_str), float(r_str))
        if head == "random":
            dim, count, seed, box = rest.split(",")
            return random_config(int(dim), int(count), int(seed), float(box))
    except ValueError:
        raise DomainError(f"bad configuration arguments in {text!r}") from None
    raise DomainError(f"unknown configuration {text!r}")
