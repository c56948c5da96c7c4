"""The fractional-linear maps Phi_j and their sup-norms D_j.

For a point y = (y_1, ..., y_{n-1}, q) and an index j, Phi_j(., y) is the
Moebius map z -> (C q z - y_j) / (y_{n-j} z - C) with C = binom(n, j),
collapsing to the constant y_j / C when y_j y_{n-j} = C^2 q.  Its sup-norm
over the unit disc, D_j(y), has a closed form: |center| + radius of the
image circle of the unit circle.  These two functions drive every
membership test and distance formula in the package.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, PoleError

__all__ = [
    "CPoint",
    "DiskImage",
    "binom",
    "phi",
    "d_norm",
    "image_disk",
    "sup_on_torus",
    "degenerate_product",
]

DEGEN_TOL = 1e-12


@dataclass(frozen=True)
class CPoint:
    """A point (y_1, ..., y_{n-1}, q) of C^n.

    coords[j-1] is y_j for j = 1..n-1 and coords[n-1] is q.  The same type
    carries points of the symmetrized polydisc, read as (s_1, ..., s_{n-1}, p).
    """

    coords: tuple[complex, ...]

    def __post_init__(self):
        coords = tuple(complex(c) for c in self.coords)
        if len(coords) < 1:
            raise DomainError("a point needs at least one coordinate")
        for c in coords:
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise DomainError("non-finite coordinate")
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def q(self) -> complex:
        return self.coords[-1]

    def y(self, j: int) -> complex:
        """1-based middle coordinate y_j, j = 1..n-1."""
        if not 1 <= j <= self.n - 1:
            raise DomainError(f"index j={j} outside 1..{self.n - 1}")
        return self.coords[j - 1]

    def scale(self, r: complex) -> "CPoint":
        return CPoint(tuple(r * c for c in self.coords))

    def swap(self, j: int | None = None) -> "CPoint":
        """Exchange y_j and y_{n-j} (all j at once when j is None)."""
        c = list(self.coords)
        n = self.n
        js = range(1, n // 2 + 1) if j is None else [j]
        for k in js:
            c[k - 1], c[n - 1 - k] = c[n - 1 - k], c[k - 1]
        return CPoint(tuple(c))

    def to_json(self) -> dict:
        return {"n": self.n, "coords": [[c.real, c.imag] for c in self.coords]}

    @staticmethod
    def from_json(obj: dict) -> "CPoint":
        coords = [complex(re, im) for re, im in obj["coords"]]
        if "n" in obj and obj["n"] != len(coords):
            raise DomainError("point 'n' disagrees with coords length")
        return CPoint(tuple(coords))


@dataclass(frozen=True)
class DiskImage:
    """Image of the unit disc under Phi_j(., y): an open disc.

    A constant (degenerate) map is encoded as radius 0.
    """

    center: complex
    radius: float


def binom(n: int, j: int) -> int:
    """binom(n, j) for 1 <= j <= n-1 (the weight of the j-th coordinate)."""
    if not 1 <= j <= n - 1:
        raise DomainError(f"index j={j} outside 1..{n - 1}")
    return math.comb(n, j)


def _parts(y: CPoint, j: int) -> tuple[float, complex, complex, complex]:
    n = y.n
    if n < 2:
        raise DomainError("Phi_j needs dimension n >= 2")
    c = float(binom(n, j))
    return c, y.y(j), y.y(n - j), y.q


def degenerate_product(y: CPoint, j: int) -> bool:
    """True when y_j y_{n-j} = binom^2 q within the scale-aware tolerance."""
    c, yj, ynj, q = _parts(y, j)
    return abs(yj * ynj - c * c * q) <= DEGEN_TOL * c * c * (1.0 + abs(q))


def phi(j: int, y: CPoint, z: complex) -> complex:
    """Phi_j(z, y); the constant branch y_j / binom when the product degenerates."""
    c, yj, ynj, q = _parts(y, j)
    if degenerate_product(y, j):
        return yj / c
    den = ynj * z - c
    if abs(den) < 1e-300:
        raise PoleError(f"Phi_{j} has a pole at z={z}", at=z)
    return (c * q * z - yj) / den


def d_norm(j: int, y: CPoint) -> float:
    """D_j(y) = sup over the unit disc of |Phi_j(z, y)|.

    Three branches: the closed formula when |y_{n-j}| < binom, the constant
    |y_j| / binom when the product degenerates, +inf otherwise (the map is
    unbounded on the disc).
    """
    c, yj, ynj, q = _parts(y, j)
    num = abs(yj * ynj - c * c * q)
    if num <= DEGEN_TOL * c * c * (1.0 + abs(q)):
        return abs(yj) / c
    if abs(ynj) >= c:
        return math.inf
    return (c * abs(yj - ynj.conjugate() * q) + num) / (c * c - abs(ynj) ** 2)


def image_disk(j: int, y: CPoint) -> DiskImage:
    """Center and radius of Phi_j(D, y); requires |y_{n-j}| < binom.

    Satisfies |center| + radius = d_norm(j, y).
    """
    c, yj, ynj, q = _parts(y, j)
    if degenerate_product(y, j):
        return DiskImage(center=yj / c, radius=0.0)
    if abs(ynj) >= c:
        raise DomainError("image is unbounded: |y_{n-j}| >= binom(n, j)")
    den = c * c - abs(ynj) ** 2
    center = c * (yj - ynj.conjugate() * q) / den
    radius = abs(yj * ynj - c * c * q) / den
    return DiskImage(center=center, radius=radius)


def sup_on_torus(j: int, y: CPoint, grid: int) -> float:
    """Brute-force oracle for D_j: max of |Phi_j| over `grid` points of the circle."""
    if grid < 8:
        raise DomainError("grid must be at least 8")
    c, _, ynj, _ = _parts(y, j)
    if not degenerate_product(y, j) and abs(ynj) >= c:
        raise DomainError("sup is infinite: |y_{n-j}| >= binom(n, j)")
    best = 0.0
    step = 2.0 * math.pi / grid
    for k in range(grid):
        z = cmath.exp(1j * step * k)
        best = max(best, abs(phi(j, y, z)))
    return best
