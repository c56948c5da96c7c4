"""Random point generators used by the oracle sweeps and the test suite.

All samplers take a numpy Generator so sweeps are reproducible from a seed.
Interior points are built forward through the beta-representation (which is
exact), exterior points by pushing boundary points outward along rays from
the origin (valid because the domains are starlike about 0).
"""

from __future__ import annotations

import math

import numpy as np

from .mobius import CPoint, binom

__all__ = [
    "unit_disc",
    "torus_point",
    "tilde_g_point",
    "tilde_gamma_boundary_point",
    "exterior_point",
    "near_boundary_point",
    "g_point_disc",
    "j_point",
]


def unit_disc(rng: np.random.Generator, rmax: float = 1.0) -> complex:
    """Uniform point of the disc of radius rmax."""
    r = rmax * math.sqrt(rng.random())
    return r * np.exp(2j * math.pi * rng.random())


def torus_point(rng: np.random.Generator) -> complex:
    return complex(np.exp(2j * math.pi * rng.random()))


def _beta_pairs(n: int, rng: np.random.Generator, fill: float) -> list[complex]:
    """beta_1..beta_{n-1} with |beta_j| + |beta_{n-j}| = fill * binom(n, j)."""
    betas = [0j] * (n - 1)
    for j in range(1, n // 2 + 1):
        c = binom(n, j)
        if 2 * j == n:  # the middle pairs with itself: 2 |beta| = fill * c
            betas[j - 1] = (
                0.5 * fill * c * np.exp(2j * math.pi * rng.random())
            )
            continue
        split = rng.random()
        betas[j - 1] = split * fill * c * np.exp(2j * math.pi * rng.random())
        betas[n - 1 - j] = (1.0 - split) * fill * c * np.exp(
            2j * math.pi * rng.random()
        )
    return betas


def _from_betas(betas: list[complex], q: complex) -> CPoint:
    n = len(betas) + 1
    coords = [
        betas[j - 1] + betas[n - 1 - j].conjugate() * q for j in range(1, n)
    ]
    coords.append(q)
    return CPoint(tuple(coords))


def tilde_g_point(
    n: int, rng: np.random.Generator, margin: float = 0.95
) -> CPoint:
    """Interior point of tilde-G_n with beta-slack at least (1-margin)."""
    fill = margin * rng.random()
    q = unit_disc(rng, rmax=margin)
    return _from_betas(_beta_pairs(n, rng, fill), q)


def tilde_gamma_boundary_point(n: int, rng: np.random.Generator) -> CPoint:
    """Boundary point: the beta-sums sit exactly on binom(n, j), |q| < 1.

    With |q| < 1 the beta-representation is unique, so these points are in
    the closure but not the interior.
    """
    q = unit_disc(rng, rmax=0.9)
    return _from_betas(_beta_pairs(n, rng, 1.0), q)


def exterior_point(
    n: int, rng: np.random.Generator, blow: float = 1.3
) -> CPoint:
    """Point outside tilde-Gamma_n: a boundary point pushed outward.

    Starlikeness about the origin makes every outward scaling of a boundary
    point leave the closure.
    """
    factor = 1.0 + (blow - 1.0) * (0.05 + 0.95 * rng.random())
    return tilde_gamma_boundary_point(n, rng).scale(factor)


def near_boundary_point(
    n: int, rng: np.random.Generator, spread: float = 1e-9
) -> CPoint:
    """Point within ~spread of the boundary (either side)."""
    eps = spread * (rng.random() - 0.5) * 2.0
    return tilde_gamma_boundary_point(n, rng).scale(1.0 + eps)


def g_point_disc(
    n: int, rng: np.random.Generator, rmax: float = 0.95
) -> list[complex]:
    """Preimage tuple in the polydisc of radius rmax (feed to symmetrize)."""
    return [unit_disc(rng, rmax=rmax) for _ in range(n)]


def j_point(
    n: int,
    rng: np.random.Generator,
    margin: float = 0.9,
    qmax: float = 0.85,
) -> CPoint:
    """Point of the proportionality slice J_n (for n <= 3 this is all of
    tilde-G_n): only (y_1, y_{n-1}, q) are free, the rest follow the
    binom(n,j)/n ratios, which automatically keeps the point inside."""
    nn = binom(n, 1)
    fill = margin * rng.random()
    split = rng.random()
    b1 = split * fill * nn * np.exp(2j * math.pi * rng.random())
    b2 = (1.0 - split) * fill * nn * np.exp(2j * math.pi * rng.random())
    q = unit_disc(rng, rmax=qmax)
    y1 = b1 + b2.conjugate() * q
    yn1 = b2 + b1.conjugate() * q
    coords = [0j] * n
    coords[0], coords[n - 2], coords[n - 1] = y1, yn1, q
    for j in range(2, n // 2 + 1):
        coords[j - 1] = binom(n, j) / nn * y1
        coords[n - 1 - j] = binom(n, j) / nn * yn1
    if n % 2 == 0:
        coords[n // 2 - 1] = binom(n, n // 2) / nn * (y1 + yn1) / 2.0
    return CPoint(tuple(coords))
