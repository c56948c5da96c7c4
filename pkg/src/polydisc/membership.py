"""Point membership for the extended symmetrized polydisc and its relatives.

Five sets are decided here, each with explainable per-condition margins:

* tilde-G_n   (open extended symmetrized polydisc),
* tilde-Gamma_n (its closure),
* G_n         (symmetrized polydisc, via the recursive beta-descent),
* Gamma_n     (closed symmetrized polydisc),
* b Gamma_n   (distinguished boundary).

Each of these sets admits several equivalent characterizations; all are
implemented independently so they can be cross-checked.  The authoritative
verdict is always the beta-representation inequality ("C7"):

    |y_{n-j} - conj(y_j) q| + |y_j - conj(y_{n-j}) q| < binom(n,j) (1 - |q|^2)

whose closed analogue carries an extra clause at |q| = 1.  Open conditions
hold iff slack > 0; closed conditions hold iff slack >= -band, and any
condition with |slack| < band is flagged boundary-indeterminate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError
from .mobius import CPoint, binom, d_norm, degenerate_product

__all__ = [
    "BOUNDARY_BAND",
    "ALL_CONDITIONS",
    "ConditionMargin",
    "MembershipReport",
    "BetaVector",
    "in_tilde_g",
    "in_tilde_gamma",
    "beta_recover",
    "b_matrices",
    "in_g",
    "in_gamma",
    "in_b_gamma",
    "symmetrize",
    "costara_f",
    "costara_sup",
    "scale_point",
    "nonvanishing_falsifier",
]

BOUNDARY_BAND = 1e-7

ALL_CONDITIONS = ("C2", "C3", "C3p", "C4", "C4p", "C5", "C5p", "C6", "C7", "C8", "C9")
ALL_CONDITIONS_CLOSED = ALL_CONDITIONS + ("C10",)


@dataclass(frozen=True)
class ConditionMargin:
    cond_id: str
    holds: bool
    slack: float
    boundary: bool

    def to_json(self) -> dict:
        slack = self.slack
        if math.isinf(slack):  # keep reports strictly JSON-parsable
            slack = math.copysign(1e308, slack)
        return {
            "cond": self.cond_id,
            "holds": self.holds,
            "slack": slack,
            "boundary": self.boundary,
        }


@dataclass(frozen=True)
class MembershipReport:
    point: CPoint
    set_id: str
    verdict: bool
    per_condition: tuple[ConditionMargin, ...] = ()
    recursion_trace: tuple[CPoint, ...] = ()

    def condition(self, cond_id: str) -> ConditionMargin:
        for c in self.per_condition:
            if c.cond_id == cond_id:
                return c
        raise KeyError(cond_id)

    def to_json(self) -> dict:
        return {
            "point": self.point.to_json(),
            "set": self.set_id,
            "verdict": self.verdict,
            "conditions": [c.to_json() for c in self.per_condition],
            "recursion_trace": [p.to_json() for p in self.recursion_trace],
        }


@dataclass(frozen=True)
class BetaVector:
    """The unique beta-representation of a point with |q| < 1."""

    n: int
    betas: tuple[complex, ...]

    def reconstruct(self, q: complex) -> tuple[complex, ...]:
        n = self.n
        return tuple(
            self.betas[j - 1] + self.betas[n - 1 - j].conjugate() * q
            for j in range(1, n)
        )


# ---------------------------------------------------------------------------
# per-condition slacks
# ---------------------------------------------------------------------------


def _b_norm(c: float, yj: complex, ynj: complex, q: complex) -> float:
    # closed-form operator norm of [[yj/c, k], [k, ynj/c]], k^2 = yj*ynj/c^2 - q
    a = yj / c
    d = ynj / c
    k = cmath.sqrt(a * d - q)
    T = abs(a) ** 2 + abs(d) ** 2 + 2 * abs(k) ** 2
    D = abs(q) ** 2  # |det|^2, det = q by construction
    disc = math.sqrt(max(T * T - 4.0 * D, 0.0))
    return math.sqrt(max((T + disc) / 2.0, 0.0))


def _cond_slack(y: CPoint, cond: str, closed: bool, band: float) -> float:
    """Minimum slack of `cond` over j = 1..floor(n/2) (plus global clauses)."""
    n = y.n
    q = y.q
    slack = math.inf
    if cond == "C6":
        slack = 1.0 - abs(q)  # |q| < 1 (<= 1 closed) folded in once
    if cond == "C10":
        return _c10_slack(y, band)
    for j in range(1, n // 2 + 1):
        c = float(binom(n, j))
        yj, ynj = y.y(j), y.y(n - j)
        degen = degenerate_product(y, j)
        det_term = abs(yj * ynj - c * c * q)
        if cond in ("C2", "C7"):
            s = c * (1.0 - abs(q) ** 2) - (
                abs(ynj - yj.conjugate() * q) + abs(yj - ynj.conjugate() * q)
            )
            if closed and abs(abs(q) - 1.0) <= band:
                s = min(s, c - abs(yj))
        elif cond == "C3":
            s = 1.0 - d_norm(j, y)
            if degen:
                s = min(s, c - abs(ynj))
        elif cond == "C3p":
            s = 1.0 - d_norm(n - j, y)
            if degen:
                s = min(s, c - abs(yj))
        elif cond == "C4":
            s = (c * c - abs(ynj) ** 2) - (
                c * abs(yj - ynj.conjugate() * q) + det_term
            )
            if closed and degen:
                s = min(s, c - abs(yj))
        elif cond == "C4p":
            s = (c * c - abs(yj) ** 2) - (
                c * abs(ynj - yj.conjugate() * q) + det_term
            )
            if closed and degen:
                s = min(s, c - abs(ynj))
        elif cond == "C5":
            s = c * c - (
                abs(yj) ** 2
                - abs(ynj) ** 2
                + c * c * abs(q) ** 2
                + 2 * c * abs(ynj - yj.conjugate() * q)
            )
            s = min(s, c - abs(ynj))
        elif cond == "C5p":
            s = c * c - (
                abs(ynj) ** 2
                - abs(yj) ** 2
                + c * c * abs(q) ** 2
                + 2 * c * abs(yj - ynj.conjugate() * q)
            )
            s = min(s, c - abs(yj))
        elif cond == "C6":
            s = c * c - (
                abs(yj) ** 2 + abs(ynj) ** 2 - c * c * abs(q) ** 2 + 2 * det_term
            )
        elif cond in ("C8", "C9"):
            s = 1.0 - _b_norm(c, yj, ynj, q)
        else:
            raise DomainError(f"unknown condition id {cond!r}")
        slack = min(slack, s)
    return slack


def _c10_slack(y: CPoint, band: float) -> float:
    """Closed beta-representation condition (the closure analogue, C10).

    At |q| = 1 the representation y_j = conj(y_{n-j}) q is forced and the
    free split beta_j = r y_j, beta_{n-j} = (1-r) y_{n-j} (r = 1/2 here;
    any r in [0,1] works) leaves only |y_j| <= binom to check.
    """
    n = y.n
    q = y.q
    if abs(q) > 1.0 + band:
        return 1.0 - abs(q)
    scale = 1.0 + max(abs(c) for c in y.coords)
    if abs(abs(q) - 1.0) <= band:
        slack = math.inf
        for j in range(1, n // 2 + 1):
            c = float(binom(n, j))
            resid = abs(y.y(j) - y.y(n - j).conjugate() * q)
            if resid > band * scale:
                return -resid
            slack = min(slack, c - abs(y.y(j)))
        return slack
    denom = 1.0 - abs(q) ** 2
    slack = math.inf
    for j in range(1, n // 2 + 1):
        c = float(binom(n, j))
        bj = (y.y(j) - y.y(n - j).conjugate() * q) / denom
        bnj = (y.y(n - j) - y.y(j).conjugate() * q) / denom
        slack = min(slack, c - (abs(bj) + abs(bnj)))
    return slack


def _margin(y, cond, closed, band) -> ConditionMargin:
    s = _cond_slack(y, cond, closed, band)
    holds = (s >= -band) if closed else (s > 0.0)
    return ConditionMargin(cond, holds, s, abs(s) < band)


def _tilde_report(y: CPoint, cond, closed: bool, band: float) -> MembershipReport:
    if y.n < 2:
        raise DomainError("extended symmetrized polydisc needs n >= 2")
    avail = ALL_CONDITIONS_CLOSED if closed else ALL_CONDITIONS
    if cond == "ALL":
        wanted = avail
    elif cond in avail:
        wanted = (cond,)
    else:
        raise DomainError(f"condition {cond!r} not available for this set")
    margins = tuple(_margin(y, c, closed, band) for c in wanted)
    auth = _margin(y, "C7", closed, band)
    return MembershipReport(
        point=y,
        set_id="tilde-gamma" if closed else "tilde-g",
        verdict=auth.holds,
        per_condition=margins,
    )


def in_tilde_g(y: CPoint, cond: str = "ALL", band: float = BOUNDARY_BAND) -> MembershipReport:
    """Membership in the open extended symmetrized polydisc.

    `cond` selects which equivalent condition(s) to evaluate and report
    ("C2".."C9" or "ALL"); the verdict itself always comes from the
    beta-representation inequality C7.
    """
    return _tilde_report(y, cond, closed=False, band=band)


def in_tilde_gamma(y: CPoint, cond: str = "ALL", band: float = BOUNDARY_BAND) -> MembershipReport:
    """Membership in the closed extended symmetrized polydisc."""
    return _tilde_report(y, cond, closed=True, band=band)


# fast boolean core used by the recursions and bulk sweeps


def _tilde_slack7(coords: tuple[complex, ...], closed: bool, band: float) -> float:
    n = len(coords)
    q = coords[-1]
    aq = abs(q)
    slack = math.inf
    unit_q = closed and abs(aq - 1.0) <= band
    for j in range(1, n // 2 + 1):
        c = float(math.comb(n, j))
        yj, ynj = coords[j - 1], coords[n - 1 - j]
        s = c * (1.0 - aq * aq) - (
            abs(ynj - yj.conjugate() * q) + abs(yj - ynj.conjugate() * q)
        )
        if unit_q:
            s = min(s, c - abs(yj))
        slack = min(slack, s)
    return slack


def beta_recover(y: CPoint) -> BetaVector:
    """The forced beta-representation beta_j = (y_j - conj(y_{n-j}) q) / (1 - |q|^2)."""
    q = y.q
    if abs(q) >= 1.0:
        raise DomainError("beta recovery needs |q| < 1")
    n = y.n
    denom = 1.0 - abs(q) ** 2
    betas = tuple(
        (y.y(j) - y.y(n - j).conjugate() * q) / denom for j in range(1, n)
    )
    return BetaVector(n=n, betas=betas)


def b_matrices(y: CPoint) -> list[np.ndarray]:
    """The symmetric matrices of condition (9): diag (y_j/C, y_{n-j}/C),
    off-diagonal any square root of y_j y_{n-j}/C^2 - q (principal branch);
    all have determinant q, and membership is equivalent to every norm < 1.
    """
    n = y.n
    if n < 2:
        raise DomainError("needs n >= 2")
    out = []
    for j in range(1, n // 2 + 1):
        c = float(binom(n, j))
        a = y.y(j) / c
        d = y.y(n - j) / c
        k = cmath.sqrt(a * d - y.q)
        out.append(np.array([[a, k], [k, d]], dtype=complex))
    return out


# ---------------------------------------------------------------------------
# G_n / Gamma_n / b Gamma_n
# ---------------------------------------------------------------------------


def _beta_coords(coords: tuple[complex, ...]) -> tuple[complex, ...]:
    n = len(coords)
    p = coords[-1]
    denom = 1.0 - abs(p) ** 2
    return tuple(
        (coords[j - 1] - coords[n - 1 - j].conjugate() * p) / denom
        for j in range(1, n)
    )


def in_g(s: CPoint, band: float = BOUNDARY_BAND) -> MembershipReport:
    """Membership in the symmetrized polydisc G_n.

    Recursive descent: s is in G_n iff s is in tilde-G_n and the recovered
    beta-point lies in G_{n-1}; the base case G_1 is the unit disc.  The
    beta-points visited are recorded in recursion_trace.
    """
    trace: list[CPoint] = []
    cur = s.coords
    verdict = True
    while len(cur) > 1:
        p = cur[-1]
        if abs(p) >= 1.0 or _tilde_slack7(cur, closed=False, band=band) <= 0.0:
            verdict = False
            break
        cur = _beta_coords(cur)
        trace.append(CPoint(cur))
    if verdict:
        verdict = abs(cur[0]) < 1.0
    auth = _margin(s, "C7", False, band) if s.n >= 2 else ConditionMargin(
        "C7", abs(s.coords[0]) < 1.0, 1.0 - abs(s.coords[0]), abs(1.0 - abs(s.coords[0])) < band
    )
    return MembershipReport(
        point=s,
        set_id="g",
        verdict=verdict,
        per_condition=(auth,),
        recursion_trace=tuple(trace),
    )


def in_gamma(s: CPoint, band: float = BOUNDARY_BAND) -> MembershipReport:
    """Membership in the closed symmetrized polydisc Gamma_n.

    For |p| inside the unit circle: s in Gamma_n iff s in tilde-Gamma_n and
    the beta-point is in Gamma_{n-1}.  At |p| = 1 (within band) the point
    is in Gamma_n iff it lies on the distinguished boundary, which has its
    own characterization; beyond, it is out.
    """
    trace: list[CPoint] = []
    cur = s.coords
    verdict: bool | None = None
    while len(cur) > 1:
        p = cur[-1]
        if abs(p) > 1.0 + band:
            verdict = False
            break
        if abs(abs(p) - 1.0) <= band:
            verdict = _b_gamma_coords(cur, band)
            break
        if _tilde_slack7(cur, closed=True, band=band) < -band:
            verdict = False
            break
        cur = _beta_coords(cur)
        trace.append(CPoint(cur))
    if verdict is None:
        verdict = abs(cur[0]) <= 1.0 + band
    auth = _margin(s, "C7", True, band) if s.n >= 2 else ConditionMargin(
        "C7", abs(s.coords[0]) <= 1.0 + band, 1.0 - abs(s.coords[0]), abs(1.0 - abs(s.coords[0])) < band
    )
    return MembershipReport(
        point=s,
        set_id="gamma",
        verdict=verdict,
        per_condition=(auth,),
        recursion_trace=tuple(trace),
    )


def _b_gamma_coords(coords: tuple[complex, ...], band: float) -> bool:
    n = len(coords)
    if n == 1:
        return abs(abs(coords[0]) - 1.0) <= band
    p = coords[-1]
    if abs(abs(p) - 1.0) > band:
        return False
    scale = 1.0 + max(abs(c) for c in coords)
    for j in range(1, n):
        if abs(coords[j - 1] - coords[n - 1 - j].conjugate() * p) > band * scale:
            return False
    scaled = tuple((n - j) / n * coords[j - 1] for j in range(1, n))
    return in_gamma(CPoint(scaled), band=band).verdict


def in_b_gamma(s: CPoint, band: float = BOUNDARY_BAND) -> bool:
    """Distinguished boundary of Gamma_n: |p| = 1, y_j = conj(y_{n-j}) p,
    and the (n-1)/n-scaled truncation lies in Gamma_{n-1}."""
    return _b_gamma_coords(s.coords, band)


def symmetrize(z: list[complex] | tuple[complex, ...]) -> CPoint:
    """Elementary symmetric coordinates (s_1, ..., s_{n-1}, p) of z in C^n,
    by the stable one-point-at-a-time recurrence (exact on integer input)."""
    z = [complex(w) for w in z]
    n = len(z)
    if n < 1:
        raise DomainError("need at least one coordinate")
    e = [complex(1.0)] + [complex(0.0)] * n
    for m, zm in enumerate(z, start=1):
        for k in range(m, 0, -1):
            e[k] = e[k] + zm * e[k - 1]
    return CPoint(tuple(e[1:]))


# ---------------------------------------------------------------------------
# Costara's rational function
# ---------------------------------------------------------------------------


def _costara_coeffs(s: CPoint) -> tuple[list[complex], list[complex]]:
    """Ascending coefficients (numerator, denominator) of f_s.

    num_k = (-1)^{k+1} (k+1) s_{k+1},  den_k = (-1)^k (n-k) s_k,  s_0 = 1.
    """
    n = s.n
    num = [(-1.0) ** (k + 1) * (k + 1) * s.coords[k] for k in range(n)]
    den = [complex(n)] + [
        (-1.0) ** k * (n - k) * s.coords[k - 1] for k in range(1, n)
    ]
    return num, den


def _polyval(coeffs: list[complex], z: complex) -> complex:
    acc = complex(0.0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def costara_f(s: CPoint, z: complex) -> complex:
    """Costara's rational function f_s at z."""
    num, den = _costara_coeffs(s)
    d = _polyval(den, z)
    if abs(d) < 1e-300:
        raise PoleError(f"f_s has a pole at z={z}", at=z)
    return _polyval(num, z) / d


def costara_sup(s: CPoint, grid: int = 4096) -> float:
    """sup over the closed unit disc of |f_s|.

    If the denominator has a root in the closed disc (companion-matrix test,
    |root| <= 1 + 1e-10) where the numerator does not vanish, the sup is
    +inf.  Otherwise the poles are outside and the maximum principle reduces
    the sup to the boundary, sampled on `grid` points.
    """
    if grid < 8:
        raise DomainError("grid must be at least 8")
    num, den = _costara_coeffs(s)
    scale = max(abs(c) for c in den)
    desc = list(reversed(den))
    while desc and abs(desc[0]) <= 1e-14 * scale:
        desc.pop(0)
    if len(desc) > 1:
        nscale = max(1.0, max(abs(c) for c in num))
        for r in np.roots(np.array(desc, dtype=complex)):
            if abs(r) <= 1.0 + 1e-10 and abs(_polyval(num, complex(r))) > 1e-10 * nscale:
                return math.inf
    best = 0.0
    step = 2.0 * math.pi / grid
    for k in range(grid):
        z = cmath.exp(1j * step * k)
        best = max(best, abs(_polyval(num, z) / _polyval(den, z)))
    return best


def scale_point(s: CPoint, lam: complex) -> CPoint:
    """(s_1, ..., s_{n-1}, p) -> (s_1/lam, s_2/lam^2, ..., p/lam^n).

    Undoes the coordinatewise homogeneity of the symmetrization map:
    symmetrize(lam * z) rescaled by lam is symmetrize(z).
    """
    lam = complex(lam)
    if lam == 0:
        raise DomainError("lam must be nonzero")
    return CPoint(tuple(c / lam ** (k + 1) for k, c in enumerate(s.coords)))


def nonvanishing_falsifier(
    y: CPoint, j: int, grid: int = 64
) -> tuple[float, complex, complex]:
    """Diagnostic search for a zero of
    g(z, w) = binom - y_j z - y_{n-j} w + binom q z w on the closed bidisc.

    Returns (min |g|, argmin z, argmin w).  The zero curve z(w) is traced
    over a `grid`-point circle sweep of w (both variable roles), with z
    projected into the closed disc when it falls outside; a grid over the
    torus x torus is also sampled.  A near-zero minimum falsifies condition
    (2); a large minimum certifies nothing (the verdict stays with C7).
    """
    n = y.n
    c = float(binom(n, j))
    yj, ynj, q = y.y(j), y.y(n - j), y.q

    def val(z: complex, w: complex) -> float:
        return abs(c - yj * z - ynj * w + c * q * z * w)

    best = (val(1.0, 1.0), complex(1.0), complex(1.0))
    step = 2.0 * math.pi / grid
    for a in range(grid):
        z = cmath.exp(1j * step * a)
        for b in range(grid):
            w = cmath.exp(1j * step * b)
            v = val(z, w)
            if v < best[0]:
                best = (v, z, w)
    for radius in (0.0, 0.5, 0.9, 1.0):
        for b in range(grid):
            w = radius * cmath.exp(1j * step * b)
            den = c * q * w - yj
            if abs(den) > 1e-300:
                z = (ynj * w - c) / den
                if abs(z) > 1.0:
                    z /= abs(z)
                v = val(z, w)
                if v < best[0]:
                    best = (v, z, w)
            den = c * q * w - ynj  # same curve with the roles exchanged
            if abs(den) > 1e-300:
                z = (yj * w - c) / den
                if abs(z) > 1.0:
                    z /= abs(z)
                v = val(w, z)
                if v < best[0]:
                    best = (v, w, z)
    return best
