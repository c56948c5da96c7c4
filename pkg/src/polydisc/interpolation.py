"""Constructive two-point analytic interpolation into the extended
symmetrized polydisc.

The strict case (sup-norm strictly under |lambda0|) follows the matricial
Moebius recipe: pick nu inside the window theta_1 < nu^2 < theta_2, form
Z_nu, certify feasibility through K_{Z_nu}(|lambda0|), and assemble

    F(l) = M_{-Z_nu}(B(l) Q(l)) diag(l, 1),     psi = pi o F,

where B is the Blaschke factor at lambda0 and Q any Schur function fixed at
Q(0) by the u/v vectors.  The exactly-extremal case (sup-norm equal to
|lambda0|, which is where the Lempert function lives) is built instead by
Takagi-diagonalizing the norm-one Z: the top singular direction freezes to
a constant and a scalar two-point problem closes the second one.  The
infinite family attached to the worked data point (3/2, 3/4, 1/2) with
lambda0 = -4/5 is exposed separately.

All produced discs are immutable DiscFunction values: evaluable at any
lambda in the unit disc, serializable to JSON, and re-evaluable bit-exactly
after a round trip.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .clinalg import herm_sqrt, matricial_mobius, op_norm, takagi
from .errors import (
    ConstructionError,
    DegenerateProblemError,
    DomainError,
    InfeasibleError,
    MarginalProblemError,
    PoleError,
)
from .membership import BOUNDARY_BAND
from .mobius import CPoint, binom, d_norm, degenerate_product
from .schwarz import SchwarzProblem, feasibility_alpha, k_rho

__all__ = [
    "ScalarSchur",
    "DiscFunction",
    "blaschke",
    "nu_window",
    "z_nu",
    "u_v_vectors",
    "default_q",
    "np2",
    "build_interpolant",
    "worked_family",
    "extremal_disc",
    "slice_interpolant",
    "identity_regressions",
    "WORKED_FAMILY_TARGET",
    "WORKED_FAMILY_LAMBDA0",
]

WORKED_FAMILY_TARGET = CPoint((1.5 + 0j, 0.75 + 0j, 0.5 + 0j))
WORKED_FAMILY_LAMBDA0 = -0.8 + 0j
_WF_G_AT_0 = 0.3 + 0j
_WF_G_AT_L0 = 0.625 + 0j


def blaschke(lambda0: complex, lam: complex) -> complex:
    """B(l) = (lambda0 - l) / (1 - conj(lambda0) l); vanishes at lambda0,
    sends 0 to lambda0, unimodular on the circle."""
    lambda0, lam = complex(lambda0), complex(lam)
    den = 1.0 - lambda0.conjugate() * lam
    if abs(den) < 1e-300:
        raise PoleError("Blaschke factor pole", at=lam)
    return (lambda0 - lam) / den


# ---------------------------------------------------------------------------
# scalar Schur functions
# ---------------------------------------------------------------------------


def _disc_auto(w: complex, s: complex) -> complex:
    # mu_w(s) = (w + s) / (1 + conj(w) s): disc automorphism sending 0 to w
    return (w + s) / (1.0 + w.conjugate() * s)


@dataclass(frozen=True)
class ScalarSchur:
    """A finitely-represented scalar Schur function.

    kind "blaschke": const * prod_k (l - zeros_k)/(1 - conj(zeros_k) l),
    with |const| <= 1 (so scaled Blaschke products, constants included).

    kind "np2": the one-step Schur-algorithm solution of a two-node problem,
    mu_{wa}(e_a(l) * mu_{c1}(e_b(l) * t)) with e_x the zero-at-x Blaschke
    factor; parameters are stored, not the closed rational form.
    """

    kind: str
    const: complex = 1.0 + 0j
    zeros: tuple[complex, ...] = ()
    a: complex = 0j
    wa: complex = 0j
    b: complex = 0j
    c1: complex = 0j
    t: complex = 0j

    def __call__(self, lam: complex) -> complex:
        lam = complex(lam)
        if self.kind == "blaschke":
            acc = self.const
            for z in self.zeros:
                acc *= (lam - z) / (1.0 - z.conjugate() * lam)
            return acc
        if self.kind == "np2":
            eb = (lam - self.b) / (1.0 - self.b.conjugate() * lam)
            h = _disc_auto(self.c1, eb * self.t)
            ea = (lam - self.a) / (1.0 - self.a.conjugate() * lam)
            return _disc_auto(self.wa, ea * h)
        raise DomainError(f"unknown ScalarSchur kind {self.kind!r}")

    def to_json(self) -> dict:
        def c(z):
            return [complex(z).real, complex(z).imag]

        return {
            "kind": self.kind,
            "const": c(self.const),
            "zeros": [c(z) for z in self.zeros],
            "np2": [c(self.a), c(self.wa), c(self.b), c(self.c1), c(self.t)],
        }

    @staticmethod
    def from_json(obj: dict) -> "ScalarSchur":
        def c(v):
            return complex(v[0], v[1])

        a, wa, b, c1, t = (c(v) for v in obj["np2"])
        return ScalarSchur(
            kind=obj["kind"],
            const=c(obj["const"]),
            zeros=tuple(c(z) for z in obj["zeros"]),
            a=a,
            wa=wa,
            b=b,
            c1=c1,
            t=t,
        )


def np2(a: complex, wa: complex, b: complex, wb: complex, t: complex = 0j) -> ScalarSchur:
    """Scalar Schur g with g(a) = wa and g(b) = wb, closed with the free
    parameter |t| <= 1 (distinct t give distinct g when the data is strictly
    solvable, i.e. pseudo-hyperbolic d(wa, wb) < d(a, b))."""
    a, wa, b, wb, t = (complex(v) for v in (a, wa, b, wb, t))
    if abs(a) >= 1 or abs(b) >= 1 or a == b:
        raise DomainError("nodes must be distinct points of the open disc")
    if abs(wa) >= 1 or abs(wb) >= 1:
        raise DomainError("values must lie in the open disc")
    if abs(t) > 1:
        raise DomainError("|t| must be at most 1")
    eab = (b - a) / (1.0 - a.conjugate() * b)
    c1 = (wb - wa) / (1.0 - wa.conjugate() * wb) / eab
    if abs(c1) > 1.0 + 1e-9:
        raise InfeasibleError(
            f"two-point data unsolvable: pseudo-hyperbolic ratio {abs(c1):.12g} > 1"
        )
    if abs(c1) > 1.0:
        # exactly-marginal data lands here through roundoff (chained extremal
        # constructions can overshoot by ~1e-12); the clamped solution is the
        # unique one and the contract check below arbitrates
        c1 /= abs(c1)
    g = ScalarSchur(kind="np2", a=a, wa=wa, b=b, c1=c1, t=t)
    if abs(g(a) - wa) > 1e-11 or abs(g(b) - wb) > 1e-11:
        raise ConstructionError("np2 failed its interpolation contract")
    return g


# ---------------------------------------------------------------------------
# the strict-case ingredients
# ---------------------------------------------------------------------------


def _x2_general(c: float, y1: complex, yn1: complex, q: complex, al: float) -> float:
    knum = abs(y1 * yn1 - c * c * q)
    return al / knum * (
        c * c - abs(y1) ** 2 / al**2 - abs(yn1) ** 2 + c * c * abs(q) ** 2 / al**2
    )


def _window_from_x2(x2: float) -> tuple[float, float]:
    if x2 <= 2.0:
        raise MarginalProblemError(
            "no open nu-window: the sup-norm bound is not strict (X_2 <= 2)"
        )
    root = math.sqrt(x2 * x2 - 4.0)
    return (x2 - root) / 2.0, (x2 + root) / 2.0


def _check_n3_ordered(y0: CPoint, lambda0: complex, band: float) -> None:
    if y0.n != 3:
        raise DomainError("this operation is stated for n = 3")
    if abs(y0.y(2)) > abs(y0.y(1)):
        raise DomainError("requires |y_2| <= |y_1|; swap the point first")
    if degenerate_product(y0, 1):
        raise DegenerateProblemError(
            "y_1 y_2 = 9 q: use the diagonal construction"
        )
    if d_norm(1, y0) >= abs(lambda0) - band:
        raise MarginalProblemError(
            "sup-norm is not strictly below |lambda0|"
        )


def nu_window(y0: CPoint, lambda0: complex, band: float = BOUNDARY_BAND) -> tuple[float, float]:
    """(theta_1, theta_2), the window of admissible nu^2: the roots of
    z + 1/z = X_2.  Their product is 1 and theta_1 < 1 < theta_2, so nu = 1
    always qualifies for a strict problem."""
    _check_n3_ordered(y0, lambda0, band)
    x2 = _x2_general(3.0, y0.y(1), y0.y(2), y0.q, abs(complex(lambda0)))
    return _window_from_x2(x2)


def _z_nu_general(
    c: float, y1: complex, yn1: complex, q: complex, lam0: complex, nu: float
) -> np.ndarray:
    w = cmath.sqrt((y1 * yn1 - c * c * q) / (c * c * lam0))
    return np.array([[y1 / (c * lam0), nu * w], [w / nu, yn1 / c]])


def z_nu(y0: CPoint, lambda0: complex, nu: float, band: float = BOUNDARY_BAND) -> np.ndarray:
    """The scaled symmetric matrix Z_nu with off-diagonals nu*w and w/nu,
    w the principal square root of (y_1 y_2 - 9 q) / (9 lambda0)."""
    _check_n3_ordered(y0, lambda0, band)
    if not nu > 0:
        raise DomainError("nu must be positive")
    return _z_nu_general(3.0, y0.y(1), y0.y(2), y0.q, complex(lambda0), nu)


def u_v_vectors(Z: np.ndarray, alpha) -> tuple[np.ndarray, np.ndarray]:
    """u(alpha) = (1-ZZ*)^{-1/2}(alpha_1 Z e_1 + alpha_2 e_2),
    v(alpha) = -(1-Z*Z)^{-1/2}(alpha_1 e_1 + alpha_2 Z* e_2)."""
    Z = np.asarray(Z, dtype=complex)
    alpha = np.asarray(alpha, dtype=complex).reshape(2)
    if not np.any(np.abs(alpha) > 0):
        raise DomainError("alpha must be nonzero")
    if op_norm(Z) >= 1.0:
        raise DomainError("Z must be a strict contraction")
    I = np.eye(2)
    left = np.linalg.inv(herm_sqrt(I - Z @ Z.conj().T))
    right = np.linalg.inv(herm_sqrt(I - Z.conj().T @ Z))
    u = left @ (alpha[0] * Z[:, 0] + alpha[1] * np.array([0.0, 1.0]))
    v = -right @ (alpha[0] * np.array([1.0, 0.0]) + alpha[1] * Z.conj().T[:, 1])
    return u, v


def default_q(Z: np.ndarray, alpha, lambda0: complex) -> np.ndarray:
    """The canonical constant Q_0 = u v* / (lambda0 ||u||^2), satisfying the
    closure contract Q_0* conj(lambda0) u = v; contractive whenever alpha
    makes ||v||^2 - |lambda0|^2 ||u||^2 nonpositive.  When u vanishes (the
    [Z]_22 = 0 corner) the zero matrix is returned, which freezes the
    composed function at the constant Z."""
    lam0 = complex(lambda0)
    u, v = u_v_vectors(Z, alpha)
    nu2 = float(np.linalg.norm(u)) ** 2
    if nu2 <= 1e-26:
        if abs(np.asarray(Z)[1, 1]) > 1e-12:
            raise DegenerateProblemError("u(alpha) = 0 with [Z]_22 nonzero")
        return np.zeros((2, 2), dtype=complex)
    return np.outer(u, v.conj()) / (lam0 * nu2)


# ---------------------------------------------------------------------------
# disc functions
# ---------------------------------------------------------------------------


def _assemble_equal(n: int, F: np.ndarray) -> tuple[complex, ...]:
    """pi_n(F, ..., F): the point whose j-th coordinate is binom(n, j) times
    the matching diagonal entry (middle averaged for even n), last the det."""
    k = n // 2
    coords: list[complex] = []
    if n % 2 == 1:
        coords += [binom(n, j) * F[0, 0] for j in range(1, k + 1)]
        coords += [binom(n, j) * F[1, 1] for j in range(k, 0, -1)]
    else:
        coords += [binom(n, j) * F[0, 0] for j in range(1, k)]
        coords.append(binom(n, k) * (F[0, 0] + F[1, 1]) / 2.0)
        coords += [binom(n, j) * F[1, 1] for j in range(k - 1, 0, -1)]
    coords.append(F[0, 0] * F[1, 1] - F[0, 1] * F[1, 0])
    return tuple(coords)


def _mat_json(M: np.ndarray | None):
    if M is None:
        return None
    return [[[M[i, j].real, M[i, j].imag] for j in range(2)] for i in range(2)]


def _mat_from_json(obj) -> np.ndarray | None:
    if obj is None:
        return None
    return np.array(
        [[complex(*obj[i][j]) for j in range(2)] for i in range(2)], dtype=complex
    )


@dataclass(frozen=True)
class DiscFunction:
    """An analytic map of the unit disc into the closed extended symmetrized
    polydisc, psi = pi_n(F, ..., F) for a 2x2 Schur-class core F.

    kinds:
      "matrix_mobius": F(l) = M_{-Z}(B(l) (Q0 + l Qlin)) diag(l, 1)
      "takagi":        F(l) = U diag(d1, g(l)) U^T diag(l, 1)
      "worked_family":      the takagi form with the worked-example unitary
      "diagonal":      F(l) = diag(f(l), g(l))

    `swap` exchanges coordinates j and n-j of the output (used when the
    input data arrived with |y_{n-1}| > |y_1| and was solved swapped).
    """

    kind: str
    n: int
    swap: bool = False
    lambda0: complex = 0j
    Z: np.ndarray | None = None
    Q0: np.ndarray | None = None
    Qlin: np.ndarray | None = None
    U: np.ndarray | None = None
    d1: complex = 0j
    g: ScalarSchur | None = None
    f: ScalarSchur | None = None

    def core(self, lam: complex) -> np.ndarray:
        lam = complex(lam)
        if self.kind == "matrix_mobius":
            Q = self.Q0 if self.Qlin is None else self.Q0 + lam * self.Qlin
            X = blaschke(self.lambda0, lam) * Q
            return matricial_mobius(-self.Z, X) @ np.diag([lam, 1.0])
        if self.kind in ("takagi", "worked_family"):
            mid = np.diag([self.d1, self.g(lam)])
            return (self.U @ mid @ self.U.T) @ np.diag([lam, 1.0])
        if self.kind == "diagonal":
            return np.diag([self.f(lam), self.g(lam)])
        raise DomainError(f"unknown DiscFunction kind {self.kind!r}")

    def __call__(self, lam: complex) -> CPoint:
        coords = _assemble_equal(self.n, self.core(lam))
        p = CPoint(coords)
        return p.swap() if self.swap else p

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "swap": self.swap,
            "lambda0": [self.lambda0.real, self.lambda0.imag],
            "Z": _mat_json(self.Z),
            "Q0": _mat_json(self.Q0),
            "Qlin": _mat_json(self.Qlin),
            "U": _mat_json(self.U),
            "d1": [self.d1.real, self.d1.imag],
            "g": None if self.g is None else self.g.to_json(),
            "f": None if self.f is None else self.f.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "DiscFunction":
        return DiscFunction(
            kind=obj["kind"],
            n=obj["n"],
            swap=obj["swap"],
            lambda0=complex(*obj["lambda0"]),
            Z=_mat_from_json(obj["Z"]),
            Q0=_mat_from_json(obj["Q0"]),
            Qlin=_mat_from_json(obj["Qlin"]),
            U=_mat_from_json(obj["U"]),
            d1=complex(*obj["d1"]),
            g=None if obj["g"] is None else ScalarSchur.from_json(obj["g"]),
            f=None if obj["f"] is None else ScalarSchur.from_json(obj["f"]),
        )


def _verify_endpoints(
    disc: DiscFunction, lambda0: complex, target: CPoint, tol: float
) -> None:
    at0 = disc(0.0)
    if max(abs(c) for c in at0.coords) > tol:
        raise ConstructionError("disc does not vanish at 0")
    atl = disc(lambda0)
    err = max(abs(a - b) for a, b in zip(atl.coords, target.coords))
    if err > tol:
        raise ConstructionError(f"disc misses the target by {err:.3g}")


def _verify_range(disc: DiscFunction, samples: int, rng, band: float) -> None:
    from .membership import in_tilde_gamma

    for _ in range(samples):
        lam = math.sqrt(rng.random()) * 0.999 * cmath.exp(2j * math.pi * rng.random())
        if not in_tilde_gamma(disc(lam), cond="C7", band=max(band, 1e-9)).verdict:
            raise ConstructionError(f"disc leaves the closure at lambda={lam}")


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def _diagonal_disc(
    n: int, y1: complex, yn1: complex, q: complex, lam0: complex, swap: bool
) -> DiscFunction:
    c = float(binom(n, 1))
    f = ScalarSchur(kind="blaschke", const=y1 / (c * lam0), zeros=(0j,))
    g = ScalarSchur(kind="blaschke", const=yn1 / (c * lam0), zeros=(0j,))
    return DiscFunction(kind="diagonal", n=n, swap=swap, lambda0=lam0, f=f, g=g)


def build_interpolant(
    y0: CPoint,
    lambda0: complex,
    nu: float | None = None,
    alpha=None,
    Q0: np.ndarray | None = None,
    Qlin: np.ndarray | None = None,
    band: float = BOUNDARY_BAND,
    check_samples: int = 64,
    rng: np.random.Generator | None = None,
) -> DiscFunction:
    """Analytic psi with psi(0) = 0 and psi(lambda0) = y0 in tilde-G_3, for
    strict data (branch-selected sup-norm strictly under |lambda0|).

    nu defaults to 1 (always inside the window); alpha defaults to the
    conjugated bottom eigenvector of K_{Z_nu}(|lambda0|); Q0 defaults to the
    canonical constant of default_q.  A nonzero Qlin perturbs Q to
    Q0 + lambda Qlin: both endpoints are blind to it (the Blaschke factor
    kills Q at lambda0 and only Q(0) enters at 0), so distinct Qlin give
    distinct interpolants with the same data.

    Exactly-marginal problems are refused: see extremal_disc for the
    boundary construction, and worked_family for the worked marginal family.
    """
    lam0 = complex(lambda0)
    SchwarzProblem(lambda0=lam0, target=y0)  # validates |lambda0| and membership
    if y0.n != 3:
        raise DomainError("build_interpolant is the n = 3 constructor")
    rng = rng if rng is not None else np.random.default_rng(0)
    if max(abs(c) for c in y0.coords) == 0.0:
        zero = ScalarSchur(kind="blaschke", const=0j)
        return DiscFunction(kind="diagonal", n=3, swap=False, lambda0=lam0, f=zero, g=zero)
    swap = abs(y0.y(2)) > abs(y0.y(1))
    ys = y0.swap() if swap else y0
    if degenerate_product(ys, 1):
        if max(abs(ys.y(1)), abs(ys.y(2))) / 3.0 >= abs(lam0) - band:
            raise MarginalProblemError("degenerate data sits on the Schwarz bound")
        disc = _diagonal_disc(3, ys.y(1), ys.y(2), ys.q, lam0, swap)
        _verify_endpoints(disc, lam0, y0, 1e-9)
        return disc
    theta1, theta2 = nu_window(ys, lam0, band=band)
    if nu is None:
        nu = 1.0 if theta1 < 1.0 < theta2 else math.sqrt(math.sqrt(theta1 * theta2))
    if not theta1 < nu * nu < theta2:
        raise DomainError(
            f"nu^2 = {nu * nu:.6g} outside the window ({theta1:.6g}, {theta2:.6g})"
        )
    Z = z_nu(ys, lam0, nu, band=band)
    K = k_rho(Z, abs(lam0))
    lam_min, alpha_star = feasibility_alpha(K)
    if alpha is None:
        if lam_min > band:
            raise ConstructionError(
                f"K_Z(|lambda0|) is positive definite (min eig {lam_min:.3g})"
            )
        alpha = alpha_star
    alpha = np.asarray(alpha, dtype=complex).reshape(2)
    u, v = u_v_vectors(Z, alpha)
    form = float(np.linalg.norm(v)) ** 2 - abs(lam0) ** 2 * float(np.linalg.norm(u)) ** 2
    if form > band:
        raise DomainError("alpha does not satisfy the feasibility form")
    if Q0 is None:
        Q0 = default_q(Z, alpha, lam0)
    else:
        Q0 = np.asarray(Q0, dtype=complex)
        scale = 1.0 + float(np.linalg.norm(u))
        if np.abs(Q0.conj().T @ (lam0.conjugate() * u) - v).max() > 1e-9 * scale:
            raise DomainError("supplied Q0 violates the closure contract")
    qnorm = op_norm(Q0)
    if qnorm > 1.0 + 1e-11:
        raise DomainError(f"Q0 is not a contraction (norm {qnorm:.6g})")
    if Qlin is not None:
        Qlin = np.asarray(Qlin, dtype=complex)
        if qnorm + op_norm(Qlin) > 1.0 + 1e-11:
            raise DomainError("Q0 + lambda Qlin can leave the Schur class")
    disc = DiscFunction(
        kind="matrix_mobius",
        n=3,
        swap=swap,
        lambda0=lam0,
        Z=Z,
        Q0=Q0,
        Qlin=Qlin,
    )
    _verify_endpoints(disc, lam0, y0, 1e-9)
    _verify_range(disc, check_samples, rng, band)
    return disc


def _takagi_g0(U: np.ndarray, d1: complex) -> complex:
    """g(0) forced by [U diag(d1, g(0)) U^T]_22 = 0."""
    if abs(U[1, 1]) < 1e-12:
        raise InfeasibleError("degenerate Takagi frame: U_22 = 0")
    t0 = -d1 * U[1, 0] ** 2 / U[1, 1] ** 2
    if abs(t0) > 1.0:
        raise InfeasibleError(f"forced g(0) leaves the disc: |t0| = {abs(t0):.6g}")
    return t0


def worked_family(g: ScalarSchur, check: bool = True) -> DiscFunction:
    """A member of the infinite interpolation family through
    psi(0) = 0, psi(-4/5) = (3/2, 3/4, 1/2): psi_g = pi o F_g with

        F_g(l) = U_y diag(-1, g(l)) U_y^T diag(l, 1),

    valid exactly when g is Schur with g(0) = 3/10 and g(-4/5) = 5/8, and
    then det F_g(l) = -l g(l).  Use np2(0, 3/10, -4/5, 5/8, t) to produce
    admissible g with free parameter t."""
    if abs(g(0j) - _WF_G_AT_0) > 1e-10:
        raise DomainError("family requires g(0) = 3/10")
    if abs(g(WORKED_FAMILY_LAMBDA0) - _WF_G_AT_L0) > 1e-10:
        raise DomainError("family requires g(-4/5) = 5/8")
    w = math.sqrt(15.0 / 32.0)
    U = np.array(
        [
            [8.0 * w / math.sqrt(39.0), 4.0 * math.sqrt(2.0) * w / math.sqrt(65.0)],
            [-3.0 / math.sqrt(39.0), 5.0 * math.sqrt(2.0) / math.sqrt(65.0)],
        ],
        dtype=complex,
    )
    disc = DiscFunction(
        kind="worked_family",
        n=3,
        swap=False,
        lambda0=WORKED_FAMILY_LAMBDA0,
        U=U,
        d1=-1.0 + 0j,
        g=g,
    )
    if check:
        _verify_endpoints(disc, WORKED_FAMILY_LAMBDA0, WORKED_FAMILY_TARGET, 1e-10)
    return disc


def _slice_core(y: CPoint, lam0: complex, band: float) -> DiscFunction:
    """The single 2x2 core driving a disc through (0, 0) and (lam0, y) for a
    point of the slice J_n: only the pair (y_1, y_{n-1}) is interpolated and
    the proportionality relations land every other coordinate automatically.

    Strict pair subproblem (||Z|| < 1): matricial Moebius route.  Exactly
    marginal (||Z|| = 1, the extremal case): Takagi diagonalization with the
    top singular direction frozen and a scalar two-point closure.
    """
    n = y.n
    swap = abs(y.y(1)) < abs(y.y(n - 1))
    ys = y.swap() if swap else y
    y1, yn1, q = ys.y(1), ys.y(n - 1), ys.q
    c = float(binom(n, 1))
    if degenerate_product(ys, 1):
        if max(abs(y1), abs(yn1)) / c >= abs(lam0) + band:
            raise InfeasibleError("degenerate data exceeds the Schwarz bound")
        return _diagonal_disc(n, y1, yn1, q, lam0, swap)
    if abs(q) >= abs(lam0) - band:
        raise InfeasibleError(
            "doubly marginal data: |q| = |lambda0| leaves no Schur slack"
        )
    Z = _z_nu_general(c, y1, yn1, q, lam0, 1.0)
    zn = op_norm(Z)
    if zn < 1.0 - band:
        K = k_rho(Z, abs(lam0))
        lam_min, alpha = feasibility_alpha(K)
        if lam_min > band:
            raise InfeasibleError("feasibility matrix is positive definite")
        Q0 = default_q(Z, alpha, lam0)
        return DiscFunction(
            kind="matrix_mobius", n=n, swap=swap, lambda0=complex(lam0), Z=Z, Q0=Q0
        )
    if zn > 1.0 + band:
        raise InfeasibleError("pair norm exceeds 1: no disc exists at this lambda0")
    U, s = takagi(Z)
    if np.abs(U @ np.diag(s) @ U.T - Z).max() > 1e-9:
        raise ConstructionError("Takagi factorization failed")
    d1 = complex(min(s[0], 1.0))
    t0 = _takagi_g0(U, d1)
    g = np2(0j, t0, complex(lam0), complex(s[1]))
    return DiscFunction(
        kind="takagi", n=n, swap=swap, lambda0=complex(lam0), U=U, d1=d1, g=g
    )


def slice_interpolant(
    y: CPoint,
    lambda0: complex,
    band: float = BOUNDARY_BAND,
    rng: np.random.Generator | None = None,
    check_samples: int = 32,
) -> DiscFunction:
    """Disc through (0, 0) and (lambda0, y) for a point y of the slice J_n,
    at a caller-chosen lambda0 with |lambda0| at or above max_j D_j(y) (on
    the slice the Schwarz conditions are sufficient, so such a disc exists).
    Unlike build_interpolant this works at every dimension and also accepts
    the exactly-marginal |lambda0| = max D_j case."""
    lam0 = complex(lambda0)
    rng = rng if rng is not None else np.random.default_rng(0)
    if not 0.0 < abs(lam0) < 1.0:
        raise DomainError("lambda0 must satisfy 0 < |lambda0| < 1")
    top = max(d_norm(j, y) for j in range(1, y.n))
    if abs(lam0) < top - band:
        raise InfeasibleError("|lambda0| is below the sup-norm bound")
    disc = _slice_core(y, lam0, band)
    _verify_endpoints(disc, lam0, y, 1e-9)
    if check_samples:
        _verify_range(disc, check_samples, rng, band)
    return disc


def extremal_disc(
    y: CPoint,
    band: float = BOUNDARY_BAND,
    rng: np.random.Generator | None = None,
    check_samples: int = 32,
) -> tuple[float, DiscFunction]:
    """The extremal analytic disc through 0 and y for a point of the slice
    J_n: lambda0 = max_j D_j(y) > 0 and psi(lambda0) = y exactly.

    With lambda0 at the sup-norm maximum the pair subproblem is usually
    exactly marginal; when a middle coordinate carries the maximum
    (possible for even n) it is strict instead.  Raises InfeasibleError
    when no certified disc exists at this lambda0 (|q| = lambda0, or a
    degenerate Takagi frame).
    """
    n = y.n
    rng = rng if rng is not None else np.random.default_rng(0)
    zero = ScalarSchur(kind="blaschke", const=0j)
    if max(abs(c) for c in y.coords) == 0.0:
        return 0.0, DiscFunction(kind="diagonal", n=n, swap=False, f=zero, g=zero)
    lam0 = max(d_norm(j, y) for j in range(1, n))
    if not lam0 < 1.0:
        raise DomainError("point is not strictly inside (sup-norm >= 1)")
    disc = _slice_core(y, complex(lam0), band)
    _verify_endpoints(disc, lam0, y, 1e-9)
    if check_samples:
        _verify_range(disc, check_samples, rng, band)
    return lam0, disc


# ---------------------------------------------------------------------------
# determinant identity regressions
# ---------------------------------------------------------------------------


def _rel(lhs: float | complex, rhs: float | complex) -> float:
    return abs(lhs - rhs) / (1.0 + abs(rhs))


def identity_regressions(
    trials: int, rng: np.random.Generator | None = None
) -> dict:
    """Numerical regressions of the six determinant/entry identities behind
    the feasibility analysis, on random strict problems (plus the worked
    data point shrunk to strictness).  Returns per-identity max relative
    deviations; inputs drawn degenerate are skipped and counted."""
    from .sampling import tilde_g_point

    if trials < 1:
        raise DomainError("need at least one trial")
    rng = rng if rng is not None else np.random.default_rng(0)
    worst = {k: 0.0 for k in ("det_pair", "det_scaled", "window_gap", "k_entry_11", "k_entry_22", "k_det_factorization")}
    skipped = 0
    evaluated = 0
    I = np.eye(2)

    def one_case(yv: CPoint, lam0: complex, nu: float, c: float):
        nonlocal evaluated
        y1, yn1, q = yv.y(1), yv.y(yv.n - 1), yv.q
        al = abs(lam0)
        knum = abs(y1 * yn1 - c * c * q)
        # det_pair: Z_j at nu = 1 (the |q|^2 term carries the 1/|lambda0|^2)
        Z1 = _z_nu_general(c, y1, yn1, q, lam0, 1.0)
        lhs = np.linalg.det(I - Z1.conj().T @ Z1).real
        rhs = (
            c * c
            - abs(y1) ** 2 / al**2
            - abs(yn1) ** 2
            - 2 * knum / al
            + c * c * abs(q) ** 2 / al**2
        ) / (c * c)
        worst["det_pair"] = max(worst["det_pair"], _rel(lhs, rhs))
        if c != 3.0:
            return
        # det_scaled..6 are recorded for the n = 3 normalization
        Z = _z_nu_general(3.0, y1, yn1, q, lam0, nu)
        det_direct = np.linalg.det(I - Z.conj().T @ Z).real
        det_closed = (
            1
            - abs(y1) ** 2 / (9 * al**2)
            - abs(yn1) ** 2 / 9
            + abs(q) ** 2 / al**2
            - knum / (9 * al) * (nu**2 + 1 / nu**2)
        )
        worst["det_scaled"] = max(worst["det_scaled"], _rel(det_direct, det_closed))
        x2 = _x2_general(3.0, y1, yn1, q, al)
        x1 = al / knum * (9 - abs(y1) ** 2 - abs(yn1) ** 2 / al**2 + 9 * abs(q) ** 2 / al**2)
        J = al * (9 - abs(yn1) ** 2) / knum
        worst["window_gap"] = max(
            worst["window_gap"],
            _rel(J + 1 / J - x2, 9 * abs(y1 - yn1.conjugate() * q) ** 2 / (al * (9 - abs(yn1) ** 2) * knum)),
        )
        if op_norm(Z) >= 1.0:
            return
        K = k_rho(Z, al)
        Kd = K * det_direct
        w = cmath.sqrt((y1 * yn1 - 9 * q) / (9 * lam0))
        e11 = 1 - abs(y1) ** 2 / 9 - abs(yn1) ** 2 / 9 + abs(q) ** 2 - knum / 9 * (al / nu**2 + nu**2 / al)
        e22 = -(al**2) + abs(y1) ** 2 / 9 + abs(yn1) ** 2 / 9 - abs(q) ** 2 / al**2 + knum / 9 * (
            nu**2 * al + 1 / (nu**2 * al)
        )
        e12 = (1 - al**2) * (w / nu + (q / lam0) * nu * w.conjugate())
        worst["k_entry_11"] = max(worst["k_entry_11"], _rel(Kd[0, 0], e11))
        worst["k_entry_22"] = max(worst["k_entry_22"], _rel(Kd[1, 1], e22), _rel(Kd[0, 1], e12))
        k_nu = knum / 9 * (nu**2 + 1 / nu**2)
        k1, k2 = knum / 9 * x1, knum / 9 * x2
        worst["k_det_factorization"] = max(
            worst["k_det_factorization"],
            _rel(np.linalg.det(Kd).real, -(k_nu - k1) * (k_nu - k2)),
        )
        evaluated += 1

    one_case(WORKED_FAMILY_TARGET.scale(0.9), WORKED_FAMILY_LAMBDA0, 1.0, 3.0)
    done = 0
    while done < trials:
        n = int(rng.choice([3, 3, 3, 4, 5]))
        yv = tilde_g_point(n, rng, margin=0.8)
        if abs(yv.y(1)) < abs(yv.y(n - 1)):
            yv = yv.swap()
        if degenerate_product(yv, 1) or abs(yv.y(1) * yv.y(n - 1) - binom(n, 1) ** 2 * yv.q) < 1e-6:
            skipped += 1
            done += 1
            continue
        d1v = d_norm(1, yv)
        if not d1v < 0.9:
            yv = yv.scale(0.5)
            d1v = d_norm(1, yv)
        lam0 = min(0.97, d1v * (1.1 + 0.5 * rng.random()) + 1e-3) * cmath.exp(
            2j * math.pi * rng.random()
        )
        if d_norm(1, yv) >= abs(lam0):
            skipped += 1
            done += 1
            continue
        x2 = _x2_general(float(binom(n, 1)), yv.y(1), yv.y(n - 1), yv.q, abs(lam0))
        nu = 1.0
        if x2 > 2.0 and n == 3:
            t1, t2 = _window_from_x2(x2)
            lo, hi = math.sqrt(t1), math.sqrt(t2)
            nu = lo + (hi - lo) * (0.2 + 0.6 * rng.random())
        one_case(yv, lam0, nu, float(binom(n, 1)))
        done += 1
    return {
        "trials": trials,
        "evaluated": evaluated,
        "skipped_degenerate": skipped,
        "max_rel_err": worst,
    }
