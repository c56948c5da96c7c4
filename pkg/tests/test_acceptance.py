"""Acceptance gate: every criterion at its stated tolerance, one line each.

Run as `pytest tests/test_acceptance.py -v -s` to see the per-criterion
PASS/FAIL lines with timings.
"""

import math
import sys
import time

import numpy as np

from polydisc.clinalg import herm_eig, mat2, op_norm
from polydisc.distances import carath_lower, dist_formula, lempert_upper, mobius_dist
from polydisc.geometry import (
    noncircular_witness,
    nonconvex_witness,
    separating_polynomial,
)
from polydisc.interpolation import (
    identity_regressions,
    build_interpolant,
    worked_family,
    np2,
    nu_window,
    _z_nu_general,
)
from polydisc.membership import (
    costara_sup,
    in_b_gamma,
    in_g,
    in_gamma,
    in_tilde_g,
    in_tilde_gamma,
    symmetrize,
)
from polydisc.mobius import CPoint, d_norm, sup_on_torus
from polydisc.sampling import (
    exterior_point,
    g_point_disc,
    j_point,
    near_boundary_point,
    tilde_g_point,
    torus_point,
    unit_disc,
)
from polydisc.schwarz import SchwarzProblem, check_condition

BAND = 1e-7
WORKED_POINT = CPoint((1.5, 0.75, 0.5))
GAP_POINT = CPoint((2.5, 1.25, 0.5))


class _Gate:
    def __init__(self, num: int, label: str, limit: float | None = None):
        self.num, self.label, self.limit = num, label, limit

    def __enter__(self):
        self.t0 = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        if self.limit is not None and elapsed > self.limit and status == "PASS":
            status = "FAIL(time)"
        print(
            f"ACCEPTANCE {self.num:02d} [{status}] {self.label} ({elapsed:.2f}s)",
            file=sys.stderr,
        )
        if status == "FAIL(time)":
            raise AssertionError(
                f"criterion {self.num} exceeded its time limit: "
                f"{elapsed:.2f}s > {self.limit}s"
            )
        return False


def test_criterion_01_strict_inclusion_regression():
    with _Gate(1, "strict inclusion at (5/2, 5/4, 1/2)", limit=1.0):
        assert in_tilde_g(GAP_POINT).verdict
        assert not in_g(GAP_POINT).verdict
        sup = costara_sup(GAP_POINT, grid=4096)
        assert not sup < 1.0
        assert math.isinf(sup)  # frozen regression value: interior pole


def test_criterion_02_membership_equivalence_suites():
    with _Gate(2, "condition equivalences, 1e4 x n in 2..6", limit=60.0):
        rng = np.random.default_rng(2024)
        for n in range(2, 7):
            for _ in range(10_000):
                u = rng.random()
                if u < 0.4:
                    y = tilde_g_point(n, rng)
                elif u < 0.8:
                    y = exterior_point(n, rng)
                else:
                    y = near_boundary_point(n, rng, spread=1e-6)
                for rep in (
                    in_tilde_g(y, "ALL", BAND),
                    in_tilde_gamma(y, "ALL", BAND),
                ):
                    margins = rep.per_condition
                    if any(abs(m.slack) <= BAND for m in margins):
                        continue
                    assert len({m.holds for m in margins}) == 1, (n, y.coords)


def test_criterion_03_d_norm_oracle_agreement():
    with _Gate(3, "closed-form D_j vs torus sup, 1e3 cases"):
        assert abs(d_norm(1, WORKED_POINT) - 0.8) <= 1e-12
        rng = np.random.default_rng(3)
        done = 0
        while done < 1000:
            n = int(rng.integers(2, 7))
            y = tilde_g_point(n, rng)
            j = int(rng.integers(1, n))
            if abs(y.y(n - j)) > 0.9 * math.comb(n, j):
                continue
            assert abs(d_norm(j, y) - sup_on_torus(j, y, 8192)) <= 1e-4
            done += 1


def test_criterion_04_schwarz_equivalence():
    with _Gate(4, "Schwarz conditions 3,4,6-11 agree, 1e3 x n in 3..5", limit=120.0):
        rng = np.random.default_rng(4)
        for n in (3, 4, 5):
            done = 0
            while done < 1000:
                y = tilde_g_point(n, rng, margin=0.85)
                al = 0.1 + 0.85 * rng.random()
                try:
                    p = SchwarzProblem(
                        lambda0=al * np.exp(2j * np.pi * rng.random()), target=y
                    )
                except Exception:
                    continue
                done += 1
                margins = {
                    c: check_condition(p, c, band=BAND)
                    for c in (3, 4, 6, 7, 8, 9, 10, 11)
                }
                if any(abs(m.slack) <= BAND for m in margins.values()):
                    continue
                assert len({m.holds for m in margins.values()}) == 1, p.to_json()
                m2 = check_condition(p, 2, band=BAND)
                if m2.holds:
                    assert all(m.holds for m in margins.values()), p.to_json()


def test_criterion_05_worked_family_reproduction():
    with _Gate(5, "worked family: constants to 1e-12, 8 distinct members"):
        lam0 = -0.8
        w2 = (WORKED_POINT.y(1) * WORKED_POINT.y(2) - 9 * WORKED_POINT.q) / (9 * lam0)
        assert abs(w2 - 15.0 / 32.0) <= 1e-12
        w = math.sqrt(15.0 / 32.0)
        Zy = mat2(-0.625, w, w, 0.25)
        eig = herm_eig(Zy)
        assert abs(eig.lam_min + 1.0) <= 1e-12
        assert abs(eig.lam_max - 0.625) <= 1e-12
        assert abs(op_norm(Zy) - 1.0) <= 1e-12
        assert abs(mobius_dist(0.3, 0.625) - 0.4) <= 1e-12
        rng = np.random.default_rng(5)
        ts = np.linspace(-0.84, 0.84, 8)
        discs = []
        for t in ts:
            g = np2(0.0, 0.3, -0.8, 0.625, t=float(t))
            assert abs(g(0.0) - 0.3) <= 1e-12 and abs(g(-0.8) - 0.625) <= 1e-12
            psi = worked_family(g)
            assert max(abs(c) for c in psi(0.0).coords) <= 1e-10
            assert (
                max(abs(a - b) for a, b in zip(psi(lam0).coords, WORKED_POINT.coords)) <= 1e-10
            )
            for _ in range(100):
                lam = unit_disc(rng, 0.999)
                F = psi.core(lam)
                det = F[0, 0] * F[1, 1] - F[0, 1] * F[1, 0]
                assert abs(det + lam * g(lam)) <= 1e-11
            discs.append(psi)
        probe = 1.0 / 3.0
        vals = [d(probe).coords[2] for d in discs]
        for i in range(8):
            for k in range(i + 1, 8):
                assert abs(vals[i] - vals[k]) >= 1e-6
        for d in discs:
            for _ in range(125):
                lam = unit_disc(rng, 0.999)
                assert in_tilde_gamma(d(lam), cond="C7", band=1e-9).verdict


def test_criterion_06_constructive_interpolation():
    with _Gate(6, "200 strict problems: endpoints 1e-9, range, nu dichotomy"):
        rng = np.random.default_rng(6)
        done = 0
        while done < 200:
            y = tilde_g_point(3, rng, margin=0.85)
            ys = y if abs(y.y(2)) <= abs(y.y(1)) else y.swap()
            if abs(ys.y(1) * ys.y(2) - 9 * ys.q) < 1e-3:
                continue
            d1 = d_norm(1, ys)
            if not 1e-3 < d1 < 0.9:
                continue
            al = min(0.97, d1 * (1.05 + 0.4 * rng.random()))
            if al <= d1 + 1e-6:
                continue
            lam0 = al * np.exp(2j * np.pi * rng.random())
            disc = build_interpolant(y, lam0, rng=rng)
            assert max(abs(c) for c in disc(0.0).coords) <= 1e-9
            assert (
                max(abs(a - b) for a, b in zip(disc(lam0).coords, y.coords)) <= 1e-9
            )
            for _ in range(32):
                lam = unit_disc(rng, 0.98)
                assert in_tilde_gamma(disc(lam), cond="C7", band=1e-9).verdict
            t1, t2 = nu_window(ys, lam0)
            for k in range(16):
                inside = t1 + (t2 - t1) * (k + 0.5) / 16.0
                Z = _z_nu_general(
                    3.0, ys.y(1), ys.y(2), ys.q, lam0, math.sqrt(inside)
                )
                assert op_norm(Z) < 1.0
            for fac in (0.98, 0.5, 1.02, 2.0, 0.1, 10.0, 0.9, 1.1):
                for edge in (t1, t2):
                    nu2 = edge * fac
                    if t1 < nu2 < t2:
                        continue
                    Z = _z_nu_general(
                        3.0, ys.y(1), ys.y(2), ys.q, lam0, math.sqrt(nu2)
                    )
                    assert op_norm(Z) >= 1.0
            done += 1


def test_criterion_07_determinant_identities():
    with _Gate(7, "determinant identities to 1e-9 on 1e3 inputs + worked point"):
        rep = identity_regressions(1000, rng=np.random.default_rng(7))
        assert rep["evaluated"] >= 500
        assert max(rep["max_rel_err"].values()) <= 1e-9


def test_criterion_08_distance_pinch():
    with _Gate(8, "pinch on 200 J_n points x n in 2,3,5"):
        assert abs(dist_formula(WORKED_POINT) - math.atanh(0.8)) <= 1e-12
        rng = np.random.default_rng(8)
        for n in (2, 3, 5):
            done = 0
            while done < 200:
                y = j_point(n, rng)
                top = max(d_norm(j, y) for j in range(1, n))
                if not 0.05 < top < 0.95 or abs(y.q) > top - 1e-3:
                    continue
                closed = dist_formula(y)
                lower, _, _ = carath_lower(y, grid=8192)
                upper, disc = lempert_upper(y)
                assert disc is not None, (n, y.coords)
                assert lower <= closed + 1e-9
                assert closed <= upper + 1e-9
                assert upper - closed <= 1e-9
                assert upper - lower <= 1e-4
                done += 1


def test_criterion_09_geometric_witnesses():
    with _Gate(9, "witnesses n in 2..8 + 100 separating certificates"):
        for n in range(2, 9):
            a, b, c = nonconvex_witness(n)
            assert in_tilde_gamma(a, cond="C7").verdict
            assert in_tilde_gamma(b, cond="C7").verdict
            assert not in_tilde_gamma(c, cond="C7").verdict
            yy, iy = noncircular_witness(n)
            assert in_tilde_gamma(yy, cond="C7").verdict
            assert not in_tilde_gamma(iy, cond="C7").verdict
        rng = np.random.default_rng(9)
        for k in range(100):
            n = int(rng.integers(2, 6))
            y = exterior_point(n, rng)
            poly = separating_polynomial(y, samples=1000, rng=rng)
            assert poly.value_at_target > 1.0
            assert poly.sup_bound <= 1.0 + 1e-9


def test_criterion_10_forward_oracle_soundness():
    with _Gate(10, "1e5 symmetrized points pass membership", limit=30.0):
        rng = np.random.default_rng(10)
        per = -(-100_000 // (4 * 3))  # ceil: the total must reach 1e5
        checked = 0
        for n in (2, 3, 4, 5):
            for _ in range(per):
                s = symmetrize(g_point_disc(n, rng, rmax=0.95))
                assert in_g(s).verdict, s.coords
                s = symmetrize(g_point_disc(n, rng, rmax=1.0))
                assert in_gamma(s).verdict, s.coords
                s = symmetrize([torus_point(rng) for _ in range(n)])
                assert in_b_gamma(s), s.coords
                checked += 3
        assert checked >= 100_000
