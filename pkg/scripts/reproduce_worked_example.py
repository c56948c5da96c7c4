#!/usr/bin/env python3
"""Reproduce every number attached to the worked data point
y = (3/2, 3/4, 1/2), lambda0 = -4/5, and print a few members of the
infinite interpolation family through it."""

import math

from polydisc import (
    WORKED_FAMILY_LAMBDA0,
    WORKED_FAMILY_TARGET,
    carath_lower,
    dist_formula,
    worked_family,
    herm_eig,
    lempert_upper,
    mat2,
    mobius_dist,
    np2,
    op_norm,
)
from polydisc.mobius import d_norm

y = WORKED_FAMILY_TARGET
lam0 = WORKED_FAMILY_LAMBDA0

print("target point      :", y.coords)
print("lambda0           :", lam0)
print("D_1(y)            : %.15f   (expected 4/5)" % d_norm(1, y))
print("D_2(y)            : %.15f   (expected 1/2)" % d_norm(2, y))

w2 = (y.y(1) * y.y(2) - 9 * y.q) / (9 * lam0)
print("w^2               : %.15f   (expected 15/32 = %.15f)" % (w2.real, 15 / 32))
w = math.sqrt(w2.real)
Zy = mat2(-5 / 8, w, w, 1 / 4)
print("||Z_y||           : %.15f   (expected 1)" % op_norm(Zy))
eig = herm_eig(Zy)
print("eigenvalues       : %.15f, %.15f   (expected -1, 5/8)" % (eig.lam_min, eig.lam_max))
print("d(3/10, 5/8)      : %.15f   (expected 2/5)" % mobius_dist(0.3, 0.625))

print("\ninvariant distance from 0:")
print("  closed form     : %.15f   (= atanh 4/5)" % dist_formula(y))
lower, j, om = carath_lower(y, grid=8192)
print("  Caratheodory >= : %.15f   (witness j=%d, omega=%.4f%+.4fi)"
      % (lower, j, om.real, om.imag))
upper, disc = lempert_upper(y)
print("  Lempert      <= : %.15f   (disc kind: %s)" % (upper, disc.kind))

print("\nfamily members psi_t (all through (0,0,0) and (lambda0, y)), at probe 1/3:")
for t in (-0.8, -0.3, 0.0, 0.3, 0.8):
    g = np2(0.0, 0.3, -0.8, 0.625, t=t)
    psi = worked_family(g)
    val = psi(1.0 / 3.0)
    print("  t=%5.2f -> psi(1/3) = (%.6f%+.6fi, %.6f%+.6fi, %.6f%+.6fi)" % (
        t, val.coords[0].real, val.coords[0].imag,
        val.coords[1].real, val.coords[1].imag,
        val.coords[2].real, val.coords[2].imag,
    ))
