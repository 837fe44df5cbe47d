#!/usr/bin/env python3
"""Regenerate golden/chf.csv and golden/values.csv with mpmath at 40 significant digits.

Rows cover the 1F1 arguments exercised by the unit tests: small-|z| series
values, the shifted parameters used by the derivative identity, and
purely imaginary arguments y = -2i*omega*x out to |y| = 90.
values.csv holds named scalars built on top of 1F1 and log-gamma.
"""
import sys
from mpmath import mp, mpf, mpc, hyp1f1, loggamma, exp, sqrt, pi, expjpi

mp.dps = 40

ROWS = [
    # (a, b, z)
    (mpc(0.5, 0.0) * 1j, 0.5, mpc(0, -2)),
    (mpc(1, 1), 1.5, mpc(0, -1)),
    (mpc(1, 1), 2.5, mpc(0, -5)),      # a/b * this = d/dz 1F1(i, 3/2; -5i)
    (mpc(0, 1), 1.5, mpc(0, -5)),
    (mpc(0.3, 0.2), 1.5, mpc(4, -1)),
    (mpc(0, 0.5), 0.5, mpc(0, -60)),
    (mpc(0, 1), 0.5, mpc(0, -4)),
    (mpc(1, 1), 1.5, mpc(0, -4)),
    (mpc(0.5, 1), 0.5, mpc(0, -4)),
    (mpc(0.5, 1), 1.5, mpc(0, -4)),
    (mpc(0, 4), 0.5, mpc(0, -20)),
    (mpc(1, 4), 1.5, mpc(0, -20)),
    (mpc(0, 0.0625), 0.5, mpc(0, -80)),
    (mpc(1, 0.0625), 1.5, mpc(0, -80)),
    (mpc(0.5, 0.0625), 1.5, mpc(0, -80)),
    (mpc(0, 1), 0.5, mpc(0, -40)),
    (mpc(0.5, 1), 0.5, mpc(0, -40)),
    (mpc(0, 0.5), 0.5, mpc(0, -90)),
    (mpc(-2.5, 1.5), 0.5, mpc(-12, 3)),
    (mpc(2, -3), 1.5, mpc(15, 6)),
    (mpc(0.25, 0), 0.5, mpc(-18, 0)),
    (mpc(1, 0), 0.5, mpc(30, 0)),
]



def main(path):
    with open(path, "w", newline="\n") as out:
        out.write("a_re,a_im,b,z_re,z_im,f_re,f_im\n")
        for a, b, z in ROWS:
            a = mpc(a)
            z = mpc(z)
            f = hyp1f1(a, mpf(b), z)
            cols = [a.real, a.imag, mpf(b), z.real, z.imag, f.real, f.imag]
            out.write(",".join(mp.nstr(c, 20, strip_zeros=True) for c in cols) + "\n")


def rtilde2_a(m, w, x):
    """Second component, case a: C_II2 e^{-y/2} y^{1/2} 1F1(a2 + 1/2, 3/2; y)."""
    y = mpc(0, -2 * w * x)
    a1 = mpc(0, m * m / (2 * w))
    c = 2 * sqrt(2 * w) * expjpi(mpf(1) / 4) * a1 / m
    return c * exp(-y / 2) * sqrt(y) * hyp1f1(a1 + 1, mpf(3) / 2, y)


def z_branch_one(sign, m, w, x):
    y = mpc(0, -2 * w * x)
    a1 = mpc(0, m * m / (2 * w))
    c = 2 * sqrt(2 * w) * expjpi(mpf(3) / 4) * a1 / m
    inner = hyp1f1(a1, mpf(1) / 2, y) + sign * c * sqrt(y) * hyp1f1(a1 + 1, mpf(3) / 2, y)
    return expjpi(-mpf(1) / 4) * exp(-y / 2) * inner


VALUES = [
    ("rtilde2_a_m1_w0.5_x1", lambda: rtilde2_a(1, mpf(1) / 2, 1)),
    ("zI_plus_m1_w1_x2", lambda: z_branch_one(1, 1, 1, 2)),
    ("zI_minus_m2_w0.5_x3", lambda: z_branch_one(-1, 2, mpf(1) / 2, 3)),
    ("log_gamma_1+2i", lambda: loggamma(mpc(1, 2))),
    ("log_gamma_-1.5+0i", lambda: loggamma(mpc(-1.5, 0))),
    ("log_gamma_-3.3+4.1i", lambda: loggamma(mpc(-3.3, 4.1))),
    ("log_gamma_40-70i", lambda: loggamma(mpc(40, -70))),
]


def values(path):
    with open(path, "w", newline="\n") as out:
        out.write("name,re,im\n")
        for name, fn in VALUES:
            v = mpc(fn())
            out.write(f"{name},{mp.nstr(v.real, 20, strip_zeros=True)},{mp.nstr(v.imag, 20, strip_zeros=True)}\n")


if __name__ == "__main__":
    outdir = sys.argv[1] if len(sys.argv) > 1 else "golden"
    main(outdir + "/chf.csv")
    values(outdir + "/values.csv")
