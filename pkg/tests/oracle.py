"""Independent high-precision reference formulas (mpmath, Shannon form).

Shares no code with the package kernels.
"""
import mpmath as mp

mp.mp.dps = 40

K_B = mp.mpf("1.380649e-23")
MU_B = mp.mpf("9.274e-24")


def gap(b):
    return 2 * MU_B * mp.mpf(b)


def x(gap_j, t):
    return mp.mpf(gap_j) / (K_B * mp.mpf(t))


def population(xv):
    return 1 / (1 + mp.e ** mp.mpf(xv))


def entropy_red(xv):
    p = population(xv)
    return -(p * mp.log(p) + (1 - p) * mp.log(1 - p))


def energy(gap_j, t):
    return mp.mpf(gap_j) * (population(x(gap_j, t)) - mp.mpf(1) / 2)


def entropy(gap_j, t):
    return K_B * entropy_red(x(gap_j, t))


def massieu(gap_j, t):
    return entropy(gap_j, t) - energy(gap_j, t) / mp.mpf(t)
