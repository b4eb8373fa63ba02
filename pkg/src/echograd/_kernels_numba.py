"""Numba line-sweep kernels (default backend).

One prange iteration per grid line; each line runs the same sequential
recurrence as the numpy fallback, so outputs do not depend on the thread
count and agree with the fallback bit for bit.
"""

import numba
import numpy as np
from numba import njit, prange

D1_A2 = 7.0 / 9.0
D1_B4 = 1.0 / 36.0


@njit(cache=True, parallel=True)
def tridiag_solve_lines(rhs, sub, cp, invd):
    m, n = rhs.shape
    for j in prange(m):
        rhs[j, 0] = rhs[j, 0] * invd[0]
        for i in range(1, n):
            rhs[j, i] = (rhs[j, i] - sub[i] * rhs[j, i - 1]) * invd[i]
        for i in range(n - 2, -1, -1):
            rhs[j, i] = rhs[j, i] - cp[i] * rhs[j, i + 1]
    return rhs


@njit(cache=True, parallel=True)
def compact_d1_lines(f, out, invh, sub, cp, invd):
    m, n = f.shape
    for j in prange(m):
        out[j, 0] = (-2.5 * f[j, 0] + 2.0 * f[j, 1] + 0.5 * f[j, 2]) * invh
        out[j, 1] = 0.75 * (f[j, 2] - f[j, 0]) * invh
        for i in range(2, n - 2):
            out[j, i] = (D1_A2 * (f[j, i + 1] - f[j, i - 1])
                         + D1_B4 * (f[j, i + 2] - f[j, i - 2])) * invh
        out[j, n - 2] = 0.75 * (f[j, n - 1] - f[j, n - 3]) * invh
        out[j, n - 1] = (2.5 * f[j, n - 1] - 2.0 * f[j, n - 2] - 0.5 * f[j, n - 3]) * invh
        # fused Thomas solve
        out[j, 0] = out[j, 0] * invd[0]
        for i in range(1, n):
            out[j, i] = (out[j, i] - sub[i] * out[j, i - 1]) * invd[i]
        for i in range(n - 2, -1, -1):
            out[j, i] = out[j, i] - cp[i] * out[j, i + 1]
    return out


@njit(cache=True, parallel=True)
def filter_lines(f, out, af, sub, cp, invd):
    m, n = f.shape
    a0_6 = (11.0 + 10.0 * af) / 16.0
    a1_6 = (15.0 + 34.0 * af) / 64.0
    a2_6 = (-3.0 + 6.0 * af) / 32.0
    a3_6 = (1.0 - 2.0 * af) / 64.0
    a0_4 = 5.0 / 8.0 + 3.0 * af / 4.0
    a1_4 = (0.5 + af) / 2.0
    a2_4 = (-1.0 / 8.0 + af / 4.0) / 2.0
    a0_2 = 0.5 + af
    a1_2 = (0.5 + af) / 2.0
    for j in prange(m):
        out[j, 0] = f[j, 0]
        out[j, 1] = a0_2 * f[j, 1] + a1_2 * (f[j, 2] + f[j, 0])
        out[j, 2] = a0_4 * f[j, 2] + a1_4 * (f[j, 3] + f[j, 1]) + a2_4 * (f[j, 4] + f[j, 0])
        for i in range(3, n - 3):
            out[j, i] = (a0_6 * f[j, i]
                         + a1_6 * (f[j, i + 1] + f[j, i - 1])
                         + a2_6 * (f[j, i + 2] + f[j, i - 2])
                         + a3_6 * (f[j, i + 3] + f[j, i - 3]))
        out[j, n - 3] = (a0_4 * f[j, n - 3] + a1_4 * (f[j, n - 2] + f[j, n - 4])
                         + a2_4 * (f[j, n - 1] + f[j, n - 5]))
        out[j, n - 2] = a0_2 * f[j, n - 2] + a1_2 * (f[j, n - 1] + f[j, n - 3])
        out[j, n - 1] = f[j, n - 1]
        # fused Thomas solve
        out[j, 0] = out[j, 0] * invd[0]
        for i in range(1, n):
            out[j, i] = (out[j, i] - sub[i] * out[j, i - 1]) * invd[i]
        for i in range(n - 2, -1, -1):
            out[j, i] = out[j, i] - cp[i] * out[j, i + 1]
    return out
