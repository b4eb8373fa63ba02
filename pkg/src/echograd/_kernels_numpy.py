"""Pure-numpy line-sweep kernels (fallback backend).

Same arithmetic, element for element, as the numba kernels: the Thomas
recurrences run along the line axis with numpy vectorization across lines,
so per-line operation order matches the JIT path exactly.
"""

import numpy as np

# 6th-order tridiagonal interior stencil, 3rd/4th-order one-sided closures.
D1_A2 = 7.0 / 9.0     # a/2 with a = 14/9
D1_B4 = 1.0 / 36.0    # b/4 with b = 1/9


def tridiag_solve_lines(rhs, sub, cp, invd):
    """Solve the factored tridiagonal system along axis 1 of rhs, in place.

    rhs: (m, n) right-hand sides, overwritten with the solution.
    sub: (n,) subdiagonal; cp/invd: (n,) precomputed elimination factors.
    """
    n = rhs.shape[1]
    rhs[:, 0] = rhs[:, 0] * invd[0]
    for i in range(1, n):
        rhs[:, i] = (rhs[:, i] - sub[i] * rhs[:, i - 1]) * invd[i]
    for i in range(n - 2, -1, -1):
        rhs[:, i] = rhs[:, i] - cp[i] * rhs[:, i + 1]
    return rhs


def compact_d1_lines(f, out, invh, sub, cp, invd):
    """First derivative of each row of f (m, n) into out, spacing 1/invh."""
    n = f.shape[1]
    out[:, 0] = (-2.5 * f[:, 0] + 2.0 * f[:, 1] + 0.5 * f[:, 2]) * invh
    out[:, 1] = 0.75 * (f[:, 2] - f[:, 0]) * invh
    out[:, 2:n - 2] = (D1_A2 * (f[:, 3:n - 1] - f[:, 1:n - 3])
                       + D1_B4 * (f[:, 4:n] - f[:, 0:n - 4])) * invh
    out[:, n - 2] = 0.75 * (f[:, n - 1] - f[:, n - 3]) * invh
    out[:, n - 1] = (2.5 * f[:, n - 1] - 2.0 * f[:, n - 2] - 0.5 * f[:, n - 3]) * invh
    tridiag_solve_lines(out, sub, cp, invd)
    return out


def filter_lines(f, out, af, sub, cp, invd):
    """Low-pass compact filter of each row of f (m, n) into out.

    Interior rows use the 6th-order transfer function, the 2nd/3rd rows from
    each end drop to 4th/2nd order, and the first/last nodes pass through.
    """
    n = f.shape[1]
    a0_6 = (11.0 + 10.0 * af) / 16.0
    a1_6 = (15.0 + 34.0 * af) / 64.0   # already halved
    a2_6 = (-3.0 + 6.0 * af) / 32.0
    a3_6 = (1.0 - 2.0 * af) / 64.0
    a0_4 = 5.0 / 8.0 + 3.0 * af / 4.0
    a1_4 = (0.5 + af) / 2.0
    a2_4 = (-1.0 / 8.0 + af / 4.0) / 2.0
    a0_2 = 0.5 + af
    a1_2 = (0.5 + af) / 2.0

    out[:, 0] = f[:, 0]
    out[:, 1] = a0_2 * f[:, 1] + a1_2 * (f[:, 2] + f[:, 0])
    out[:, 2] = a0_4 * f[:, 2] + a1_4 * (f[:, 3] + f[:, 1]) + a2_4 * (f[:, 4] + f[:, 0])
    out[:, 3:n - 3] = (a0_6 * f[:, 3:n - 3]
                       + a1_6 * (f[:, 4:n - 2] + f[:, 2:n - 4])
                       + a2_6 * (f[:, 5:n - 1] + f[:, 1:n - 5])
                       + a3_6 * (f[:, 6:n] + f[:, 0:n - 6]))
    out[:, n - 3] = (a0_4 * f[:, n - 3] + a1_4 * (f[:, n - 2] + f[:, n - 4])
                     + a2_4 * (f[:, n - 1] + f[:, n - 5]))
    out[:, n - 2] = a0_2 * f[:, n - 2] + a1_2 * (f[:, n - 1] + f[:, n - 3])
    out[:, n - 1] = f[:, n - 1]
    tridiag_solve_lines(out, sub, cp, invd)
    return out
