"""Kernel backend selection.

Hot line-sweep kernels (compact derivative, compact filter, batched
tridiagonal solves) exist twice: a numba @njit implementation and a pure
numpy one with identical arithmetic.  The active backend is chosen once per
process from the environment:

    ECHOGRAD_BACKEND=numba   use JIT kernels (default when numba imports)
    ECHOGRAD_BACKEND=numpy   force the pure-numpy path

Worker count is controlled with set_threads() / the CLI --threads flag and
only affects the numba path.  Per-line arithmetic is sequential and lines
are independent, so results are bit-identical for any thread count.
"""

import os

# Allow oversubscription so --threads 4 works on small containers; must be
# set before numba is first imported.
os.environ.setdefault("NUMBA_NUM_THREADS", str(max(4, os.cpu_count() or 1)))

_BACKEND = None
_KERNELS = None


def _select():
    global _BACKEND, _KERNELS
    if _BACKEND is not None:
        return
    requested = os.environ.get("ECHOGRAD_BACKEND", "").strip().lower()
    if requested not in ("", "numba", "numpy"):
        raise ValueError(f"ECHOGRAD_BACKEND must be 'numba' or 'numpy', got {requested!r}")
    if requested != "numpy":
        try:
            from . import _kernels_numba as kmod
            _BACKEND, _KERNELS = "numba", kmod
            return
        except ImportError:
            if requested == "numba":
                raise
    from . import _kernels_numpy as kmod
    _BACKEND, _KERNELS = "numpy", kmod


def backend_name() -> str:
    _select()
    return _BACKEND


def kernels():
    """Module with tridiag_solve_lines / compact_d1_lines / filter_lines."""
    _select()
    return _KERNELS


def set_threads(n: int) -> None:
    if n < 1:
        raise ValueError("thread count must be >= 1")
    if backend_name() == "numba":
        import numba

        numba.set_num_threads(min(n, int(os.environ["NUMBA_NUM_THREADS"])))


def thread_count() -> int:
    if backend_name() == "numba":
        import numba

        return numba.get_num_threads()
    return 1
