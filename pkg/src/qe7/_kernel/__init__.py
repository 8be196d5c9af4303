"""Breadth-first group-closure kernels.

Two interchangeable backends compute the same catalogs element for element:

* ``native``   - Cython extension, used when the compiled module importable;
* ``fallback`` - numpy implementation, always available.

Set QE7_KERNEL=native or QE7_KERNEL=fallback to force one.  QE7_THREADS caps
worker parallelism; both backends are sequential, so any cap >= 1 is honored.

Both expose:

``closure_u64(gen_rows, nrows)``
    Closure of GF(2) matrices.  A matrix is a uint64 code with row i stored
    in byte i (little end first); within a row, column j sits at bit
    (nrows-1-j).  Returns the codes in breadth-first discovery order,
    identity first.

``closure_i8(gens)``
    Closure of small integer matrices given as an (g, n, n) int8 array with
    n <= 8; every entry of every product must stay within [-8, 7].  Returns
    an (N, n, n) int8 array in breadth-first discovery order.
"""

import os

BACKEND: str


def max_threads() -> int:
    """Parallelism cap from QE7_THREADS (>= 1); kernels currently use 1."""
    raw = os.environ.get("QE7_THREADS", "").strip()
    if not raw:
        return 1
    n = int(raw)
    if n < 1:
        raise ValueError("QE7_THREADS must be a positive integer")
    return n


_requested = os.environ.get("QE7_KERNEL", "").strip().lower()
if _requested not in ("", "native", "fallback"):
    raise ImportError(f"unknown QE7_KERNEL value {_requested!r}")

if _requested in ("", "native"):
    try:
        from qe7._kernel._native import closure_i8, closure_u64

        BACKEND = "native"
    except ImportError:
        if _requested == "native":
            raise
        from qe7._kernel.fallback import closure_i8, closure_u64

        BACKEND = "fallback"
else:
    from qe7._kernel.fallback import closure_i8, closure_u64

    BACKEND = "fallback"

__all__ = ["closure_u64", "closure_i8", "BACKEND", "max_threads"]
