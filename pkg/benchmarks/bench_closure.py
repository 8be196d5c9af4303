#!/usr/bin/env python3
"""Compare the native and fallback closure kernels on the library's groups.

Usage:
    python benchmarks/bench_closure.py [--full]

--full adds the W(E7) closure (2.9M elements), which takes a while on the
fallback backend.
"""

import argparse
import time

import numpy as np

from qe7._kernel import fallback
from qe7.e7_delpezzo import cartan_matrix, simple_reflection_matrices
from qe7.f2sym import DIAGRAM_LABELS, QuadLabel, SympVector, all_vectors, quad_eval, transvection_matrix

try:
    from qe7._kernel import _native
except ImportError:
    _native = None


def _reflections(rows):
    c = np.array(rows, dtype=np.int8)
    n = c.shape[0]
    eye = np.eye(n, dtype=np.int8)
    return np.array([eye - np.outer(eye[i], c[i]) for i in range(n)])


def tasks(full: bool):
    yield (
        "Sp(4,F2), 15 transvections",
        "u64",
        [transvection_matrix(v).rows for v in all_vectors(2) if not v.is_zero()],
        4,
        720,
    )
    yield (
        "Sp(6,F2), 7 transvections",
        "u64",
        [transvection_matrix(v).rows for v in DIAGRAM_LABELS],
        6,
        1451520,
    )
    q = QuadLabel(SympVector.from_string("101:110"))
    yield (
        "O(odd form), 36 transvections",
        "u64",
        [
            transvection_matrix(v).rows
            for v in all_vectors(3)
            if not v.is_zero() and quad_eval(q, v) == 1
        ],
        6,
        51840,
    )
    e6 = [row[:6] for row in cartan_matrix()[:6]]
    yield ("W(E6), 6 reflections", "i8", _reflections(e6), None, 51840)
    if full:
        yield ("W(E7), 7 reflections", "i8", simple_reflection_matrices(), None, 2903040)


def run(backend, kind, gens, nrows):
    t0 = time.perf_counter()
    if kind == "u64":
        out = backend.closure_u64(gens, nrows)
        size = out.size
    else:
        out = backend.closure_i8(gens)
        size = out.shape[0]
    return time.perf_counter() - t0, size


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include W(E7)")
    args = parser.parse_args()

    backends = [("fallback", fallback)]
    if _native is not None:
        backends.insert(0, ("native", _native))
    else:
        print("note: native kernel not built; timing fallback only\n")

    header = f"{'task':<34} {'order':>9}"
    for name, _ in backends:
        header += f" {name + ' (s)':>14}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))

    for name, kind, gens, nrows, want in tasks(args.full):
        times = []
        for _, backend in backends:
            dt, size = run(backend, kind, gens, nrows)
            assert size == want, f"{name}: got order {size}, expected {want}"
            times.append(dt)
        line = f"{name:<34} {want:>9}"
        for dt in times:
            line += f" {dt:>14.3f}"
        if len(times) == 2 and times[0] > 0:
            line += f" {times[1] / times[0]:>8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
