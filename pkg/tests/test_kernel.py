"""Backend parity and determinism of the closure kernels."""

import numpy as np
import pytest

from qe7._kernel import BACKEND, closure_i8, closure_u64, fallback, max_threads
from qe7.f2sym import all_vectors, transvection_matrix

try:
    from qe7._kernel import _native
except ImportError:
    _native = None

BACKENDS = [fallback] + ([_native] if _native else [])


def _transvection_rows(k):
    return [transvection_matrix(v).rows for v in all_vectors(k) if not v.is_zero()]


def _a3_reflections():
    cartan = 2 * np.eye(3, dtype=np.int8)
    for i, j in ((0, 1), (1, 2)):
        cartan[i, j] = cartan[j, i] = -1
    eye = np.eye(3, dtype=np.int8)
    return np.array([eye - np.outer(eye[i], cartan[i]) for i in range(3)])


@pytest.mark.parametrize("backend", BACKENDS)
def test_u64_orders(backend):
    assert backend.closure_u64(_transvection_rows(1), 2).size == 6
    assert backend.closure_u64(_transvection_rows(2), 4).size == 720


def test_u64_backend_parity():
    if _native is None:
        pytest.skip("native kernel not built")
    rows = _transvection_rows(2)
    a = _native.closure_u64(rows, 4)
    b = fallback.closure_u64(rows, 4)
    assert a.shape == b.shape
    assert (a == b).all()


def test_u64_identity_first():
    codes = closure_u64(_transvection_rows(1), 2)
    ident = (0b10 << 0) | (0b01 << 8)
    assert int(codes[0]) == ident
    assert len(set(map(int, codes))) == codes.size


@pytest.mark.parametrize("backend", BACKENDS)
def test_i8_weyl_a3(backend):
    out = backend.closure_i8(_a3_reflections())
    assert out.shape == (24, 3, 3)
    assert (out[0] == np.eye(3, dtype=np.int8)).all()


def test_i8_backend_parity():
    if _native is None:
        pytest.skip("native kernel not built")
    gens = _a3_reflections()
    a = _native.closure_i8(gens)
    b = fallback.closure_i8(gens)
    assert a.shape == b.shape
    assert (a == b).all()


@pytest.mark.parametrize("backend", BACKENDS)
def test_i8_entry_range_guard(backend):
    runaway = np.array([[[2]]], dtype=np.int8)
    with pytest.raises(OverflowError):
        backend.closure_i8(runaway)


def test_backend_selection_exposed():
    assert BACKEND in ("native", "fallback")
    assert max_threads() >= 1
