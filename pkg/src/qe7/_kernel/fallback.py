"""Numpy implementation of the closure kernels.

Matches the native backend output exactly: breadth-first levels, children
generated in (element, generator) order, first occurrence kept.
"""

from __future__ import annotations

import numpy as np

_U64 = np.dtype("<u8")
_SLAB = 1 << 16


def _row_table(rows: tuple[int, ...], nrows: int) -> np.ndarray:
    """Map an 8-bit row pattern r to the packed row r * G."""
    tab = np.zeros(256, dtype=np.uint8)
    for r in range(1 << nrows):
        acc = 0
        for j in range(nrows):
            if (r >> (nrows - 1 - j)) & 1:
                acc ^= rows[j]
        tab[r] = acc
    return tab


def _pack_rows(rows, nrows: int) -> int:
    code = 0
    for i in range(nrows):
        code |= int(rows[i]) << (8 * i)
    return code


def closure_u64(gen_rows, nrows: int) -> np.ndarray:
    """Breadth-first closure of packed GF(2) matrices."""
    if not 1 <= nrows <= 8:
        raise ValueError("nrows must be in 1..8")
    tabs = [_row_table(tuple(rows), nrows) for rows in gen_rows]
    ident = _pack_rows([1 << (nrows - 1 - i) for i in range(nrows)], nrows)

    frontier = np.array([ident], dtype=_U64)
    levels = [frontier]
    seen = frontier.copy()
    while frontier.size:
        byts = frontier.view(np.uint8).reshape(-1, 8)
        cand = np.empty((frontier.size, len(tabs)), dtype=_U64)
        for gi, tab in enumerate(tabs):
            cand[:, gi] = tab[byts].view(_U64).ravel()
        uniq, first = np.unique(cand.ravel(), return_index=True)
        pos = np.searchsorted(seen, uniq)
        pos = np.minimum(pos, seen.size - 1)
        fresh = seen[pos] != uniq
        new, idx = uniq[fresh], first[fresh]
        frontier = new[np.argsort(idx, kind="stable")]
        if frontier.size:
            levels.append(frontier)
            seen = np.concatenate([seen, new])
            seen.sort()
    return np.concatenate(levels)


def _pack_key_bytes(mats: np.ndarray) -> bytes:
    """Nibble-pack (N, n, n) int8 matrices into 32-byte hash keys."""
    flat = (mats.reshape(mats.shape[0], -1).astype(np.int16) + 8).astype("<u8")
    words = np.zeros((mats.shape[0], 4), dtype="<u8")
    for j in range(flat.shape[1]):
        words[:, j >> 4] |= flat[:, j] << np.uint64(4 * (j & 15))
    return words.tobytes()


def closure_i8(gens) -> np.ndarray:
    """Breadth-first closure of small integer matrices.

    Products and key packing are vectorized per slab; dedup walks the slab
    keys in candidate order so first occurrence wins, as in the native
    backend.  Rows are copied out of each slab so no product block outlives
    its loop iteration.
    """
    gens = np.ascontiguousarray(gens, dtype=np.int8)
    if gens.ndim != 3 or gens.shape[1] != gens.shape[2]:
        raise ValueError("generators must be a (g, n, n) array")
    n = gens.shape[1]
    if n > 8:
        raise ValueError("matrix size must be at most 8")
    gens16 = gens.astype(np.int16)

    frontier = np.eye(n, dtype=np.int8)[None, :, :]
    levels = [frontier]
    seen = {_pack_key_bytes(frontier)}
    while frontier.size:
        fresh: list[np.ndarray] = []
        for lo in range(0, frontier.shape[0], _SLAB):
            slab = frontier[lo : lo + _SLAB].astype(np.int16)
            prods = np.matmul(slab[:, None, :, :], gens16[None, :, :, :])
            if prods.min() < -8 or prods.max() > 7:
                raise OverflowError("matrix entries left the supported range")
            prods = prods.astype(np.int8).reshape(-1, n, n)
            buf = _pack_key_bytes(prods)
            new_idx = []
            for i in range(prods.shape[0]):
                key = buf[32 * i : 32 * i + 32]
                if key not in seen:
                    seen.add(key)
                    new_idx.append(i)
            if new_idx:
                fresh.append(prods[np.array(new_idx)])
        frontier = (
            np.concatenate(fresh) if fresh else np.empty((0, n, n), np.int8)
        )
        if frontier.size:
            levels.append(frontier)
    return np.concatenate(levels)
