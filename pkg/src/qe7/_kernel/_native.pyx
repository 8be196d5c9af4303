# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Native closure kernels; see qe7._kernel for the interface contract.

Both closures run a FIFO breadth-first search with an open-addressing hash
set for dedup, so the discovery order matches the fallback backend exactly.
"""

from libc.stdint cimport int8_t, int64_t, uint8_t, uint64_t

import numpy as np


cdef inline uint64_t _mix(uint64_t x) noexcept nogil:
    x += <uint64_t>0x9E3779B97F4A7C15
    x = (x ^ (x >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    x = (x ^ (x >> 27)) * <uint64_t>0x94D049BB133111EB
    return x ^ (x >> 31)


def closure_u64(gen_rows, int nrows):
    """Breadth-first closure of packed GF(2) matrices (row i in byte i)."""
    if not 1 <= nrows <= 8:
        raise ValueError("nrows must be in 1..8")
    cdef int g = len(gen_rows)
    if g == 0:
        raise ValueError("need at least one generator")

    # Right multiplication by a fixed generator maps each row independently:
    # table[r] = packed bits of the row-vector r times the generator.
    tabs_np = np.zeros((g, 256), dtype=np.uint8)
    cdef int gi, j, r, acc
    for gi, rows in enumerate(gen_rows):
        rows = list(rows)
        for r in range(1 << nrows):
            acc = 0
            for j in range(nrows):
                if (r >> (nrows - 1 - j)) & 1:
                    acc ^= rows[j]
            tabs_np[gi, r] = acc
    cdef uint8_t[:, ::1] tabs = tabs_np

    cdef uint64_t ident = 0
    cdef int i
    for i in range(nrows):
        ident |= (<uint64_t>1 << (nrows - 1 - i)) << (8 * i)

    cdef uint64_t cap = 1 << 12
    elems_np = np.empty(cap, dtype=np.uint64)
    cdef uint64_t[::1] elems = elems_np

    cdef uint64_t tcap = 1 << 14
    table_np = np.zeros(tcap, dtype=np.uint64)  # 0 marks an empty slot
    cdef uint64_t[::1] table = table_np
    cdef uint64_t tmask = tcap - 1

    cdef uint64_t count = 0, head = 0
    cdef uint64_t code, child, slot, cur, old_tcap
    cdef uint64_t idx

    # seed with the identity
    table[_mix(ident) & tmask] = ident
    elems[0] = ident
    count = 1

    while head < count:
        code = elems[head]
        head += 1
        for gi in range(g):
            child = 0
            for i in range(nrows):
                child |= (<uint64_t>tabs[gi, (code >> (8 * i)) & 0xFF]) << (8 * i)
            slot = _mix(child) & tmask
            while True:
                cur = table[slot]
                if cur == child:
                    break
                if cur == 0:
                    table[slot] = child
                    if count == cap:
                        cap *= 2
                        new_elems_np = np.empty(cap, dtype=np.uint64)
                        new_elems_np[:count] = elems_np[:count]
                        elems_np = new_elems_np
                        elems = elems_np
                    elems[count] = child
                    count += 1
                    if count * 2 >= tcap:
                        old_tcap = tcap
                        tcap *= 2
                        table_np = np.zeros(tcap, dtype=np.uint64)
                        table = table_np
                        tmask = tcap - 1
                        for idx in range(count):
                            cur = elems[idx]
                            slot = _mix(cur) & tmask
                            while table[slot] != 0:
                                slot = (slot + 1) & tmask
                            table[slot] = cur
                    break
                slot = (slot + 1) & tmask
    return elems_np[:count].copy()


def closure_i8(gens):
    """Breadth-first closure of small integer matrices (entries in [-8, 7])."""
    gens_np = np.ascontiguousarray(gens, dtype=np.int8)
    if gens_np.ndim != 3 or gens_np.shape[1] != gens_np.shape[2]:
        raise ValueError("generators must be a (g, n, n) array")
    cdef int g = gens_np.shape[0]
    cdef int n = gens_np.shape[1]
    if n > 8:
        raise ValueError("matrix size must be at most 8")
    cdef int nn = n * n
    cdef int8_t[:, :, ::1] G = gens_np

    cdef int64_t cap = 1 << 12
    elems_np = np.empty((cap, nn), dtype=np.int8)
    keys_np = np.empty((cap, 4), dtype=np.uint64)
    cdef int8_t[:, ::1] elems = elems_np
    cdef uint64_t[:, ::1] keys = keys_np

    cdef int64_t tcap = 1 << 14
    table_np = np.full(tcap, -1, dtype=np.int64)  # holds element indices
    cdef int64_t[::1] table = table_np
    cdef int64_t tmask = tcap - 1

    cdef int64_t count = 0, head = 0, slot, cur, idx
    cdef int gi, i, j, k, s, e
    cdef int8_t prod[64]
    cdef uint64_t kb[4]
    cdef uint64_t h

    # identity element
    for i in range(nn):
        elems[0, i] = 0
    for i in range(n):
        elems[0, i * n + i] = 1
    kb[0] = kb[1] = kb[2] = kb[3] = 0
    for i in range(nn):
        kb[i >> 4] |= (<uint64_t>(elems[0, i] + 8)) << ((i & 15) * 4)
    for i in range(4):
        keys[0, i] = kb[i]
    h = _mix(kb[0] ^ _mix(kb[1] ^ _mix(kb[2] ^ _mix(kb[3]))))
    table[h & tmask] = 0
    count = 1

    while head < count:
        for gi in range(g):
            for i in range(n):
                for j in range(n):
                    s = 0
                    for k in range(n):
                        s += elems[head, i * n + k] * G[gi, k, j]
                    if s < -8 or s > 7:
                        raise OverflowError(
                            "matrix entries left the supported range"
                        )
                    prod[i * n + j] = <int8_t>s
            kb[0] = kb[1] = kb[2] = kb[3] = 0
            for i in range(nn):
                kb[i >> 4] |= (<uint64_t>(prod[i] + 8)) << ((i & 15) * 4)
            h = _mix(kb[0] ^ _mix(kb[1] ^ _mix(kb[2] ^ _mix(kb[3]))))
            slot = h & tmask
            while True:
                cur = table[slot]
                if cur >= 0:
                    if (
                        keys[cur, 0] == kb[0]
                        and keys[cur, 1] == kb[1]
                        and keys[cur, 2] == kb[2]
                        and keys[cur, 3] == kb[3]
                    ):
                        break
                    slot = (slot + 1) & tmask
                    continue
                # new element
                if count == cap:
                    cap *= 2
                    new_elems_np = np.empty((cap, nn), dtype=np.int8)
                    new_elems_np[:count] = elems_np[:count]
                    elems_np = new_elems_np
                    elems = elems_np
                    new_keys_np = np.empty((cap, 4), dtype=np.uint64)
                    new_keys_np[:count] = keys_np[:count]
                    keys_np = new_keys_np
                    keys = keys_np
                table[slot] = count
                for i in range(nn):
                    elems[count, i] = prod[i]
                for i in range(4):
                    keys[count, i] = kb[i]
                count += 1
                if count * 2 >= tcap:
                    tcap *= 2
                    table_np = np.full(tcap, -1, dtype=np.int64)
                    table = table_np
                    tmask = tcap - 1
                    for idx in range(count):
                        h = _mix(
                            keys[idx, 0]
                            ^ _mix(keys[idx, 1] ^ _mix(keys[idx, 2] ^ _mix(keys[idx, 3])))
                        )
                        slot = h & tmask
                        while table[slot] >= 0:
                            slot = (slot + 1) & tmask
                        table[slot] = idx
                break
        head += 1
    return elems_np[:count].copy().reshape(count, n, n)
