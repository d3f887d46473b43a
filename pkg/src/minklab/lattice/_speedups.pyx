# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled complement kernel for the grid-lattice engine.

Same contract as the fallback in _kernels_py: for each candidate cell,
decide whether it is related (per mode) to any cell of the selected set,
with an early exit on the first hit.  All arithmetic is exact int64.
"""

import numpy as np

BACKEND = "compiled"


def complement_mask(cand_coords, sel_coords, int mode):
    """Candidates related (per mode) to no cell of the selected set."""
    cand_arr = np.ascontiguousarray(cand_coords, dtype=np.int64)
    sel_arr = np.ascontiguousarray(sel_coords, dtype=np.int64)
    cdef long long[:, ::1] cand = cand_arr
    cdef long long[:, ::1] sel = sel_arr
    cdef Py_ssize_t n = cand.shape[0]
    cdef Py_ssize_t dim = cand.shape[1]
    cdef Py_ssize_t nsel = sel.shape[0]
    out_arr = np.ones(n, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    cdef Py_ssize_t i, j, a
    cdef long long d0, d, sp2
    cdef bint related, same

    with nogil:
        for i in range(n):
            for j in range(nsel):
                d0 = cand[i, 0] - sel[j, 0]
                sp2 = 0
                for a in range(1, dim):
                    d = cand[i, a] - sel[j, a]
                    sp2 += d * d
                same = (d0 == 0) and (sp2 == 0)
                if mode == 0:
                    related = d0 * d0 - sp2 >= 0
                elif mode == 1:
                    related = (d0 * d0 - sp2 > 0) or same
                else:
                    related = (d0 != 0) or same
                if related:
                    out[i] = 0
                    break
    return out_arr.astype(bool)
