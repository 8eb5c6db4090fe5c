# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contracts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def paf(a):
    cdef const signed char[::1] x = np.ascontiguousarray(a, dtype=np.int8)
    cdef Py_ssize_t v = x.shape[0]
    cdef Py_ssize_t s, i, j
    cdef long long acc
    out = np.empty(v, dtype=np.int64)
    cdef long long[::1] o = out
    for s in range(v):
        acc = 0
        j = s
        for i in range(v):
            acc += x[i] * x[j]
            j += 1
            if j == v:
                j = 0
        o[s] = acc
    return out


def difference_counts(elements, Py_ssize_t v):
    cdef const long long[::1] e = np.ascontiguousarray(elements, dtype=np.int64)
    cdef Py_ssize_t k = e.shape[0]
    cdef Py_ssize_t i, j
    cdef long long d
    out = np.zeros(v, dtype=np.int64)
    cdef long long[::1] o = out
    for i in range(k):
        for j in range(k):
            d = e[i] - e[j]
            if d < 0:
                d += v
            o[d] += 1
    return out


cdef inline bint _fits(const long long[::1] sizes, const unsigned char[:, ::1] feasible,
                       Py_ssize_t q, long long rem):
    return sizes[q] <= rem and feasible[q + 1, rem - sizes[q]]


cdef Py_ssize_t _fill(long long[::1] combo, Py_ssize_t depth, Py_ssize_t pos, long long rem,
                      const long long[::1] sizes, const unsigned char[:, ::1] feasible):
    cdef Py_ssize_t n = sizes.shape[0]
    cdef Py_ssize_t p
    while rem > 0:
        for p in range(pos, n):
            if _fits(sizes, feasible, p, rem):
                combo[depth] = p
                depth += 1
                rem -= sizes[p]
                pos = p + 1
                break
        else:
            return -1
    return depth


def scan_window(re, im, sizes, base_re, base_im, start, long long target,
                long long count, double bound, feasible):
    cdef const double[:, ::1] R = np.ascontiguousarray(re, dtype=np.float64)
    cdef const double[:, ::1] I = np.ascontiguousarray(im, dtype=np.float64)
    cdef const long long[::1] sz = np.ascontiguousarray(sizes, dtype=np.int64)
    cdef const unsigned char[:, ::1] feas = np.ascontiguousarray(feasible, dtype=np.uint8)
    cdef Py_ssize_t n = sz.shape[0]
    cdef Py_ssize_t nf = R.shape[1]
    pre_re_arr = np.zeros((n + 2, nf))
    pre_im_arr = np.zeros((n + 2, nf))
    cdef double[:, ::1] PR = pre_re_arr
    cdef double[:, ::1] PI = pre_im_arr
    combo_arr = np.zeros(n + 1, dtype=np.int64)
    used_arr = np.zeros(n + 2, dtype=np.int64)
    cdef long long[::1] combo = combo_arr
    cdef long long[::1] used = used_arr
    cdef Py_ssize_t depth = len(start)
    cdef Py_ssize_t t, f, j, q, changed = 0, newdepth
    cdef long long scanned = 0, rem
    cdef double xr, xi
    cdef bint ok, advanced
    for t in range(depth):
        combo[t] = start[t]
    for f in range(nf):
        PR[0, f] = base_re[f]
        PI[0, f] = base_im[f]
    passing = []
    while scanned < count:
        for t in range(changed, depth):
            used[t + 1] = used[t] + sz[combo[t]]
            for f in range(nf):
                PR[t + 1, f] = PR[t, f] + R[combo[t], f]
                PI[t + 1, f] = PI[t, f] + I[combo[t], f]
        scanned += 1
        ok = True
        for f in range(nf):
            xr = PR[depth, f]
            xi = PI[depth, f]
            if 4.0 * (xr * xr + xi * xi) > bound:
                ok = False
                break
        if ok:
            passing.append(tuple(combo_arr[:depth].tolist()))
        if scanned >= count:
            break
        # lexicographic successor, mirroring _pykernels.next_combination
        advanced = False
        j = depth - 1
        while j >= 0 and not advanced:
            rem = target - used[j]
            for q in range(combo[j] + 1, n):
                if _fits(sz, feas, q, rem):
                    combo[j] = q
                    newdepth = _fill(combo, j + 1, q + 1, rem - sz[q], sz, feas)
                    if newdepth < 0:
                        raise AssertionError("infeasible completion")
                    depth = newdepth
                    changed = j
                    advanced = True
                    break
            j -= 1
        if not advanced:
            break
    return passing, scanned
