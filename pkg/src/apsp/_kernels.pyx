# cython: boundscheck=False, wraparound=False
"""Compiled pairwise overlap scans backing :mod:`apsp.oracle`."""


cpdef Py_ssize_t lspo(str x, str y):
    cdef Py_ssize_t nx = len(x)
    cdef Py_ssize_t L = min(nx, len(y))
    cdef Py_ssize_t off, k
    while L > 0:
        off = nx - L
        k = 0
        while k < L and x[off + k] == y[k]:
            k += 1
        if k == L:
            return L
        L -= 1
    return 0


def overlap_row(str x, list others):
    return [lspo(x, y) for y in others]


def overlap_column(list others, str y):
    return [lspo(x, y) for x in others]


def overlap_matrix(list strings):
    cdef Py_ssize_t n = len(strings), a, b
    cdef list out = []
    cdef list row
    for a in range(n):
        row = []
        for b in range(n):
            row.append(lspo(strings[a], strings[b]))
        out.append(row)
    return out
