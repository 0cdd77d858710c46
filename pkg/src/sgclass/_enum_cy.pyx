# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernel; see `_enum_py` for the reference twin."""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from itertools import permutations

_PERMS = {}


def _perms(n):
    if n not in _PERMS:
        _PERMS[n] = tuple(permutations(range(n)))
    return _PERMS[n]


cdef bint _determined_ok(int n, int *op) noexcept:
    cdef int x, y, z, xy, yz, a, b
    for x in range(n):
        for y in range(n):
            xy = op[x * n + y]
            if xy < 0:
                continue
            for z in range(n):
                yz = op[y * n + z]
                if yz < 0:
                    continue
                a = op[xy * n + z]
                if a < 0:
                    continue
                b = op[x * n + yz]
                if b >= 0 and b != a:
                    return False
    return True


cdef void _fill(int k, int ncells, int n, int *op, int *ci, int *cj, list out):
    cdef int i, j, v
    if k == ncells:
        out.append(tuple([op[i] for i in range(n * n)]))
        return
    i = ci[k]
    j = cj[k]
    for v in range(n):
        op[i * n + j] = v
        op[j * n + i] = v
        if _determined_ok(n, op):
            _fill(k + 1, ncells, n, op, ci, cj, out)
    op[i * n + j] = -1
    op[j * n + i] = -1


def commutative_tables(int n):
    """All commutative associative tables on 0..n-1, as flat tuples."""
    if not 1 <= n <= 8:
        raise ValueError("kernel handles orders 1..8")
    cdef int op[64]
    cdef int ci[36]
    cdef int cj[36]
    cdef int i, j, k
    for i in range(n * n):
        op[i] = -1
    k = 0
    for i in range(n):
        for j in range(i, n):
            ci[k] = i
            cj[k] = j
            k += 1
    out = []
    _fill(0, k, n, op, ci, cj, out)
    return out


def is_canonical(flat, int n):
    """True iff no relabeling of the table is lexicographically smaller."""
    if not 1 <= n <= 8:
        raise ValueError("kernel handles orders 1..8")
    cdef int t[64]
    cdef int inv[8]
    cdef int i, j, v, w, a
    cdef bint smaller_possible
    for i in range(n * n):
        t[i] = flat[i]
    perms = _perms(n)
    cdef int *p = <int *> PyMem_Malloc(n * sizeof(int))
    if p == NULL:
        raise MemoryError()
    try:
        for perm in perms:
            for a in range(n):
                p[a] = perm[a]
                inv[perm[a]] = a
            smaller_possible = True
            for i in range(n):
                if not smaller_possible:
                    break
                for j in range(n):
                    v = p[t[inv[i] * n + inv[j]]]
                    w = t[i * n + j]
                    if v != w:
                        if v < w:
                            return False
                        smaller_possible = False
                        break
    finally:
        PyMem_Free(p)
    return True


def canonical_form(flat, int n):
    """Lexicographically least relabeling of the table."""
    if not 1 <= n <= 8:
        raise ValueError("kernel handles orders 1..8")
    cdef int t[64]
    cdef int best[64]
    cdef int cand[64]
    cdef int inv[8]
    cdef int i, j, a, nn
    cdef bint better
    nn = n * n
    for i in range(nn):
        t[i] = flat[i]
        best[i] = flat[i]
    perms = _perms(n)
    cdef int *p = <int *> PyMem_Malloc(n * sizeof(int))
    if p == NULL:
        raise MemoryError()
    try:
        for perm in perms:
            for a in range(n):
                p[a] = perm[a]
                inv[perm[a]] = a
            for i in range(n):
                for j in range(n):
                    cand[i * n + j] = p[t[inv[i] * n + inv[j]]]
            better = False
            for i in range(nn):
                if cand[i] != best[i]:
                    better = cand[i] < best[i]
                    break
            if better:
                for i in range(nn):
                    best[i] = cand[i]
    finally:
        PyMem_Free(p)
    return tuple([best[i] for i in range(nn)])
