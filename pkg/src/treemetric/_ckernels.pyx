# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; same contracts as ``_pykernels`` with float64 arithmetic."""

from libc.stdlib cimport malloc, free
from itertools import permutations

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef struct Ctx:
    const int* a
    const int* b
    const unsigned char* la
    const unsigned char* lb
    const double* cost
    Py_ssize_t ncost
    const double* weight
    int depth
    int k
    int respect
    const int* perms
    int nperms
    double* scratch


cdef cnp.ndarray _ints(seq):
    """Copy a Python sequence of ints/bools into a C int array."""
    if isinstance(seq, cnp.ndarray):
        return np.ascontiguousarray(seq, dtype=np.intc)
    seq = list(seq) if not isinstance(seq, (list, tuple)) else seq
    cdef Py_ssize_t i, n = len(seq)
    cdef cnp.ndarray out = np.empty(n, dtype=np.intc)
    cdef int* buf = <int*> out.data
    for i in range(n):
        buf[i] = seq[i]
    return out


cdef inline double _d(Ctx* c, Py_ssize_t p1, Py_ssize_t p2, int level) noexcept nogil:
    return c.weight[level] * c.cost[c.a[p1] * c.ncost + c.b[p2]]


cdef double _bm2(Ctx* c, Py_ssize_t p1, Py_ssize_t p2, int level) noexcept nogil:
    cdef double d = _d(c, p1, p2, level)
    if level == c.depth:
        return d
    cdef Py_ssize_t l1 = 2 * p1 + 1
    cdef Py_ssize_t l2 = 2 * p2 + 1
    cdef double c1 = _bm2(c, l1, l2, level + 1) + _bm2(c, l1 + 1, l2 + 1, level + 1)
    cdef double c2 = _bm2(c, l1, l2 + 1, level + 1) + _bm2(c, l1 + 1, l2, level + 1)
    if c.respect and c.la[p1] and c.lb[p2]:
        return d + c1
    return d + (c1 if c1 <= c2 else c2)


cdef double _bmk(Ctx* c, Py_ssize_t p1, Py_ssize_t p2, int level) noexcept nogil:
    cdef double d = _d(c, p1, p2, level)
    if level == c.depth:
        return d
    cdef int k = c.k
    cdef double* sub = c.scratch + level * k * k
    cdef Py_ssize_t base1 = k * p1 + 1
    cdef Py_ssize_t base2 = k * p2 + 1
    cdef int i, j, r
    for i in range(k):
        for j in range(k):
            sub[i * k + j] = _bmk(c, base1 + i, base2 + j, level + 1)
    cdef double best, s
    cdef int nperms = c.nperms
    if c.respect and c.la[p1] and c.lb[p2]:
        nperms = 1  # first permutation is the identity
    best = 0
    for r in range(nperms):
        s = 0
        for i in range(k):
            s += sub[i * k + c.perms[r * k + i]]
        if r == 0 or s < best:
            best = s
    return d + best


def ordered_distance(a, b, int k, int depth, cost, weight):
    cdef const int[::1] av = _ints(a)
    cdef const int[::1] bv = _ints(b)
    cdef const double[:, ::1] cv = np.ascontiguousarray(cost, dtype=np.float64)
    cdef const double[::1] wv = np.ascontiguousarray(weight, dtype=np.float64)
    cdef double total = 0
    cdef Py_ssize_t p = 0, i, width = 1
    cdef int level
    for level in range(depth + 1):
        for i in range(width):
            total += wv[level] * cv[av[p], bv[p]]
            p += 1
        width *= k
    return total


def _best_match(a, b, lock_a, lock_b, int k, int depth, cost, weight, bint respect_locks):
    cdef const int[::1] av = _ints(a)
    cdef const int[::1] bv = _ints(b)
    cdef const unsigned char[::1] lav = _ints(lock_a).astype(np.uint8)
    cdef const unsigned char[::1] lbv = _ints(lock_b).astype(np.uint8)
    cdef const double[:, ::1] cv = np.ascontiguousarray(cost, dtype=np.float64)
    cdef const double[::1] wv = np.ascontiguousarray(weight, dtype=np.float64)
    cdef const int[:, ::1] pv = np.ascontiguousarray(list(permutations(range(k))), dtype=np.intc)
    cdef double[::1] scratch = np.zeros((depth + 1) * k * k, dtype=np.float64)
    cdef Ctx c
    c.a = &av[0]
    c.b = &bv[0]
    c.la = &lav[0]
    c.lb = &lbv[0]
    c.cost = &cv[0, 0]
    c.ncost = cv.shape[1]
    c.weight = &wv[0]
    c.depth = depth
    c.k = k
    c.respect = respect_locks
    c.perms = &pv[0, 0]
    c.nperms = pv.shape[0]
    c.scratch = &scratch[0]
    cdef double out
    with nogil:
        if k == 2:
            out = _bm2(&c, 0, 0, 0)
        else:
            out = _bmk(&c, 0, 0, 0)
    return out


def best_match_binary(a, b, lock_a, lock_b, int depth, cost, weight, bint respect_locks):
    return _best_match(a, b, lock_a, lock_b, 2, depth, cost, weight, respect_locks)


def best_match_kary(a, b, lock_a, lock_b, int k, int depth, cost, weight, bint respect_locks):
    return _best_match(a, b, lock_a, lock_b, k, depth, cost, weight, respect_locks)


cdef inline int _cmp(const int* lab, const int* child, int k, Py_ssize_t n_internal,
                     Py_ssize_t x, Py_ssize_t y, Py_ssize_t* qa, Py_ssize_t* qb) noexcept nogil:
    cdef Py_ssize_t head = 0, tail = 1, u, v
    cdef int j
    qa[0] = x
    qb[0] = y
    while head < tail:
        u = qa[head]
        v = qb[head]
        head += 1
        if lab[u] != lab[v]:
            return -1 if lab[u] < lab[v] else 1
        if u < n_internal:
            for j in range(k):
                qa[tail] = child[u * k + j]
                qb[tail] = child[v * k + j]
                tail += 1
    return 0


def regularize(a, int k, int depth, int stop=0):
    cdef const int[::1] av = _ints(a)
    cdef Py_ssize_t leaves = 1
    cdef int d
    for d in range(depth):
        leaves *= k
    cdef Py_ssize_t n_internal = (leaves - 1) // (k - 1)
    cdef Py_ssize_t n = n_internal + leaves
    cdef int[::1] child = np.empty(max(n_internal * k, 1), dtype=np.intc)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] src_arr = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t* src = <Py_ssize_t*> src_arr.data
    cdef Py_ssize_t* qa = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* qb = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    if qa == NULL or qb == NULL:
        free(qa)
        free(qb)
        raise MemoryError()
    cdef Py_ssize_t p, start, width, i, nxt
    cdef int level, j, hold
    cdef const int* lab = &av[0]
    cdef int* ch = &child[0]
    with nogil:
        for p in range(n_internal):
            for j in range(k):
                ch[p * k + j] = <int>(k * p + 1 + j)
        width = 1
        for level in range(depth - 1):
            width *= k
        level = depth - 1
        while level >= stop:
            start = (width - 1) // (k - 1)
            for p in range(start, start + width):
                # stable insertion sort of the k child slots
                for i in range(1, k):
                    hold = ch[p * k + i]
                    j = <int>i - 1
                    while j >= 0 and _cmp(lab, ch, k, n_internal, ch[p * k + j], hold, qa, qb) > 0:
                        ch[p * k + j + 1] = ch[p * k + j]
                        j -= 1
                    ch[p * k + j + 1] = hold
            level -= 1
            width //= k
        src[0] = 0
        nxt = 1
        for i in range(n_internal):
            for j in range(k):
                src[nxt] = ch[src[i] * k + j]
                nxt += 1
    free(qa)
    free(qb)
    return src_arr.tolist()
