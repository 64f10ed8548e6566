# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the enumeration kernels.

See salient._pykernels for the reference implementations and the shared
conventions (down-set bitmasks, rank-subset bitmasks). Counts are kept in C
int64, which is safe for the supported range n <= 14: every count is at most
the number of linear extensions, which is at most 14!.
"""

from libc.stdlib cimport calloc, malloc, free

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil

BACKEND = "c"

MAX_N = 14


cdef void _desc_rec(int n, unsigned int *down, unsigned int placed,
                    int depth, int last, unsigned int dmask,
                    long long *out) noexcept nogil:
    cdef unsigned int full = (1u << n) - 1
    cdef unsigned int bit, nd
    cdef int e
    if placed == full:
        out[dmask] += 1
        return
    for e in range(n):
        bit = 1u << e
        if placed & bit:
            continue
        if down[e] & ~placed:
            continue
        nd = dmask
        if depth > 0 and e < last:
            nd = dmask | (1u << (depth - 1))
        _desc_rec(n, down, placed | bit, depth + 1, e, nd, out)


def descent_vector(int n, down):
    """Counts of linear extensions grouped by descent set."""
    if n <= 0:
        return [1]
    if n > MAX_N:
        raise ValueError(f"compiled kernel supports n <= {MAX_N}")
    cdef unsigned int cdown[14]
    cdef int i
    for i in range(n):
        cdown[i] = down[i]
    cdef Py_ssize_t size = 1 << (n - 1)
    cdef long long *out = <long long *> calloc(size, sizeof(long long))
    if out is NULL:
        raise MemoryError()
    try:
        _desc_rec(n, cdown, 0, 0, -1, 0, out)
        return [out[i] for i in range(size)]
    finally:
        free(out)


cdef void _flag_extend(int n, int last, long long *vec, unsigned int smask,
                       unsigned int *ideals, int *start, int *count,
                       long long *alpha, long long *scratch,
                       int maxlayer) noexcept nogil:
    cdef int r, c, k
    cdef unsigned int ideal
    cdef long long tot, layer_total
    cdef long long *nvec
    for r in range(last + 1, n):
        nvec = scratch + r * maxlayer
        layer_total = 0
        for c in range(count[r]):
            ideal = ideals[start[r] + c]
            tot = 0
            for k in range(count[last]):
                if not (ideals[start[last] + k] & ~ideal):
                    tot += vec[k]
            nvec[c] = tot
            layer_total += tot
        alpha[smask | (1u << (r - 1))] = layer_total
        _flag_extend(n, r, nvec, smask | (1u << (r - 1)),
                     ideals, start, count, alpha, scratch, maxlayer)


def natural_flag_vectors(int n, down):
    """Flag f- and h-vectors of the lattice of order ideals of a natural poset."""
    if n <= 0:
        return [1], [1]
    if n > MAX_N:
        raise ValueError(f"compiled kernel supports n <= {MAX_N}")
    cdef unsigned int cdown[14]
    cdef int i
    for i in range(n):
        cdown[i] = down[i]

    cdef int cap = 1 << n
    cdef unsigned int *pool = <unsigned int *> malloc(cap * sizeof(unsigned int))
    cdef unsigned int *ideals = <unsigned int *> malloc(cap * sizeof(unsigned int))
    cdef long long *alpha = NULL
    cdef long long *scratch = NULL
    cdef long long *vec0 = NULL
    if pool is NULL or ideals is NULL:
        free(pool)
        free(ideals)
        raise MemoryError()

    cdef int nide = 1, m, j, r, b, c
    cdef unsigned int bit, di
    cdef int start[16]
    cdef int count[16]
    cdef Py_ssize_t size, s
    cdef int maxlayer
    try:
        pool[0] = 0
        for i in range(n):
            bit = 1u << i
            di = cdown[i]
            m = nide
            for j in range(m):
                if not (di & ~pool[j]):
                    pool[nide] = pool[j] | bit
                    nide += 1
        for r in range(n + 1):
            count[r] = 0
        for j in range(nide):
            count[__builtin_popcount(pool[j])] += 1
        start[0] = 0
        for r in range(1, n + 1):
            start[r] = start[r - 1] + count[r - 1]
        for r in range(n + 1):
            count[r] = 0
        for j in range(nide):
            r = __builtin_popcount(pool[j])
            ideals[start[r] + count[r]] = pool[j]
            count[r] += 1

        maxlayer = 1
        for r in range(n + 1):
            if count[r] > maxlayer:
                maxlayer = count[r]

        size = 1 << (n - 1)
        alpha = <long long *> calloc(size, sizeof(long long))
        scratch = <long long *> malloc(n * maxlayer * sizeof(long long))
        vec0 = <long long *> malloc(maxlayer * sizeof(long long))
        if alpha is NULL or scratch is NULL or vec0 is NULL:
            raise MemoryError()
        alpha[0] = 1
        for r in range(1, n):
            for c in range(count[r]):
                vec0[c] = 1
            alpha[1u << (r - 1)] = count[r]
            _flag_extend(n, r, vec0, 1u << (r - 1), ideals, start, count,
                         alpha, scratch, maxlayer)

        alpha_list = [alpha[s] for s in range(size)]
        for b in range(n - 1):
            bit = 1u << b
            for s in range(size):
                if s & bit:
                    alpha[s] -= alpha[s ^ bit]
        beta_list = [alpha[s] for s in range(size)]
        return alpha_list, beta_list
    finally:
        free(pool)
        free(ideals)
        free(alpha)
        free(scratch)
        free(vec0)


def zeta_vector(vec, int nbits):
    """Subset-sum transform: out[S] = sum of vec[T] over T subset of S."""
    cdef Py_ssize_t size = 1 << nbits
    if len(vec) != size:
        raise ValueError("vector length must be 2**nbits")
    cdef long long *buf = <long long *> malloc(size * sizeof(long long))
    if buf is NULL:
        raise MemoryError()
    cdef Py_ssize_t s
    cdef int b
    cdef long long bit
    try:
        for s in range(size):
            buf[s] = vec[s]
        for b in range(nbits):
            bit = 1 << b
            for s in range(size):
                if s & bit:
                    buf[s] += buf[s ^ bit]
        return [buf[s] for s in range(size)]
    finally:
        free(buf)
