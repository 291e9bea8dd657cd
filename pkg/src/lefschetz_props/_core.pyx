# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled rank kernels.

``rank_i64`` runs fraction-free (Bareiss) elimination in machine words with
128-bit intermediates; every intermediate is a minor of the input matrix, so
it is kept inside a 62-bit window and the function returns -1 the moment a
value would leave it.  Callers fall back to the big-integer path on -1, which
keeps the exact-arithmetic contract while making the common small case fast.

``rank_mod`` eliminates modulo a prime below 2^31 (products then fit uint64).
A modular rank is a lower bound for the rational rank: callers may use it to
certify maximal rank cheaply but must confirm anything smaller exactly.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef long long i128 "__int128"

cdef long long BOUND = (<long long> 1) << 62


def rank_i64(rows, Py_ssize_t ncols):
    """Rank of an integer matrix, or -1 when the 62-bit window is exceeded."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef long long *a = <long long *> malloc(nrows * ncols * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef long long v
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                try:
                    v = row[j]
                except OverflowError:
                    return -1
                if v >= BOUND or v <= -BOUND:
                    return -1
                a[i * ncols + j] = v
        return _bareiss_rank(a, nrows, ncols)
    finally:
        free(a)


cdef int _bareiss_rank(long long *a, Py_ssize_t nrows, Py_ssize_t ncols) noexcept:
    cdef Py_ssize_t r = 0, c, pr, rr, cc
    cdef long long prev = 1, pivot, mult, tmp
    cdef i128 t
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for rr in range(r, nrows):
            if a[rr * ncols + c] != 0:
                pr = rr
                break
        if pr < 0:
            continue
        if pr != r:
            for cc in range(c, ncols):
                tmp = a[r * ncols + cc]
                a[r * ncols + cc] = a[pr * ncols + cc]
                a[pr * ncols + cc] = tmp
        pivot = a[r * ncols + c]
        for rr in range(r + 1, nrows):
            mult = a[rr * ncols + c]
            for cc in range(c + 1, ncols):
                t = <i128> pivot * <i128> a[rr * ncols + cc] \
                    - <i128> mult * <i128> a[r * ncols + cc]
                t = t / prev  # exact by the Bareiss identity
                if t >= <i128> BOUND or t <= -(<i128> BOUND):
                    return -1
                a[rr * ncols + cc] = <long long> t
            a[rr * ncols + c] = 0
        prev = pivot
        r += 1
    return <int> r


def rank_mod(rows, Py_ssize_t ncols, unsigned long long p):
    """Rank of the matrix reduced modulo the prime p (p < 2^31)."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    if p >= (<unsigned long long> 1) << 31:
        raise ValueError("modulus must be below 2^31")
    cdef unsigned long long *a = \
        <unsigned long long *> malloc(nrows * ncols * sizeof(unsigned long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                a[i * ncols + j] = row[j] % p  # Python %: nonnegative result
        return _mod_rank(a, nrows, ncols, p)
    finally:
        free(a)


cdef unsigned long long _powmod(unsigned long long b, unsigned long long e,
                                unsigned long long p) noexcept:
    cdef unsigned long long r = 1
    b %= p
    while e:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


cdef int _mod_rank(unsigned long long *a, Py_ssize_t nrows, Py_ssize_t ncols,
                   unsigned long long p) noexcept:
    cdef Py_ssize_t r = 0, c, pr, rr, cc
    cdef unsigned long long inv, f, tmp
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for rr in range(r, nrows):
            if a[rr * ncols + c] != 0:
                pr = rr
                break
        if pr < 0:
            continue
        if pr != r:
            for cc in range(c, ncols):
                tmp = a[r * ncols + cc]
                a[r * ncols + cc] = a[pr * ncols + cc]
                a[pr * ncols + cc] = tmp
        inv = _powmod(a[r * ncols + c], p - 2, p)
        for rr in range(r + 1, nrows):
            f = (a[rr * ncols + c] * inv) % p
            if f == 0:
                continue
            for cc in range(c, ncols):
                a[rr * ncols + cc] = \
                    (a[rr * ncols + cc] + (p - f) * a[r * ncols + cc]) % p
        r += 1
    return <int> r
