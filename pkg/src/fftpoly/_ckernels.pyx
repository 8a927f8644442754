# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops over residue lists; same contract as ``_kernels_py``.

Residues are held in ``uint64_t`` buffers, so the modulus must be below 2**31
(products then stay below 2**62).
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free, malloc

MAX_MODULUS = 1 << 31


cdef uint64_t* _load(list a, Py_ssize_t n) except NULL:
    cdef uint64_t* buf = <uint64_t*> malloc((n if n > 0 else 1) * sizeof(uint64_t))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = a[i]
    return buf


cdef list _dump(uint64_t* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    return [buf[i] for i in range(n)]


cdef inline void _check(uint64_t p) except *:
    if p < 2 or p >= MAX_MODULUS:
        raise ValueError("compiled kernels need 2 <= p < 2**31")


def convolve(list a, list b, uint64_t p):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, k, lo, rows = 0, batch
    cdef uint64_t x
    cdef uint64_t* A
    cdef uint64_t* B
    cdef uint64_t* out
    _check(p)
    if na == 0 or nb == 0:
        return []
    # products are summed lazily; `batch` of them fit on top of a reduced value
    batch = <Py_ssize_t> ((<uint64_t> -1 - (p - 1)) // ((p - 1) * (p - 1)))
    A = _load(a, na)
    B = _load(b, nb)
    out = <uint64_t*> calloc(na + nb - 1, sizeof(uint64_t))
    if out == NULL:
        free(A); free(B)
        raise MemoryError()
    try:
        with nogil:
            lo = 0
            for i in range(na):
                x = A[i]
                if x != 0:
                    for j in range(nb):
                        out[i + j] += x * B[j]
                rows += 1
                if rows == batch:
                    for k in range(lo, i + nb):
                        out[k] %= p
                    rows = 0
                    lo = i + 1
            for k in range(na + nb - 1):
                out[k] %= p
        return _dump(out, na + nb - 1)
    finally:
        free(A); free(B); free(out)


def ntt(list a, int n, uint64_t w, uint64_t p):
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n, i, r, s, j, start, half
    cdef uint64_t u, v, wr
    cdef uint64_t* buf
    cdef uint64_t* roots
    cdef uint64_t* tw
    _check(p)
    if len(a) != size:
        raise ValueError(f"expected {size} coefficients, got {len(a)}")
    buf = <uint64_t*> malloc(size * sizeof(uint64_t))
    roots = <uint64_t*> malloc((n + 1) * sizeof(uint64_t))
    tw = <uint64_t*> malloc(size * sizeof(uint64_t))
    if buf == NULL or roots == NULL or tw == NULL:
        free(buf); free(roots); free(tw)
        raise MemoryError()
    try:
        for i in range(size):
            # bit-reversed load
            r = 0
            for s in range(n):
                r |= ((i >> s) & 1) << (n - 1 - s)
            buf[i] = <uint64_t> a[r] % p
        with nogil:
            roots[0] = w % p
            for s in range(1, n):
                roots[s] = roots[s - 1] * roots[s - 1] % p
            half = 1
            for s in range(n):
                wr = roots[n - 1 - s]
                tw[0] = 1
                for j in range(1, half):
                    tw[j] = tw[j - 1] * wr % p
                start = 0
                while start < size:
                    for j in range(half):
                        u = buf[start + j]
                        v = buf[start + j + half] * tw[j] % p
                        buf[start + j] = u + v - p if u + v >= p else u + v
                        buf[start + j + half] = u - v if u >= v else u + p - v
                    start += 2 * half
                half <<= 1
        return _dump(buf, size)
    finally:
        free(buf); free(roots); free(tw)


def pointwise(list a, list b, uint64_t p):
    cdef Py_ssize_t n = min(len(a), len(b)), i
    _check(p)
    return [(<uint64_t> a[i]) * (<uint64_t> b[i]) % p for i in range(n)]


def scale(list a, uint64_t c, uint64_t p):
    cdef Py_ssize_t n = len(a), i
    _check(p)
    c %= p
    return [(<uint64_t> a[i]) * c % p for i in range(n)]
