# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled loops behind shift and modular evaluation."""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    """
    static inline uint64_t gd_mulmod(uint64_t a, uint64_t b, uint64_t p) {
        return (uint64_t)(((unsigned __int128)a * b) % p);
    }
    """
    uint64_t gd_mulmod(uint64_t a, uint64_t b, uint64_t p) nogil

NAME = "cython"


def remap(parts, int iu, int ix, int ix0, int ix1, long ux, long u0, long u1, bint flip):
    """Apply x -> u^ux x^(+-1), x0 -> u^u0 x0, x1 -> u^u1 x1 to each exponent
    dict in ``parts`` and divide out the common power of u and x."""
    cdef list mapped = []
    cdef long lo_u = 0, lo_x = 0, eu, exx
    cdef bint first = True
    cdef dict m
    cdef list ex
    for t in parts:
        m = {}
        for key, c in (<dict>t).items():
            ex = list(key)
            eu = <long>ex[iu] + ux * <long>ex[ix] + u0 * <long>ex[ix0] + u1 * <long>ex[ix1]
            exx = -<long>ex[ix] if flip else <long>ex[ix]
            ex[iu] = eu
            ex[ix] = exx
            m[tuple(ex)] = c
            if first:
                lo_u, lo_x, first = eu, exx, False
            else:
                if eu < lo_u:
                    lo_u = eu
                if exx < lo_x:
                    lo_x = exx
        mapped.append(m)
    if lo_u == 0 and lo_x == 0:
        return mapped
    cdef list out = []
    for m in mapped:
        n = {}
        for key, c in m.items():
            ex = list(key)
            ex[iu] = <long>ex[iu] - lo_u
            ex[ix] = <long>ex[ix] - lo_x
            n[tuple(ex)] = c
        out.append(n)
    return out


cdef uint64_t _powmod(uint64_t a, int64_t k, uint64_t p, uint64_t ainv):
    cdef uint64_t r = 1
    if k < 0:
        a = ainv
        k = -k
    while k:
        if k & 1:
            r = gd_mulmod(r, a, p)
        a = gd_mulmod(a, a, p)
        k >>= 1
    return r


def eval_terms(terms, point, prime):
    """sum c * point^ex mod prime for ``terms`` = {ex: (num, den)}; prime < 2^63."""
    cdef uint64_t p = prime
    cdef Py_ssize_t n = len(point), i
    cdef uint64_t[16] pt
    cdef uint64_t[16] inv
    if n > 16:
        raise ValueError("too many variables")
    for i in range(n):
        pt[i] = point[i] % prime
        inv[i] = pow(int(pt[i]), -1, prime) if pt[i] else 0
    cdef uint64_t s = 0, v
    cdef int64_t k
    for ex, (num, den) in terms.items():
        v = gd_mulmod(num % prime, pow(den, -1, prime), p)
        for i in range(n):
            k = ex[i]
            if k:
                if pt[i] == 0 and k < 0:
                    raise ZeroDivisionError("negative power of zero")
                v = gd_mulmod(v, _powmod(pt[i], k, p, inv[i]), p)
        s = (s + v) % p
    return s
