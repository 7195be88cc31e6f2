# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Same signatures and semantics as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, M_PI
from scipy.linalg.cython_blas cimport zgemm

cnp.import_array()

ctypedef double complex cplx


cdef void _fill_twiddles(cplx[::1] w, Py_ssize_t n, int sign) noexcept nogil:
    cdef Py_ssize_t t
    cdef double a
    for t in range(n):
        a = 2.0 * M_PI * <double>t / <double>n
        w[t] = cos(a) + sign * sin(a) * 1j


def twiddles(Py_ssize_t n, int sign):
    out = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] w = out
    with nogil:
        _fill_twiddles(w, n, sign)
    return out


cdef void _dft_strided(const cplx* src, Py_ssize_t stride, cplx* dst,
                       Py_ssize_t dstride, Py_ssize_t n,
                       const cplx* w) noexcept nogil:
    cdef Py_ssize_t j, k, t
    cdef cplx acc
    for k in range(n):
        acc = 0
        t = 0
        for j in range(n):
            acc = acc + src[j * stride] * w[t]
            t += k
            if t >= n:
                t -= n
        dst[k * dstride] = acc


def dft_naive(const cplx[::1] x, int sign):
    cdef Py_ssize_t n = x.shape[0]
    out = np.empty(n, dtype=np.complex128)
    if n == 0:
        return out
    cdef cplx[::1] o = out
    cdef cplx[::1] w = twiddles(n, sign)
    with nogil:
        _dft_strided(&x[0], 1, &o[0], 1, n, &w[0])
    return out


def fft_radix2(const cplx[::1] x, int sign):
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i, j, bit, size, half, start, k, step
    cdef cplx u, v
    out = np.empty(n, dtype=np.complex128)
    if n == 0:
        return out
    cdef cplx[::1] a = out
    cdef cplx[::1] w = twiddles(n, sign)
    with nogil:
        # bit-reversed copy
        j = 0
        for i in range(n):
            a[j] = x[i]
            bit = n >> 1
            while bit and (j & bit):
                j ^= bit
                bit >>= 1
            j |= bit
        size = 2
        while size <= n:
            half = size >> 1
            step = n // size
            start = 0
            while start < n:
                for k in range(half):
                    u = a[start + k]
                    v = a[start + k + half] * w[k * step]
                    a[start + k] = u + v
                    a[start + k + half] = u - v
                start += size
            size <<= 1
    return out


cdef void _fill_dft_matrix(cplx[:, ::1] w, const cplx[::1] tw,
                           Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t j, k
    for j in range(n):
        for k in range(n):
            w[j, k] = tw[(j * k) % n]


cdef void _matmul(cplx[:, ::1] a, cplx[:, ::1] b, cplx[:, ::1] c) noexcept nogil:
    # row-major c = a @ b, computed as the column-major product b^T a^T
    cdef int m = <int>a.shape[0]
    cdef int k = <int>a.shape[1]
    cdef int n = <int>b.shape[1]
    cdef cplx one = 1.0
    cdef cplx zero = 0.0
    cdef char tr = b'N'
    zgemm(&tr, &tr, &n, &m, &k, &one, &b[0, 0], &n, &a[0, 0], &k, &zero, &c[0, 0], &n)


def pfa(const cplx[::1] x, Py_ssize_t n1, Py_ssize_t n2,
        const cnp.int64_t[::1] in_idx, const cnp.int64_t[::1] out_idx, int sign):
    cdef Py_ssize_t n = n1 * n2
    cdef Py_ssize_t p
    grid = np.empty((n1, n2), dtype=np.complex128)
    tmp = np.empty((n1, n2), dtype=np.complex128)
    out = np.empty(n, dtype=np.complex128)
    cdef cplx[:, ::1] g = grid
    cdef cplx[:, ::1] t = tmp
    cdef cplx[::1] o = out
    cdef cplx[:, ::1] w1 = np.empty((n1, n1), dtype=np.complex128)
    cdef cplx[:, ::1] w2 = np.empty((n2, n2), dtype=np.complex128)
    cdef cplx[::1] tw1 = twiddles(n1, sign)
    cdef cplx[::1] tw2 = twiddles(n2, sign)
    with nogil:
        _fill_dft_matrix(w1, tw1, n1)
        _fill_dft_matrix(w2, tw2, n2)
        for p in range(n):
            g[p // n2, p % n2] = x[in_idx[p]]
        # length-n2 transforms along rows, then length-n1 along columns
        _matmul(g, w2, t)
        _matmul(w1, t, g)
        for p in range(n):
            o[p] = g[out_idx[p] // n2, out_idx[p] % n2]
    return out


def direct_sum(const cplx[::1] values, const double[::1] src,
               const double[::1] dst, double scale, int sign):
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t m = dst.shape[0]
    cdef Py_ssize_t j, k
    cdef double a
    cdef cplx acc
    out = np.empty(m, dtype=np.complex128)
    cdef cplx[::1] o = out
    with nogil:
        for k in range(m):
            acc = 0
            for j in range(n):
                a = 2.0 * M_PI * src[j] * dst[k]
                acc = acc + values[j] * (cos(a) + sign * sin(a) * 1j)
            o[k] = scale * acc
    return out
