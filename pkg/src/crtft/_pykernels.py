"""NumPy implementations of the inner loops, used when the extension is absent.

Signatures and semantics match ``_kernels.pyx``. Every function returns a new
complex128 array; inputs are never modified.
"""

import numpy as np

# Rows per block in the O(n^2) loops; keeps the index matrix near 16 MB.
_BLOCK_ELEMS = 1 << 21


def twiddles(n, sign):
    a = 2.0 * np.pi * np.arange(n) / n
    return np.cos(a) + sign * 1j * np.sin(a)


def _blocks(rows, cols):
    step = max(1, _BLOCK_ELEMS // max(cols, 1))
    for start in range(0, rows, step):
        yield start, min(rows, start + step)


def dft_naive(x, sign):
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[0]
    out = np.empty(n, dtype=np.complex128)
    if n == 0:
        return out
    w = twiddles(n, sign)
    j = np.arange(n, dtype=np.int64)
    for lo, hi in _blocks(n, n):
        k = np.arange(lo, hi, dtype=np.int64)
        out[lo:hi] = w[np.outer(k, j) % n] @ x
    return out


def fft_radix2(x, sign):
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[0]
    if n <= 1:
        return x.copy()
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    a = x[rev]
    w = twiddles(n, sign)
    size = 2
    while size <= n:
        half = size // 2
        blocks = a.reshape(-1, size)
        tw = w[:: n // size][:half]
        u = blocks[:, :half].copy()
        v = blocks[:, half:] * tw
        blocks[:, :half] = u + v
        blocks[:, half:] = u - v
        size *= 2
    return a


def _dft_matrix(n, sign):
    w = twiddles(n, sign)
    k = np.arange(n)
    return w[np.outer(k, k) % n]


def pfa(x, n1, n2, in_idx, out_idx, sign):
    x = np.asarray(x, dtype=np.complex128)
    g = x[in_idx].reshape(n1, n2)
    g = _dft_matrix(n1, sign) @ g @ _dft_matrix(n2, sign)
    return g.reshape(-1)[out_idx]


def direct_sum(values, src, dst, scale, sign):
    values = np.asarray(values, dtype=np.complex128)
    src = np.asarray(src, dtype=np.float64)
    dst = np.asarray(dst, dtype=np.float64)
    out = np.empty(dst.shape[0], dtype=np.complex128)
    for lo, hi in _blocks(dst.shape[0], src.shape[0]):
        a = 2.0 * np.pi * np.outer(dst[lo:hi], src)
        out[lo:hi] = (np.cos(a) + sign * 1j * np.sin(a)) @ values
    return scale * out
