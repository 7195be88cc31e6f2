"""Discrete Fourier transforms seen as polynomial CRT over C[X]/(X^n - 1).

The forward map evaluates a coefficient vector at the points w^k with
``w = exp(-2*pi*i/n)``; the inverse is the Lagrange interpolation formula.
Three forward implementations are provided: the O(n^2) reference, radix-2,
and the prime-factor (Good-Thomas) algorithm whose index maps come from
:mod:`crtft.crt`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from . import _backend, crt
from .errors import (
    EmptyInput,
    FactorsNotCoprime,
    LengthMismatch,
    NonFiniteValue,
    NotPowerOfTwo,
)

FORWARD = "forward"
INVERSE = "inverse"


def as_complex_vector(v) -> np.ndarray:
    """Validate ``v`` as a non-empty, finite, 1-D complex vector."""
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim != 1:
        raise LengthMismatch(f"expected a 1-D vector, got shape {arr.shape}")
    if arr.size == 0:
        raise EmptyInput("vector must have at least one entry")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteValue("vector contains NaN or Inf")
    return np.ascontiguousarray(arr)


def _sign(direction: str) -> int:
    if direction == FORWARD:
        return -1
    if direction == INVERSE:
        return 1
    raise ValueError(f"direction must be {FORWARD!r} or {INVERSE!r}")


@dataclass(frozen=True, eq=False)
class RootOfUnityPlan:
    """Powers w^0..w^{n-1} of w = exp(-2*pi*i/n), each by direct trig."""

    n: int
    powers: np.ndarray

    @property
    def omega(self) -> complex:
        return complex(self.powers[1 % self.n])


@lru_cache(maxsize=64)
def root_plan(n: int) -> RootOfUnityPlan:
    if n < 1:
        raise EmptyInput("n must be >= 1")
    powers = _backend.python_kernels.twiddles(n, -1)
    powers.setflags(write=False)
    return RootOfUnityPlan(n, powers)


def dft_naive(v) -> np.ndarray:
    """Reference O(n^2) DFT: out[k] = sum_j v[j] w^(jk)."""
    return _backend.kernels.dft_naive(as_complex_vector(v), -1)


def idft_naive(spectrum) -> np.ndarray:
    x = as_complex_vector(spectrum)
    return _backend.kernels.dft_naive(x, 1) / x.size


def lagrange_units(n: int) -> np.ndarray:
    """u_j = 1 / prod_{l != j} (w^j - w^l), evaluated as the literal product."""
    pts = root_plan(n).powers
    diff = pts[:, None] - pts[None, :]
    np.fill_diagonal(diff, 1.0)
    return 1.0 / np.prod(diff, axis=1)


def lagrange_basis(n: int) -> np.ndarray:
    """Row k holds the coefficients of (X^n - 1)/(X - w^k).

    Uses the geometric identity (X^n - 1)/(X - a) = sum_q a^(n-1-q) X^q.
    """
    pts = root_plan(n).powers
    k = np.arange(n)[:, None]
    q = np.arange(n)[None, :]
    return pts[(k * (n - 1 - q)) % n]


def idft_lagrange(spectrum) -> np.ndarray:
    """Coefficients of P(X) = sum_k spectrum[k] u_k (X^n - 1)/(X - w^k)."""
    s = as_complex_vector(spectrum)
    n = s.size
    return (s * lagrange_units(n)) @ lagrange_basis(n)


def partition_of_unity(n: int) -> np.ndarray:
    """Coefficients of sum_k u_k (X^n - 1)/(X - w^k); exactly (1, 0, ..., 0)."""
    return lagrange_units(n) @ lagrange_basis(n)


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def fft_radix2(v, direction: str = FORWARD) -> np.ndarray:
    x = as_complex_vector(v)
    sign = _sign(direction)
    if not is_power_of_two(x.size):
        raise NotPowerOfTwo(f"length {x.size} is not a power of two")
    out = _backend.kernels.fft_radix2(x, sign)
    if sign > 0:
        out /= x.size
    return out


@lru_cache(maxsize=64)
def good_thomas_maps(n1: int, n2: int) -> tuple[np.ndarray, np.ndarray]:
    """Index permutations for the prime-factor algorithm.

    Input: sample j goes to grid cell (j mod n1, j mod n2). Output: frequency k
    is read from cell (k*u1 mod n1, k*u2 mod n2) where u1, u2 are the CRT unit
    coefficients of (n1, n2). Both maps are computed with crtft.crt.
    """
    units = crt.unit_coefficients((n1, n2))
    n = n1 * n2
    in_idx = np.empty(n, dtype=np.int64)
    for j in range(n):
        a, b = crt.residues_of(j, (n1, n2))
        in_idx[a * n2 + b] = j
    out_idx = np.empty(n, dtype=np.int64)
    for k in range(n):
        out_idx[k] = (k * units[0] % n1) * n2 + k * units[1] % n2
    in_idx.setflags(write=False)
    out_idx.setflags(write=False)
    return in_idx, out_idx


def fft_good_thomas(v, factors: tuple[int, int], direction: str = FORWARD) -> np.ndarray:
    """Prime-factor DFT for n = n1*n2 with gcd(n1, n2) = 1; no twiddle stage."""
    x = as_complex_vector(v)
    sign = _sign(direction)
    n1, n2 = (int(f) for f in factors)
    if n1 < 2 or n2 < 2 or gcd(n1, n2) != 1:
        raise FactorsNotCoprime(f"factors ({n1}, {n2}) must be coprime and >= 2")
    if n1 * n2 != x.size:
        raise LengthMismatch(f"{n1}*{n2} != length {x.size}")
    in_idx, out_idx = good_thomas_maps(n1, n2)
    out = _backend.kernels.pfa(x, n1, n2, in_idx, out_idx, sign)
    if sign > 0:
        out /= x.size
    return out


def default_factors(n: int) -> tuple[int, int]:
    """Split n into (smallest prime-power factor, cofactor).

    Raises FactorsNotCoprime when n has fewer than two distinct primes.
    """
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n < 2 or n % p:
        raise FactorsNotCoprime(f"{n} has no coprime factorization")
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    if n == 1:
        raise FactorsNotCoprime(f"{q} is a prime power; no coprime split")
    return q, n


def dft(v, method: str = "naive", direction: str = FORWARD, factors=None) -> np.ndarray:
    """Dispatch on method name: ``naive``, ``radix2`` or ``good-thomas``."""
    if method == "naive":
        return dft_naive(v) if direction == FORWARD else idft_naive(v)
    if method == "radix2":
        return fft_radix2(v, direction)
    if method == "good-thomas":
        x = as_complex_vector(v)
        return fft_good_thomas(x, factors or default_factors(x.size), direction)
    raise ValueError(f"unknown method {method!r}")


def fft(v, direction: str = FORWARD) -> np.ndarray:
    """Fastest available exact-length DFT for ``v``."""
    x = as_complex_vector(v)
    n = x.size
    if is_power_of_two(n):
        return fft_radix2(x, direction)
    try:
        factors = default_factors(n)
    except FactorsNotCoprime:
        return dft(x, "naive", direction)
    return fft_good_thomas(x, factors, direction)
