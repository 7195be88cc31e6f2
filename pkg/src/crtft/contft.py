"""Dual-grid discretization of the continuous Fourier transform.

Spatial samples sit at x_j = -N/2 + j/M and frequencies at y_k = -M/2 + k/N,
j, k = 0..MN-1. Because M*x_j and N*y_k both run through the integers
-MN/2..MN/2-1, the Riemann sum for f^(y_k) is a length-MN DFT after a
half-length rotation of both index sets.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

import numpy as np

from . import _backend
from .errors import InvalidGrid, LengthMismatch, NonFiniteSample
from .polydft import FORWARD, INVERSE, fft

TAIL_TOLERANCE = 1e-12


class TailWarning(UserWarning):
    """The sampled function is not negligible at the window edge."""


@dataclass(frozen=True)
class GridParams:
    big_n: int
    big_m: int

    def __post_init__(self):
        for name, v in (("N", self.big_n), ("M", self.big_m)):
            if int(v) != v or v < 2 or v % 2:
                raise InvalidGrid(f"{name} must be an even integer >= 2, got {v}")
        object.__setattr__(self, "big_n", int(self.big_n))
        object.__setattr__(self, "big_m", int(self.big_m))

    @property
    def size(self) -> int:
        return self.big_n * self.big_m

    @property
    def half(self) -> int:
        return self.size // 2

    def x(self) -> np.ndarray:
        return -self.big_n / 2 + np.arange(self.size) / self.big_m

    def y(self) -> np.ndarray:
        return -self.big_m / 2 + np.arange(self.size) / self.big_n

    def spatial_integers(self) -> np.ndarray:
        """M*x_j as exact integers."""
        return np.arange(self.size, dtype=np.int64) - self.half

    def frequency_integers(self) -> np.ndarray:
        """N*y_k as exact integers."""
        return np.arange(self.size, dtype=np.int64) - self.half


def _grid_values(grid: GridParams, values, what: str) -> np.ndarray:
    arr = np.ascontiguousarray(values, dtype=np.complex128)
    if arr.shape != (grid.size,):
        raise LengthMismatch(f"{what} needs {grid.size} values, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteSample(f"{what} contains NaN or Inf")
    return arr


@dataclass(frozen=True, eq=False)
class SampledFunction:
    grid: GridParams
    samples: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "samples", _grid_values(self.grid, self.samples, "samples"))

    @property
    def points(self) -> np.ndarray:
        return self.grid.x()


@dataclass(frozen=True, eq=False)
class Spectrum:
    grid: GridParams
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _grid_values(self.grid, self.values, "spectrum"))

    @property
    def points(self) -> np.ndarray:
        return self.grid.y()


@dataclass(frozen=True)
class TestFunction:
    name: str
    evaluator: Callable[[np.ndarray], np.ndarray]
    analytic_transform: Optional[Callable[[np.ndarray], np.ndarray]] = field(default=None)

    __test__ = False  # not a pytest class

    def __call__(self, x):
        return self.evaluator(np.asarray(x, dtype=np.float64))


def gaussian(width: float = 1.0) -> TestFunction:
    """exp(-pi (x/width)^2), whose transform is width * exp(-pi (width y)^2)."""
    width = float(width)
    if not width > 0:
        raise ValueError("width must be positive")
    name = "gaussian" if width == 1.0 else f"gaussian:{width:g}"
    return TestFunction(
        name,
        lambda x: np.exp(-np.pi * (x / width) ** 2).astype(np.complex128),
        lambda y: (width * np.exp(-np.pi * (width * y) ** 2)).astype(np.complex128),
    )


def zero_function() -> TestFunction:
    def zero(x):
        return np.zeros(np.shape(x), dtype=np.complex128)

    return TestFunction("zero", zero, zero)


def builtin_function(spec: str) -> TestFunction:
    """Parse ``gaussian``, ``gaussian:<width>`` or ``zero``."""
    name, _, arg = spec.partition(":")
    if name == "gaussian":
        return gaussian(float(arg) if arg else 1.0)
    if name == "zero" and not arg:
        return zero_function()
    raise KeyError(f"unknown function {spec!r}")


def _evaluate(f: TestFunction, pts: np.ndarray) -> np.ndarray:
    vals = np.asarray(f(pts), dtype=np.complex128)
    if vals.shape != pts.shape:
        vals = np.broadcast_to(vals, pts.shape).copy()
    if not np.all(np.isfinite(vals)):
        raise NonFiniteSample(f"{f.name} returned NaN or Inf")
    return vals


def sample(f: TestFunction, grid: GridParams) -> SampledFunction:
    """samples[j] = f(x_j). Warns with TailWarning if |f(+-N/2)| >= 1e-12."""
    samples = _evaluate(f, grid.x())
    edges = _evaluate(f, np.array([-grid.big_n / 2, grid.big_n / 2]))
    tail = float(np.max(np.abs(edges)))
    if tail >= TAIL_TOLERANCE:
        warnings.warn(
            f"|{f.name}(+-{grid.big_n // 2})| = {tail:.3g}; window truncation is visible",
            TailWarning,
            stacklevel=2,
        )
    return SampledFunction(grid, samples)


def sample_transform(f: TestFunction, grid: GridParams) -> Spectrum:
    """Spectrum holding the analytic transform of ``f`` on the y-grid."""
    if f.analytic_transform is None:
        raise ValueError(f"{f.name} has no analytic transform")
    pts = grid.y()
    vals = np.asarray(f.analytic_transform(pts), dtype=np.complex128)
    return Spectrum(grid, np.broadcast_to(vals, pts.shape))


def forward(sampled: SampledFunction) -> Spectrum:
    """values[k] = (1/M) sum_j f(x_j) exp(-2 pi i (M x_j)(N y_k)/(MN))."""
    grid = sampled.grid
    rotated = np.roll(sampled.samples, -grid.half)
    out = np.roll(fft(rotated, FORWARD), grid.half) / grid.big_m
    return Spectrum(grid, out)


def inverse(spectrum: Spectrum) -> SampledFunction:
    """samples[j] = (1/N) sum_k values[k] exp(+2 pi i (N y_k)(M x_j)/(MN))."""
    grid = spectrum.grid
    rotated = np.roll(spectrum.values, -grid.half)
    # fft(..., INVERSE) already divides by MN
    out = np.roll(fft(rotated, INVERSE), grid.half) * grid.big_m
    return SampledFunction(grid, out)


def forward_direct(sampled: SampledFunction) -> Spectrum:
    """Riemann sum with exp(-2 pi i x_j y_k) evaluated pointwise; O((MN)^2)."""
    grid = sampled.grid
    vals = _backend.kernels.direct_sum(sampled.samples, grid.x(), grid.y(), 1.0 / grid.big_m, -1)
    return Spectrum(grid, vals)


def inverse_direct(spectrum: Spectrum) -> SampledFunction:
    grid = spectrum.grid
    vals = _backend.kernels.direct_sum(spectrum.values, grid.y(), grid.x(), 1.0 / grid.big_n, 1)
    return SampledFunction(grid, vals)


def dirichlet_kernel(x, grid: GridParams):
    """sin(pi M x + pi x/N) / sin(pi x/N), with MN + 1 where x/N is an integer.

    Accepts a scalar or an array; points within 1e-9 of an integer x/N take
    the limiting value.
    """
    t = np.asarray(x, dtype=np.float64) / grid.big_n
    singular = np.abs(t - np.round(t)) < 1e-9
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.sin(np.pi * (grid.size + 1) * t) / np.sin(np.pi * t)
    out = np.where(singular, float(grid.size + 1), ratio)
    return float(out) if out.ndim == 0 else out


def dirichlet_sum(x, grid: GridParams):
    """sum_{k=0}^{MN} exp(-2 pi i (x/N)(k - MN/2)) summed term by term."""
    t = np.atleast_1d(np.asarray(x, dtype=np.float64)) / grid.big_n
    k = np.arange(grid.size + 1) - grid.half
    out = np.exp(-2j * np.pi * np.outer(t, k)).sum(axis=1)
    return complex(out[0]) if np.ndim(x) == 0 else out


def recover_f0(spectrum: Spectrum) -> complex:
    """(1/N) sum_k values[k], the inverse formula evaluated at x = 0."""
    return complex(spectrum.values.sum() / spectrum.grid.big_n)


class PoissonResult(NamedTuple):
    lhs: complex
    rhs: complex
    gap: float


def poisson_check(f: TestFunction, grid: GridParams) -> PoissonResult:
    """Compare sum f(n) over integers in [-N/2, N/2) with the integer-frequency
    entries values[0], values[N], ..., values[(M-1)N] of the forward transform.
    """
    ints = np.arange(-grid.big_n // 2, grid.big_n // 2, dtype=np.float64)
    lhs = complex(_evaluate(f, ints).sum())
    spectrum = forward(sample(f, grid))
    rhs = complex(spectrum.values[:: grid.big_n].sum())
    return PoissonResult(lhs, rhs, abs(lhs - rhs))

