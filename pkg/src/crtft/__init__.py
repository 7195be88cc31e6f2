"""Chinese remaindering, CRT-indexed FFTs and a dual-grid continuous Fourier transform."""

from ._backend import BACKEND
from .crt import (
    CongruenceSystem,
    CrtSolution,
    mod_inverse,
    residues_of,
    solve,
    unit_coefficients,
    use_relation,
)
from .polydft import dft_naive, fft_good_thomas, fft_radix2, idft_lagrange, lagrange_units

__version__ = "0.1.0"
