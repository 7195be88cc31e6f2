"""Exact integer Chinese remaindering.

All arithmetic uses Python ints, so moduli products of any size are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

from .errors import (
    InvalidModulus,
    NotCoprime,
    NotPairwiseCoprime,
    ResidueOutOfRange,
)

POSITIVE_USE = "positive use"
UNIVERSAL_USE = "universal use"
DEGENERATE = "degenerate"


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m``, normalized into ``[1, m - 1]``.

    Raises InvalidModulus for ``m < 2`` and NotCoprime when no inverse exists.
    """
    a, m = int(a), int(m)
    if m < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {m}")
    g, x, _ = extended_gcd(a % m, m)
    if g != 1:
        raise NotCoprime(f"gcd({a} mod {m}, {m}) = {g}")
    return x % m


def check_moduli(moduli: Sequence[int]) -> tuple[int, ...]:
    """Validate moduli (each >= 2, pairwise coprime) and return them as ints."""
    ms = tuple(int(m) for m in moduli)
    if not ms:
        raise InvalidModulus("at least one modulus is required")
    for m in ms:
        if m < 2:
            raise InvalidModulus(f"modulus must be >= 2, got {m}")
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            g = gcd(ms[i], ms[j])
            if g != 1:
                raise NotPairwiseCoprime(
                    f"moduli {ms[i]} and {ms[j]} share the factor {g}"
                )
    return ms


@dataclass(frozen=True)
class CongruenceSystem:
    """x = r_j (mod m_j) for pairwise coprime m_j; validated on construction."""

    moduli: tuple[int, ...]
    residues: tuple[int, ...]

    def __post_init__(self):
        ms = check_moduli(self.moduli)
        rs = tuple(int(r) for r in self.residues)
        if len(rs) != len(ms):
            raise ResidueOutOfRange(
                f"{len(ms)} moduli but {len(rs)} residues"
            )
        for r, m in zip(rs, ms):
            if not 0 <= r < m:
                raise ResidueOutOfRange(f"residue {r} not in [0, {m})")
        object.__setattr__(self, "moduli", ms)
        object.__setattr__(self, "residues", rs)


@dataclass(frozen=True)
class CrtSolution:
    value: int
    gamma: int
    unit_coeffs: tuple[int, ...]
    use_index: int

    @property
    def use_label(self) -> str:
        return classify_use(self.use_index)


@dataclass(frozen=True)
class UseRelation:
    index: int
    label: str


def residues_of(n: int, moduli: Sequence[int]) -> tuple[int, ...]:
    """Image of ``n`` under Z/(Gamma) -> prod Z/(m_j)."""
    ms = check_moduli(moduli)
    n = int(n)
    return tuple(n % m for m in ms)


def _unit_coefficients(ms: tuple[int, ...]) -> tuple[int, ...]:
    gamma = prod(ms)
    return tuple(mod_inverse((gamma // m) % m, m) for m in ms)


def unit_coefficients(moduli: Sequence[int]) -> tuple[int, ...]:
    """u_j = (Gamma/m_j)^-1 mod m_j, each in ``[1, m_j - 1]``.

    For a single modulus Gamma/m_0 = 1 and u_0 = 1.
    """
    return _unit_coefficients(check_moduli(moduli))


def classify_use(index: int) -> str:
    if index == 1:
        return POSITIVE_USE
    if index > 1:
        return UNIVERSAL_USE
    return DEGENERATE


def _use_index(ms: tuple[int, ...], units: tuple[int, ...]) -> int:
    gamma = prod(ms)
    total = sum(u * (gamma // m) for u, m in zip(units, ms))
    index, rem = divmod(total - 1, gamma)
    # rem != 0 would mean the unit coefficients are wrong
    assert rem == 0, (total, gamma)
    return index


def use_relation(moduli: Sequence[int]) -> UseRelation:
    """Find l with sum_j u_j * Gamma/m_j == 1 + l*Gamma and name it."""
    ms = check_moduli(moduli)
    index = _use_index(ms, _unit_coefficients(ms))
    return UseRelation(index, classify_use(index))


def solve(system: CongruenceSystem) -> CrtSolution:
    """Unique n in [0, Gamma) satisfying every congruence of ``system``."""
    ms, rs = system.moduli, system.residues
    gamma = prod(ms)
    units = _unit_coefficients(ms)
    value = sum(r * u * (gamma // m) for r, u, m in zip(rs, units, ms)) % gamma
    return CrtSolution(value, gamma, units, _use_index(ms, units))


def solve_residues(moduli: Sequence[int], residues: Sequence[int]) -> CrtSolution:
    return solve(CongruenceSystem(tuple(moduli), tuple(residues)))
