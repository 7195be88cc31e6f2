import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crtft import polydft
from crtft.errors import (
    EmptyInput,
    FactorsNotCoprime,
    LengthMismatch,
    NonFiniteValue,
    NotPowerOfTwo,
)

from conftest import random_complex


def textbook_dft(v):
    """Direct evaluation of sum_j v[j] exp(-2 pi i j k / n) with cmath."""
    n = len(v)
    return np.array(
        [sum(v[j] * cmath.exp(-2j * cmath.pi * j * k / n) for j in range(n)) for k in range(n)]
    )


class TestRootPlan:
    @pytest.mark.parametrize("n", [1, 2, 3, 7, 64, 1000, 4096])
    def test_unit_modulus(self, n):
        plan = polydft.root_plan(n)
        assert np.max(np.abs(np.abs(plan.powers) - 1)) < 1e-12
        assert abs(plan.omega**n - 1) < 1e-12

    def test_omega(self):
        assert abs(polydft.root_plan(4).omega - (-1j)) < 1e-15


class TestDftNaive:
    def test_impulse(self, backend):
        np.testing.assert_allclose(polydft.dft_naive([1, 0, 0, 0]), [1, 1, 1, 1], atol=1e-15)

    def test_constant(self, backend):
        np.testing.assert_allclose(polydft.dft_naive([1, 1, 1, 1]), [4, 0, 0, 0], atol=1e-15)

    def test_zero(self, backend):
        assert not np.any(polydft.dft_naive(np.zeros(9)))

    @pytest.mark.parametrize("n", [1, 2, 5, 12, 31])
    def test_textbook(self, backend, rng, n):
        v = random_complex(rng, n)
        np.testing.assert_allclose(polydft.dft_naive(v), textbook_dft(v), atol=1e-11)

    def test_empty(self):
        with pytest.raises(EmptyInput):
            polydft.dft_naive([])

    def test_non_finite(self):
        with pytest.raises(NonFiniteValue):
            polydft.dft_naive([1, np.nan])

    def test_input_untouched(self, backend, rng):
        v = random_complex(rng, 16)
        keep = v.copy()
        polydft.dft_naive(v)
        polydft.fft_radix2(v)
        polydft.fft_good_thomas(v[:15], (3, 5))
        np.testing.assert_array_equal(v, keep)


class TestLagrange:
    def test_units_n1(self):
        np.testing.assert_allclose(polydft.lagrange_units(1), [1])

    def test_units_n4(self):
        # w = -i; u_j = 1/prod_{l != j}(w^j - w^l) = w^j / 4
        expected = [0.25, -0.25j, -0.25, 0.25j]
        np.testing.assert_allclose(polydft.lagrange_units(4), expected, atol=1e-15)

    @pytest.mark.parametrize("n, tol", [(8, 1e-12), (100, 1e-10), (256, 1e-10)])
    def test_units_closed_form(self, n, tol):
        closed = np.array([cmath.exp(-2j * cmath.pi * j / n) / n for j in range(n)])
        assert np.max(np.abs(polydft.lagrange_units(n) - closed)) < tol

    def test_basis_is_quotient(self):
        # (X^n - 1) = (X - a) * row, checked by polynomial multiplication
        n = 6
        basis = polydft.lagrange_basis(n)
        for k in range(n):
            a = polydft.root_plan(n).powers[k]
            prod_coeffs = np.convolve(basis[k], [-a, 1])
            target = np.zeros(n + 1, complex)
            target[0], target[n] = -1, 1
            np.testing.assert_allclose(prod_coeffs, target, atol=1e-13)

    @pytest.mark.parametrize("n", [1, 2, 3, 16, 45, 64])
    def test_round_trip(self, backend, rng, n):
        v = random_complex(rng, n)
        assert np.max(np.abs(polydft.idft_lagrange(polydft.dft_naive(v)) - v)) < 1e-10

    def test_constant_spectrum(self):
        c = 2.5 - 1j
        out = polydft.idft_lagrange(np.full(10, c))
        np.testing.assert_allclose(out, [c] + [0] * 9, atol=1e-14)

    @pytest.mark.parametrize("n", [1, 4, 17, 128, 256])
    def test_partition_of_unity(self, n):
        expected = np.zeros(n)
        expected[0] = 1
        assert np.max(np.abs(polydft.partition_of_unity(n) - expected)) < 1e-10


class TestRadix2:
    def test_length_one(self, backend):
        assert polydft.fft_radix2([3 + 4j])[0] == 3 + 4j

    @pytest.mark.parametrize("n", [2, 4, 8, 256, 4096])
    def test_matches_naive(self, backend, rng, n):
        v = random_complex(rng, n)
        assert np.max(np.abs(polydft.fft_radix2(v) - polydft.dft_naive(v))) < 1e-9

    @pytest.mark.parametrize("n", [1, 16, 1024])
    def test_round_trip(self, backend, rng, n):
        v = random_complex(rng, n)
        back = polydft.fft_radix2(polydft.fft_radix2(v), polydft.INVERSE)
        assert np.max(np.abs(back - v)) < 1e-10

    def test_inverse_matches_naive(self, backend, rng):
        v = random_complex(rng, 32)
        np.testing.assert_allclose(polydft.fft_radix2(v, "inverse"), polydft.idft_naive(v), atol=1e-12)

    @pytest.mark.parametrize("n", [3, 6, 12])
    def test_not_power_of_two(self, n):
        with pytest.raises(NotPowerOfTwo):
            polydft.fft_radix2(np.ones(n))

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            polydft.fft_radix2(np.ones(4), "sideways")


class TestGoodThomas:
    def test_impulse_12(self, backend):
        v = np.zeros(12)
        v[0] = 1
        np.testing.assert_allclose(polydft.fft_good_thomas(v, (3, 4)), np.ones(12), atol=1e-14)

    def test_constant_6(self, backend):
        c = 0.5 + 2j
        out = polydft.fft_good_thomas(np.full(6, c), (2, 3))
        np.testing.assert_allclose(out, [6 * c, 0, 0, 0, 0, 0], atol=1e-14)

    @pytest.mark.parametrize("factors", [(3, 5), (5, 3), (2, 3), (4, 15), (7, 9), (63, 64)])
    def test_matches_naive(self, backend, rng, factors):
        v = random_complex(rng, factors[0] * factors[1])
        assert np.max(np.abs(polydft.fft_good_thomas(v, factors) - polydft.dft_naive(v))) < 1e-9

    @pytest.mark.parametrize("factors", [(3, 5), (8, 9)])
    def test_round_trip(self, backend, rng, factors):
        v = random_complex(rng, factors[0] * factors[1])
        out = polydft.fft_good_thomas(v, factors)
        assert np.max(np.abs(polydft.fft_good_thomas(out, factors, "inverse") - v)) < 1e-10

    def test_maps_are_permutations(self):
        in_idx, out_idx = polydft.good_thomas_maps(4, 15)
        assert sorted(in_idx) == list(range(60))
        assert sorted(out_idx) == list(range(60))

    def test_input_map_is_residue_map(self):
        in_idx, _ = polydft.good_thomas_maps(3, 5)
        for cell, j in enumerate(in_idx):
            assert (j % 3, j % 5) == divmod(cell, 5)

    @pytest.mark.parametrize("factors", [(2, 4), (6, 9), (1, 15)])
    def test_factors_not_coprime(self, factors):
        with pytest.raises(FactorsNotCoprime):
            polydft.fft_good_thomas(np.ones(factors[0] * factors[1]), factors)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            polydft.fft_good_thomas(np.ones(14), (3, 5))


class TestDispatch:
    @pytest.mark.parametrize(
        "n, expected",
        [(6, (2, 3)), (12, (4, 3)), (15, (3, 5)), (60, (4, 15)), (4032, (64, 63)), (45, (9, 5))],
    )
    def test_default_factors(self, n, expected):
        assert polydft.default_factors(n) == expected

    @pytest.mark.parametrize("n", [1, 2, 8, 13, 49])
    def test_default_factors_fail(self, n):
        with pytest.raises(FactorsNotCoprime):
            polydft.default_factors(n)

    @pytest.mark.parametrize("n", [7, 8, 12, 49])
    def test_fft_picks_any_length(self, backend, rng, n):
        v = random_complex(rng, n)
        np.testing.assert_allclose(polydft.fft(v), polydft.dft_naive(v), atol=1e-11)
        np.testing.assert_allclose(polydft.fft(polydft.fft(v), "inverse"), v, atol=1e-12)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            polydft.dft(np.ones(4), "bluestein")


def _implementations(n):
    impls = [polydft.dft_naive]
    if polydft.is_power_of_two(n):
        impls.append(polydft.fft_radix2)
    try:
        factors = polydft.default_factors(n)
    except FactorsNotCoprime:
        pass
    else:
        impls.append(lambda v: polydft.fft_good_thomas(v, factors))
    return impls


sizes = st.sampled_from([1, 2, 6, 8, 10, 12, 15, 16, 20, 32, 36, 60, 64])


@settings(max_examples=60, deadline=None)
@given(sizes, st.integers(0, 2**32 - 1))
def test_parseval(n, seed):
    v = random_complex(np.random.default_rng(seed), n)
    energy = np.sum(np.abs(v) ** 2)
    for impl in _implementations(n):
        spec_energy = np.sum(np.abs(impl(v)) ** 2) / n
        assert abs(spec_energy - energy) <= 1e-9 * energy


@settings(max_examples=60, deadline=None)
@given(sizes, st.integers(0, 2**32 - 1))
def test_linearity(n, seed):
    r = np.random.default_rng(seed)
    a, b = random_complex(r, n), random_complex(r, n)
    alpha, beta = random_complex(r, 2)
    for impl in _implementations(n):
        lhs = impl(alpha * a + beta * b)
        rhs = alpha * impl(a) + beta * impl(b)
        assert np.max(np.abs(lhs - rhs)) < 1e-10


@settings(max_examples=60, deadline=None)
@given(sizes, st.integers(0, 2**32 - 1))
def test_implementations_agree(n, seed):
    v = random_complex(np.random.default_rng(seed), n)
    outs = [impl(v) for impl in _implementations(n)]
    for i in range(len(outs)):
        for j in range(i + 1, len(outs)):
            assert np.max(np.abs(outs[i] - outs[j])) < 1e-9


def test_concurrent_calls_match_sequential(backend, rng):
    from concurrent.futures import ThreadPoolExecutor

    vecs = [random_complex(rng, n) for n in (60, 64, 63 * 64, 256, 15, 4096)]

    def work(v):
        return polydft.fft(v), polydft.dft_naive(v)

    sequential = [work(v) for v in vecs]
    with ThreadPoolExecutor(max_workers=4) as pool:
        threaded = list(pool.map(work, vecs))
    for (a1, b1), (a2, b2) in zip(sequential, threaded):
        np.testing.assert_array_equal(a1, a2)
        np.testing.assert_array_equal(b1, b2)
