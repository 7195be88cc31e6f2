"""Time the compiled kernels against the NumPy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from crtft import _backend, polydft


def cases(rng):
    def vec(n):
        return rng.standard_normal(n) + 1j * rng.standard_normal(n)

    for n in (256, 1024, 4096):
        v = vec(n)
        yield f"dft_naive n={n}", lambda k, v=v: k.dft_naive(v, -1)
    for n in (1024, 4096, 65536):
        v = vec(n)
        yield f"fft_radix2 n={n}", lambda k, v=v: k.fft_radix2(v, -1)
    for n1, n2 in ((3, 5), (63, 64), (255, 256)):
        v = vec(n1 * n2)
        maps = polydft.good_thomas_maps(n1, n2)
        yield f"pfa n={n1}*{n2}", lambda k, v=v, a=n1, b=n2, m=maps: k.pfa(v, a, b, *m, -1)
    for size in (256, 1024):
        v = vec(size)
        pts = np.linspace(-8, 8, size)
        yield f"direct_sum n={size}", lambda k, v=v, p=pts: k.direct_sum(v, p, p, 1.0, -1)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _backend.compiled_kernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e .` first")
    backends = {"compiled": _backend.compiled_kernels, "python": _backend.python_kernels}
    rng = np.random.default_rng(0)
    print(f"{'kernel':<24}{'compiled ms':>14}{'python ms':>14}{'speedup':>10}")
    for name, fn in cases(rng):
        t = {}
        for label, k in backends.items():
            timer = timeit.Timer(lambda: fn(k))
            number, _ = timer.autorange()
            t[label] = min(timer.repeat(args.repeat, number)) / number * 1e3
        print(f"{name:<24}{t['compiled']:>14.3f}{t['python']:>14.3f}{t['python'] / t['compiled']:>9.1f}x")


if __name__ == "__main__":
    main()
