"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain-constraint violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Sequence, TextIO

import numpy as np

from . import contft, crt, polydft
from .errors import DomainError, LengthMismatch

EXIT_USAGE = 1
EXIT_DOMAIN = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x: float) -> str:
    return f"{x:.17g}"


def fmt_complex(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}j"


def write_csv(out: TextIO, header: str, coords, values) -> None:
    """Write ``header`` then one ``coord,re,im`` row per value."""
    out.write(f"{header},re,im\n")
    for c, v in zip(coords, values):
        c = str(c) if isinstance(c, (int, np.integer)) else fmt(c)
        out.write(f"{c},{fmt(v.real)},{fmt(v.imag)}\n")


def read_csv(src: TextIO) -> tuple[str, np.ndarray, np.ndarray]:
    """Parse a ``<coord>,re,im`` table. Returns (coord name, coords, values)."""
    rows = list(csv.reader(src))
    rows = [r for r in rows if r]
    if not rows:
        raise UsageError("empty CSV input")
    header = [h.strip() for h in rows[0]]
    if len(header) != 3 or header[1:] != ["re", "im"]:
        raise UsageError(f"bad CSV header {rows[0]!r}; expected <coord>,re,im")
    try:
        coords = np.array([float(r[0]) for r in rows[1:]])
        values = np.array([complex(float(r[1]), float(r[2])) for r in rows[1:]])
    except (ValueError, IndexError) as exc:
        raise UsageError(f"bad CSV row: {exc}") from None
    if any(len(r) != 3 for r in rows[1:]):
        raise UsageError("every CSV row needs exactly three fields")
    return header[0], coords, values


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _open_in(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    try:
        return open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, render) -> None:
    buf = io.StringIO()
    render(buf)
    if getattr(args, "output", None) and args.output != "-":
        with open(args.output, "w", newline="", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())


def cmd_crt(args) -> None:
    sol = crt.solve_residues(args.mod, args.res)
    print(f"n={sol.value}")
    print(f"gamma={sol.gamma}")
    for j, u in enumerate(sol.unit_coeffs):
        print(f"u_{j}={u}")
    print(f"l={sol.use_index}")
    print(f"use={sol.use_label}")


def cmd_dft(args) -> None:
    with _open_in(args.input) as fh:
        _, _, values = read_csv(fh)
    direction = polydft.INVERSE if args.inverse else polydft.FORWARD
    factors = tuple(args.factors) if args.factors else None
    if factors is not None and len(factors) != 2:
        raise UsageError("--factors takes exactly two integers")
    out = polydft.dft(values, args.method, direction, factors)
    _emit(args, lambda fh: write_csv(fh, "index", range(out.size), out))


def _check_coords(coords: np.ndarray, expected: np.ndarray, name: str) -> None:
    if coords.shape != expected.shape:
        raise LengthMismatch(f"grid needs {expected.size} rows, got {coords.size}")
    if not np.allclose(coords, expected, rtol=0, atol=1e-9):
        raise LengthMismatch(f"{name} column does not match the requested grid")


def cmd_contft(args) -> None:
    grid = contft.GridParams(args.n, args.m)
    if (args.function is None) == (args.input is None):
        raise UsageError("give exactly one of --function or --input")
    if args.function is not None:
        f = _function(args.function)
    if args.direction == "forward":
        if args.input is not None:
            with _open_in(args.input) as fh:
                _, coords, values = read_csv(fh)
            _check_coords(coords, grid.x(), "x")
            sampled = contft.SampledFunction(grid, values)
        else:
            sampled = contft.sample(f, grid)
        spec = contft.forward(sampled)
        _emit(args, lambda fh: write_csv(fh, "y", spec.points, spec.values))
    else:
        if args.input is not None:
            with _open_in(args.input) as fh:
                _, coords, values = read_csv(fh)
            _check_coords(coords, grid.y(), "y")
            spectrum = contft.Spectrum(grid, values)
        else:
            spectrum = contft.sample_transform(f, grid)
        res = contft.inverse(spectrum)
        _emit(args, lambda fh: write_csv(fh, "x", res.points, res.samples))


def _function(name: str) -> contft.TestFunction:
    try:
        return contft.builtin_function(name)
    except (KeyError, ValueError):
        raise UsageError(f"unknown function {name!r}; use gaussian[:width] or zero") from None


def cmd_poisson(args) -> None:
    f = _function(args.function)
    res = contft.poisson_check(f, contft.GridParams(args.n, args.m))
    print(f"lhs={fmt_complex(res.lhs)}")
    print(f"rhs={fmt_complex(res.rhs)}")
    print(f"gap={fmt(res.gap)}")


def cmd_dirichlet(args) -> None:
    print(fmt(contft.dirichlet_kernel(args.x, contft.GridParams(args.n, args.m))))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="crtft", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("crt", help="solve a system of congruences")
    s.add_argument("--mod", type=_int_list, required=True, help="moduli, e.g. 3,5,7")
    s.add_argument("--res", type=_int_list, required=True, help="residues, e.g. 2,3,2")
    s.set_defaults(func=cmd_crt)

    s = sub.add_parser("dft", help="discrete Fourier transform of an index,re,im CSV")
    s.add_argument("input", nargs="?", default="-", help="CSV path or - for stdin")
    s.add_argument("--method", choices=["naive", "radix2", "good-thomas"], default="naive")
    s.add_argument("--factors", type=_int_list, help="coprime split n1,n2 for good-thomas")
    s.add_argument("--inverse", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_dft)

    s = sub.add_parser("contft", help="dual-grid continuous Fourier transform")
    s.add_argument("direction", choices=["forward", "inverse"])
    s.add_argument("--function", help="gaussian, gaussian:<width> or zero")
    s.add_argument("--input", help="x,re,im (forward) or y,re,im (inverse) CSV; - for stdin")
    s.add_argument("--n", type=int, default=16)
    s.add_argument("--m", type=int, default=16)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_contft)

    s = sub.add_parser("poisson", help="finite Poisson summation check")
    s.add_argument("--function", default="gaussian")
    s.add_argument("--n", type=int, default=16)
    s.add_argument("--m", type=int, default=16)
    s.set_defaults(func=cmd_poisson)

    s = sub.add_parser("dirichlet", help="evaluate the Dirichlet kernel")
    s.add_argument("--x", type=float, required=True)
    s.add_argument("--n", type=int, default=16)
    s.add_argument("--m", type=int, default=16)
    s.set_defaults(func=cmd_dirichlet)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
