"""Command-line front end.

Usage::

    fftpoly fft  poly.json --n 2 --root 4 [--algo iterative] [--inverse] [-o out.json]
    fftpoly mul  a.json b.json [--algo fft|naive] [-o out.json]
    fftpoly trace poly.json --n 2 --root 4
    fftpoly bench --sizes 1024,4096 --algos naive,fft --repeat 3 --seed 0 --format json
    fftpoly selfcheck --trials 200 --seed 0 --max-n 6

Exit codes: 0 success, 1 property failure, 2 input/parse error,
3 precondition violation (size, root, order).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .algebra import DEFAULT_MODULUS, ComplexField, FftPlan
from .bench import ALGORITHMS, run_bench
from .documents import DocumentError, domain_to_dict, element_to_json, parse_document, serialize_document
from .errors import DomainMismatch, InvalidRoot, NonInvertibleOrder, OrderUnavailable, SizeExceedsOrder
from .inverse import ENGINES, fft_mul, ifft
from .iterative import stages
from .poly import Polynomial, naive_mul
from .selfcheck import run_selfcheck

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str, modulus: int) -> Polynomial:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc}") from exc
    try:
        return parse_document(text, modulus)
    except DocumentError as exc:
        raise CliError(EXIT_INPUT, f"{path}: {exc}") from exc


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text + "\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")


def _parse_root(spec: str, p: Polynomial) -> Any:
    if isinstance(p.domain, ComplexField):
        parts = spec.split(",")
        try:
            if len(parts) == 2:
                return complex(float(parts[0]), float(parts[1]))
            return complex(spec.replace(" ", ""))
        except ValueError as exc:
            raise CliError(EXIT_INPUT, f"cannot parse complex root {spec!r}") from exc
    try:
        return int(spec)
    except ValueError as exc:
        raise CliError(EXIT_INPUT, f"cannot parse root {spec!r} as an integer") from exc


def _plan(args: argparse.Namespace, p: Polynomial) -> FftPlan:
    n = args.n
    if n is None:
        n = max(p.size - 1, 0).bit_length()
    if n < 0:
        raise CliError(EXIT_PRECONDITION, "--n must be a natural number")
    if args.root is not None:
        return FftPlan.create(p.domain, n, _parse_root(args.root, p))
    return FftPlan.create(p.domain, n, sign=args.sign)


def cmd_fft(args: argparse.Namespace) -> int:
    p = _read(args.input, args.modulus)
    plan = _plan(args, p)
    if args.inverse:
        out = ifft(plan.n, plan.w, p, engine=args.algo)
    else:
        out = ENGINES[args.algo](plan.n, plan.w, p)
    _write(serialize_document(out), args.output)
    return EXIT_OK


def cmd_mul(args: argparse.Namespace) -> int:
    a = _read(args.a, args.modulus)
    b = _read(args.b, args.modulus)
    if a.domain != b.domain:
        raise CliError(EXIT_INPUT, f"domain mismatch: {a.domain} vs {b.domain}")
    out = naive_mul(a, b) if args.algo == "naive" else fft_mul(a, b)
    _write(serialize_document(out), args.output)
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    p = _read(args.input, args.modulus)
    plan = _plan(args, p)
    dom = p.domain
    doc = {
        **domain_to_dict(dom),
        "n": plan.n,
        "root": element_to_json(dom, plan.w),
        "stages": [
            {
                "depth": s.depth,
                "root": element_to_json(dom, s.root),
                "coeffs": [element_to_json(dom, c) for c in s.data.coeffs],
            }
            for s in stages(plan.n, plan.w, p)
        ],
    }
    _write(json.dumps(doc), None)
    return EXIT_OK


def _parse_sizes(text: str) -> list[int]:
    sizes = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            sizes.append(2 ** int(tok[2:]) if tok.startswith("2^") else int(tok))
        except ValueError as exc:
            raise CliError(EXIT_INPUT, f"bad size {tok!r}") from exc
    return sizes


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = _parse_sizes(args.sizes)
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    bad = [a for a in algos if a not in ALGORITHMS]
    if bad:
        raise CliError(EXIT_INPUT, f"unknown algorithms {bad}; expected {list(ALGORITHMS)}")
    report = run_bench(sizes, algos, repeat=args.repeat, seed=args.seed, modulus=args.modulus)
    _write(report.to_json() if args.format == "json" else report.to_csv().rstrip("\n"), None)
    return EXIT_OK


def cmd_selfcheck(args: argparse.Namespace) -> int:
    results = run_selfcheck(trials=args.trials, seed=args.seed, max_n=args.max_n)
    width = max((len(r.name) for r in results), default=0)
    for r in results:
        status = "ok" if r.ok else "FAIL"
        print(f"{r.name:<{width}}  {r.passed}/{r.trials}  {status}")
    failed = [r for r in results if not r.ok]
    for r in failed:
        print(f"minimal failing input for {r.name}: {r.failure}", file=sys.stderr)
    print(f"{len(results) - len(failed)}/{len(results)} lemma suites passed")
    return EXIT_PROPERTY if failed else EXIT_OK


def _add_plan_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("input", help="polynomial document (JSON or plain integers), '-' for stdin")
    sp.add_argument("--n", type=int, default=None, help="transform length exponent (default: smallest fitting)")
    root = sp.add_mutually_exclusive_group()
    root.add_argument("--root", help="explicit primitive 2^n-th root (integer, or 're,im' / '1j' for complex)")
    root.add_argument("--auto", action="store_true", help="derive the root from the domain (default)")
    sp.add_argument("--sign", type=int, choices=(-1, 1), default=-1, help="exponent sign of the complex auto root")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fftpoly", description="Radix-2 FFT/NTT polynomial tools")
    parser.add_argument(
        "--modulus", type=int, default=DEFAULT_MODULUS, help="prime modulus for plain-text input and bench"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("fft", help="transform a polynomial")
    _add_plan_args(sp)
    sp.add_argument("--algo", choices=sorted(ENGINES), default="iterative")
    sp.add_argument("--inverse", action="store_true", help="apply the inverse transform for the given root")
    sp.add_argument("-o", "--output", help="output file (default stdout)")
    sp.set_defaults(func=cmd_fft)

    sp = sub.add_parser("mul", help="multiply two polynomials")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--algo", choices=("naive", "fft"), default="fft")
    sp.add_argument("-o", "--output", help="output file (default stdout)")
    sp.set_defaults(func=cmd_mul)

    sp = sub.add_parser("trace", help="print every stage of the iterative transform")
    _add_plan_args(sp)
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("bench", help="time naive vs FFT multiplication")
    sp.add_argument("--sizes", default="2^10,2^11,2^12", help="comma-separated powers of two (e.g. 1024 or 2^10)")
    sp.add_argument("--algos", default="naive,fft")
    sp.add_argument("--repeat", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("selfcheck", help="run the randomized lemma suites")
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-n", type=int, default=6)
    sp.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (DomainMismatch, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SizeExceedsOrder, InvalidRoot, NonInvertibleOrder, OrderUnavailable) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
