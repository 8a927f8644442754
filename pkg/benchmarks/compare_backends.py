"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/compare_backends.py --sizes 2^8,2^10,2^12 --repeat 5

Both backends get identical inputs; their outputs are checked equal before
any timing is reported.
"""

import argparse
import random
import statistics
import sys
import time

from fftpoly import _kernels_py
from fftpoly.algebra import PrimeField, primitive_root_of_order

try:
    from fftpoly import _ckernels
except ImportError:
    _ckernels = None


def parse_sizes(text):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        out.append(2 ** int(tok[2:]) if tok.startswith("2^") else int(tok))
    return out


def timed(fn, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="2^8,2^10,2^12")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--modulus", type=int, default=998244353)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--skip-convolve-above", type=int, default=4096,
                        help="pure-Python convolution is quadratic; skip it past this size")
    args = parser.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    dom = PrimeField(args.modulus)
    p = args.modulus
    print(f"{'kernel':<10}{'size':>8}{'python (s)':>14}{'compiled (s)':>14}{'speedup':>10}")
    for size in parse_sizes(args.sizes):
        rng = random.Random(f"{args.seed}:{size}")
        a = [rng.randrange(p) for _ in range(size)]
        b = [rng.randrange(p) for _ in range(size)]
        n = size.bit_length() - 1
        w = primitive_root_of_order(dom, n)

        jobs = [("ntt", lambda k: k.ntt(a, n, w, p))]
        if size <= args.skip_convolve_above:
            jobs.append(("convolve", lambda k: k.convolve(a, b, p)))
        for name, job in jobs:
            if job(_kernels_py) != job(_ckernels):
                print(f"{name} outputs differ at size {size}", file=sys.stderr)
                return 1
            slow = timed(lambda: job(_kernels_py), args.repeat)
            fast = timed(lambda: job(_ckernels), args.repeat)
            print(f"{name:<10}{size:>8}{slow:>14.3e}{fast:>14.3e}{slow / fast:>10.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
