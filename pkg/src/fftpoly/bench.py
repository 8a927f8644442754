"""Timing naive schoolbook multiplication against FFT multiplication."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import random
import statistics
import time
from dataclasses import asdict, dataclass, field

from . import kernels
from .algebra import DEFAULT_MODULUS, FftPlan, PrimeField
from .errors import OrderUnavailable
from .inverse import fft_mul
from .poly import Polynomial, naive_mul

ALGORITHMS = ("naive", "fft")


@dataclass
class BenchRow:
    algorithm: str
    size: int
    repeat: int
    min_s: float
    median_s: float
    samples: list[float]
    input_digest: str


@dataclass
class BenchReport:
    seed: int
    modulus: int
    backend: str
    rows: list[BenchRow] = field(default_factory=list)

    def row(self, algorithm: str, size: int) -> BenchRow:
        return next(r for r in self.rows if r.algorithm == algorithm and r.size == size)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["algorithm", "size", "repeat", "min_s", "median_s", "seed", "backend", "input_digest"])
        for r in self.rows:
            writer.writerow(
                [r.algorithm, r.size, r.repeat, f"{r.min_s:.6g}", f"{r.median_s:.6g}", self.seed, self.backend, r.input_digest]
            )
        return buf.getvalue()


def bench_inputs(size: int, seed: int, dom: PrimeField) -> tuple[Polynomial, Polynomial]:
    """Two random polynomials with ``size`` coefficients each, fixed by ``seed``."""
    rng = random.Random(f"{seed}:{size}")
    a = [rng.randrange(dom.modulus) for _ in range(size)]
    b = [rng.randrange(dom.modulus) for _ in range(size)]
    return Polynomial(dom, a), Polynomial(dom, b)


def _digest(p: Polynomial, q: Polynomial) -> str:
    h = hashlib.sha256(repr((p.coeffs, q.coeffs)).encode())
    return h.hexdigest()[:16]


def _order(size: int) -> int:
    # the product has 2*size - 1 coefficients
    return (2 * size - 2).bit_length()


def check_sizes(sizes: list[int], dom: PrimeField) -> None:
    for s in sizes:
        if s < 1 or s & (s - 1):
            raise OrderUnavailable(f"benchmark size {s} is not a power of two")
        if _order(s) > dom.two_adicity:
            raise OrderUnavailable(f"size {s} exceeds the 2-adic capacity of {dom}")


def run_bench(
    sizes: list[int],
    algorithms: list[str] = list(ALGORITHMS),
    repeat: int = 3,
    seed: int = 0,
    modulus: int = DEFAULT_MODULUS,
) -> BenchReport:
    dom = PrimeField(modulus)
    check_sizes(sizes, dom)
    if repeat < 1:
        raise ValueError("repeat must be at least 1")
    for a in algorithms:
        if a not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {a!r}")
    report = BenchReport(seed, modulus, kernels.backend_for(modulus))
    for size in sizes:
        p, q = bench_inputs(size, seed, dom)
        # root finding stays outside the timed region
        plan = FftPlan.create(dom, _order(size))
        for algo in algorithms:
            samples = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                if algo == "naive":
                    naive_mul(p, q)
                else:
                    fft_mul(p, q, plan=plan)
                samples.append(time.perf_counter() - t0)
            report.rows.append(
                BenchRow(
                    algo,
                    size,
                    repeat,
                    min(samples),
                    statistics.median(samples),
                    samples,
                    _digest(p, q),
                )
            )
    return report
