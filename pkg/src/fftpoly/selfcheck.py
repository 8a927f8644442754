"""Randomized runs of the correctness lemmas, keyed by lemma name.

Each check draws one random instance, returns whether the stated equality
held, and a ``(scale, size)`` key used to report the smallest failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable

from .algebra import FftPlan, PrimeField, halve_root, is_primitive_root, primitive_root_of_order
from .inverse import ifft
from .iterative import check_all_results, istep, istep_aux, reverse_poly, step, step1
from .poly import (
    Polynomial,
    add,
    dilate,
    drop_poly,
    even_poly,
    odd_poly,
    shift_mul_xm,
    take_poly,
)
from .transform import _fft1, fft, fft1, naive_dft

BIG = PrimeField(998244353)
SMALL = PrimeField(17, generator=3)


@dataclass
class SuiteResult:
    name: str
    passed: int
    trials: int
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def _field(rng: random.Random, n: int) -> PrimeField:
    return SMALL if n <= SMALL.two_adicity and rng.random() < 0.25 else BIG


def _poly(rng: random.Random, dom: PrimeField, max_size: int) -> Polynomial:
    size = rng.randint(0, max_size)
    return Polynomial(dom, [rng.randrange(dom.modulus) for _ in range(size)])


def _root(rng: random.Random, dom: PrimeField, n: int) -> int:
    """A random primitive 2^n-th root: an odd power of the canonical one."""
    w = primitive_root_of_order(dom, n)
    return dom.pow(w, rng.randrange(1, 1 << n, 2)) if n else w


def _any(rng: random.Random, dom: PrimeField) -> int:
    return rng.randrange(dom.modulus)


def leaf_results(depth: int, leaf: int, w: Any, p: Polynomial) -> Polynomial:
    """Concatenate the leaf ``fft1`` results of ``p`` at ``depth``, left to right."""
    if depth == 0:
        return _fft1(p.domain, leaf, w, p)
    left = leaf_results(depth - 1, leaf, w, even_poly(p))
    right = leaf_results(depth - 1, leaf, w, odd_poly(p))
    return add(left, shift_mul_xm(right, 1 << (leaf + depth - 1)))


Check = Callable[[random.Random, int], "tuple[bool, tuple, str]"]


def _fftE(rng, max_n):
    n = rng.randint(0, max_n)
    dom = _field(rng, n)
    w = _root(rng, dom, n)
    p = _poly(rng, dom, 1 << n)
    ok = fft(n, w, p) == naive_dft(FftPlan.create(dom, n, w), p)
    return ok, (n, p.size), f"n={n} w={w} p={p}"


def _fft1E(rng, max_n):
    n = rng.randint(0, max_n)
    dom = _field(rng, n)
    w = _root(rng, dom, n)
    p = _poly(rng, dom, 1 << n)
    return fft1(n, w, p) == fft(n, w, p), (n, p.size), f"n={n} w={w} p={p}"


def _step1E(rng, max_n):
    m = rng.randint(0, max(0, max_n - 1))
    n = rng.randint(0, max(0, max_n - 1 - m))
    dom = _field(rng, 0)
    w = _any(rng, dom)
    p = _poly(rng, dom, 1 << (m + n + 1))
    return step1(m, n, w, p) == step(m, n, w, p), (m + n, p.size), f"m={m} n={n} w={w} p={p}"


def _istep_fft1(rng, max_n):
    n = rng.randint(0, max_n)
    dom = _field(rng, n)
    w = _root(rng, dom, n)
    p = _poly(rng, dom, 1 << n)
    expected = fft1(n, w, p)
    ok = istep(n, w, p) == expected and istep_aux(n, 0, w, reverse_poly(n, p)) == expected
    return ok, (n, p.size), f"n={n} w={w} p={p}"


def _fftK(rng, max_n):
    n = rng.randint(0, max_n)
    dom = _field(rng, n)
    w = _root(rng, dom, n)
    p = _poly(rng, dom, 1 << n)
    return ifft(n, w, fft(n, w, p)) == p, (n, p.size), f"n={n} w={w} p={p}"


def _poly_take_drop(rng, max_n):
    dom = _field(rng, 0)
    p = _poly(rng, dom, 1 << max_n)
    m = rng.randint(0, p.size + 2)
    ok = add(take_poly(m, p), shift_mul_xm(drop_poly(m, p), m)) == p
    return ok, (0, p.size), f"m={m} p={p}"


def _poly_even_odd(rng, max_n):
    dom = _field(rng, 0)
    p = _poly(rng, dom, 1 << max_n)
    ok = add(dilate(even_poly(p), 2), shift_mul_xm(dilate(odd_poly(p), 2), 1)) == p
    return ok, (0, p.size), f"p={p}"


def _reverse_polyS(rng, max_n):
    n = rng.randint(0, max(0, max_n - 1))
    dom = _field(rng, 0)
    p = _poly(rng, dom, 1 << (n + 2))
    rhs = add(reverse_poly(n, even_poly(p)), shift_mul_xm(reverse_poly(n, odd_poly(p)), 1 << n))
    return reverse_poly(n + 1, p) == rhs, (n, p.size), f"n={n} p={p}"


def _stage_args(rng, max_n):
    m = rng.randint(0, max(0, max_n - 2))
    n = rng.randint(0, max(0, max_n - 2 - m))
    dom = _field(rng, 0)
    return m, n, dom, _any(rng, dom)


def _take_step(rng, max_n):
    m, n, dom, w = _stage_args(rng, max_n)
    p = _poly(rng, dom, 1 << (m + n + 2))
    cut = 1 << (m + n + 1)
    ok = take_poly(cut, step(m + 1, n, w, p)) == step(m, n, w, take_poly(cut, p))
    return ok, (m + n, p.size), f"m={m} n={n} w={w} p={p}"


def _drop_step(rng, max_n):
    m, n, dom, w = _stage_args(rng, max_n)
    p = _poly(rng, dom, 1 << (m + n + 2))
    cut = 1 << (m + n + 1)
    ok = drop_poly(cut, step(m + 1, n, w, p)) == step(m, n, w, drop_poly(cut, p))
    return ok, (m + n, p.size), f"m={m} n={n} w={w} p={p}"


def _all_results_reverse_poly(rng, max_n):
    n = rng.randint(0, min(max_n, 6))
    dom = _field(rng, 0)
    w = _any(rng, dom)
    p = _poly(rng, dom, 1 << n)
    return check_all_results(n, 0, w, p, reverse_poly(n, p)), (n, p.size), f"n={n} p={p}"


def _all_results_step(rng, max_n):
    m = rng.randint(0, max(0, min(max_n, 5) - 1))
    n = rng.randint(0, max(0, min(max_n, 5) - 1 - m))
    dom = _field(rng, m + n + 1)
    w = _root(rng, dom, n + 1) if rng.random() < 0.5 and n + 1 <= dom.two_adicity else _any(rng, dom)
    w2 = dom.mul(w, w)
    p = _poly(rng, dom, 1 << (m + n + 1))
    q = leaf_results(m + 1, n, w2, p)
    ok = check_all_results(m + 1, n, w2, p, q) and check_all_results(m, n + 1, w, p, step(m, n, w, q))
    return ok, (m + n, p.size), f"m={m} n={n} w={w} p={p}"


def _prim_exp2nS(rng, max_n):
    dom = _field(rng, 0)
    n = rng.randint(1, dom.two_adicity)
    w = _root(rng, dom, n)
    return dom.pow(w, 1 << (n - 1)) == dom.neg(dom.one), (n, 0), f"{dom} n={n} w={w}"


def _prim_sqr(rng, max_n):
    dom = _field(rng, 0)
    n = rng.randint(1, dom.two_adicity)
    w = _root(rng, dom, n)
    half = halve_root(FftPlan.create(dom, n, w))
    ok = half.validated and is_primitive_root(dom, half.w, 1 << (n - 1))
    return ok, (n, 0), f"{dom} n={n} w={w}"


LEMMAS: dict[str, Check] = {
    "fftE": _fftE,
    "fft₁E": _fft1E,
    "step₁E": _step1E,
    "istep_fft₁": _istep_fft1,
    "fftK": _fftK,
    "poly_take_drop": _poly_take_drop,
    "poly_even_odd": _poly_even_odd,
    "reverse_polyS": _reverse_polyS,
    "take_step": _take_step,
    "drop_step": _drop_step,
    "all_results_fft₁_reverse_poly": _all_results_reverse_poly,
    "all_results_fft₁_step": _all_results_step,
    "prim_exp2nS": _prim_exp2nS,
    "prim_sqr": _prim_sqr,
}


def run_suite(name: str, check: Check, trials: int, rng: random.Random, max_n: int) -> SuiteResult:
    passed = 0
    worst: tuple | None = None
    for _ in range(trials):
        try:
            ok, key, desc = check(rng, max_n)
        except Exception as exc:  # noqa: BLE001 - any error is a failed case
            ok, key, desc = False, (-1, -1), f"{type(exc).__name__}: {exc}"
        if ok:
            passed += 1
        elif worst is None or key < worst[0]:
            worst = (key, desc)
    return SuiteResult(name, passed, trials, None if worst is None else worst[1])


def run_selfcheck(trials: int = 200, seed: int = 0, max_n: int = 6) -> list[SuiteResult]:
    """Run every lemma suite; each suite gets its own seeded generator."""
    if trials == 0:
        return []
    return [
        run_suite(name, check, trials, random.Random(f"{seed}:{name}"), max_n)
        for name, check in LEMMAS.items()
    ]
