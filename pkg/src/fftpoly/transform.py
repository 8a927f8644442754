"""Recursive radix-2 transforms and the evaluation oracle they must agree with.

``fft(n, w, p)`` returns the polynomial whose ``i``-th coefficient is
``p(w**i)`` for ``i < 2**n``. Two recursive formulations are kept side by
side: ``fft`` glues the half-size results with ``w**i`` for every output
index, ``fft1`` writes each butterfly pair ``(e + o*w**j, e - o*w**j)``.
``naive_dft`` evaluates the same points directly with Horner's rule.

The public functions check ``size(p) <= 2**n`` and the primitivity of ``w``
once; the recursion itself (``_fft`` / ``_fft1``) trusts its arguments.
"""

from __future__ import annotations

from typing import Any

from .algebra import Domain, FftPlan, check_root
from .errors import SizeExceedsOrder
from .poly import Polynomial, padded


def check_size(p: Polynomial, n: int) -> None:
    if p.size > 1 << n:
        raise SizeExceedsOrder(f"size p ≤ 2^n violated: size {p.size} > 2^{n} = {1 << n}")


def naive_dft(plan: FftPlan, p: Polynomial) -> Polynomial:
    """Evaluate ``p`` at ``w**0 .. w**(2**n - 1)`` one point at a time."""
    check_size(p, plan.n)
    dom = plan.domain
    out = []
    x = dom.one
    for _ in range(plan.length):
        out.append(dom.horner(p.coeffs, x))
        x = dom.mul(x, plan.w)
    return Polynomial._raw(dom, out)


def _fft_list(dom: Domain, n: int, w: Any, c: list) -> list:
    # c has exactly 2**n entries; c[0::2] and c[1::2] are the even and odd parts
    if n == 0:
        return c
    w2 = dom.mul(w, w)
    ev = _fft_list(dom, n - 1, w2, c[0::2])
    ov = _fft_list(dom, n - 1, w2, c[1::2])
    mask = len(ev) - 1
    add, mul = dom.add, dom.mul
    out = []
    wi = dom.one
    for i in range(len(c)):
        j = i & mask
        out.append(add(ev[j], mul(ov[j], wi)))
        wi = mul(wi, w)
    return out


def _fft1_list(dom: Domain, n: int, w: Any, c: list) -> list:
    if n == 0:
        return c
    w2 = dom.mul(w, w)
    ev = _fft1_list(dom, n - 1, w2, c[0::2])
    ov = _fft1_list(dom, n - 1, w2, c[1::2])
    half = len(ev)
    add, sub, mul = dom.add, dom.sub, dom.mul
    out = [dom.zero] * (2 * half)
    wj = dom.one
    for j in range(half):
        e = ev[j]
        t = mul(ov[j], wj)
        out[j] = add(e, t)
        out[j + half] = sub(e, t)
        wj = mul(wj, w)
    return out


# Only the first 2**n coefficients reach a leaf (each leaf keeps the constant
# term of its sub-polynomial), so padding or cutting to 2**n is exact.
def _fft(dom: Domain, n: int, w: Any, p: Polynomial) -> Polynomial:
    return Polynomial._raw(dom, _fft_list(dom, n, w, padded(p, 1 << n)))


def _fft1(dom: Domain, n: int, w: Any, p: Polynomial) -> Polynomial:
    return Polynomial._raw(dom, _fft1_list(dom, n, w, padded(p, 1 << n)))


def fft(n: int, w: Any, p: Polynomial) -> Polynomial:
    """Recursive FFT: evaluations of ``p`` at the powers of ``w``."""
    check_size(p, n)
    w = check_root(p.domain, n, w)
    return _fft(p.domain, n, w, p)


def fft1(n: int, w: Any, p: Polynomial) -> Polynomial:
    """Recursive FFT in butterfly form; same result as :func:`fft`."""
    check_size(p, n)
    w = check_root(p.domain, n, w)
    return _fft1(p.domain, n, w, p)
