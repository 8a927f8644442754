"""Bottom-up (iterative) FFT built from bit reversal and butterfly stages.

The recursion tree of ``fft1`` is flattened one level at a time. A single
polynomial holds every sub-result of one depth side by side: at depth ``m``
with leaves of size ``2**n`` it is ``2**m`` blocks of ``2**n`` coefficients.
``reverse_poly`` produces the deepest level (every leaf a single
coefficient) and each ``step`` merges pairs of adjacent blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import kernels
from ._kernels_py import bit_reverse_table
from .algebra import Domain, PrimeField, check_root
from .errors import SizeExceedsOrder
from .poly import Polynomial, drop_poly, even_poly, odd_poly, padded, take_poly
from .transform import _fft1, check_size


@dataclass(frozen=True)
class StageSnapshot:
    """All sub-results at one depth of the recursion tree.

    ``data`` concatenates ``2**depth`` blocks of length ``2**width``; ``root``
    is the primitive ``2**width``-th root the leaves were computed with.
    """

    depth: int
    width: int
    root: Any
    data: Polynomial


def digitn(b: int, n: int, m: int) -> int:
    """The ``m``-th base-``b`` digit of ``n``."""
    if b < 2:
        raise ValueError("base must be at least 2")
    return (n // b**m) % b


def rdigitn(b: int, n: int, m: int) -> int:
    """``m`` with its ``n`` low base-``b`` digits written in reverse order."""
    if b < 2:
        raise ValueError("base must be at least 2")
    if not 0 <= m < b**n:
        raise ValueError(f"{m} does not fit in {n} base-{b} digits")
    return sum(digitn(b, m, n - 1 - i) * b**i for i in range(n))


def reverse_poly(n: int, p: Polynomial) -> Polynomial:
    """Coefficients of ``p`` permuted by ``n``-bit reversal of their index.

    Position ``i`` receives coefficient ``rdigitn(2, n, i)``; the table of
    those indices is cached per ``n``.
    """
    src = padded(p, 1 << n)
    return Polynomial._raw(p.domain, [src[j] for j in bit_reverse_table(n)])


def _twiddles(dom: Domain, w: Any, count: int) -> list:
    tw = [dom.one] * count
    for j in range(1, count):
        tw[j] = dom.mul(tw[j - 1], w)
    return tw


def _check_stage_size(m: int, n: int, p: Polynomial) -> None:
    if p.size > 1 << (m + n + 1):
        raise SizeExceedsOrder(
            f"size p ≤ 2^(m+n+1) violated: size {p.size} > 2^{m + n + 1}"
        )


def step(m: int, n: int, w: Any, p: Polynomial) -> Polynomial:
    """Merge ``2**(m+1)`` blocks of size ``2**n`` into ``2**m`` blocks of size ``2**(n+1)``.

    Reference form: for each block ``l`` the even and odd halves are read
    out and the butterfly pairs are summed into the result.
    """
    _check_stage_size(m, n, p)
    dom = p.domain
    half = 1 << n
    width = half << 1
    out = [dom.zero] * (width << m)
    src = padded(p, width << m)
    tw = _twiddles(dom, w, half)
    for l in range(1 << m):
        base = l * width
        ev = [src[i + base] for i in range(half)]
        ov = [src[i + base + half] for i in range(half)]
        for j in range(half):
            t = dom.mul(ov[j], tw[j])
            out[j + base] = dom.add(out[j + base], dom.add(ev[j], t))
            out[j + base + half] = dom.add(out[j + base + half], dom.sub(ev[j], t))
    return Polynomial._raw(dom, out)


def step1(m: int, n: int, w: Any, p: Polynomial) -> Polynomial:
    """Same stage as :func:`step`, computed position by position in one pass."""
    _check_stage_size(m, n, p)
    dom = p.domain
    half = 1 << n
    mask = (half << 1) - 1
    tw = _twiddles(dom, w, half)
    src = padded(p, 1 << (m + n + 1))
    add, sub, mul = dom.add, dom.sub, dom.mul
    out = []
    for i in range(len(src)):
        j = i & mask
        if j < half:
            out.append(add(src[i], mul(src[i + half], tw[j])))
        else:
            out.append(sub(src[i - half], mul(src[i], tw[j - half])))
    return Polynomial._raw(dom, out)


Stage = Callable[[int, int, Any, Polynomial], Polynomial]


def istep_aux(m: int, n: int, w: Any, p: Polynomial, stage: Stage = step) -> Polynomial:
    """Apply ``m`` stages; the stage at depth ``m1`` uses the root ``w**(2**m1)``."""
    dom = p.domain
    while m:
        m -= 1
        root = w
        for _ in range(m):
            root = dom.mul(root, root)
        p = stage(m, n, root, p)
        n += 1
    return p


def istep(n: int, w: Any, p: Polynomial) -> Polynomial:
    """Iterative FFT: bit reversal followed by ``n`` butterfly stages.

    Prime-field inputs run on the residue-list kernels; other domains go
    through :func:`istep_aux` with :func:`step1`.
    """
    check_size(p, n)
    dom = p.domain
    w = check_root(dom, n, w)
    if isinstance(dom, PrimeField):
        buf = list(p.coeffs) + [0] * ((1 << n) - p.size)
        return Polynomial._raw(dom, kernels.ntt(buf, n, w, dom.modulus))
    return istep_aux(n, 0, w, reverse_poly(n, p), stage=step1)


def stages(n: int, w: Any, p: Polynomial) -> list[StageSnapshot]:
    """Every intermediate of :func:`istep`, from ``reverse_poly`` to the result."""
    check_size(p, n)
    dom = p.domain
    w = check_root(dom, n, w)
    roots = [w]
    for _ in range(n):
        roots.append(dom.mul(roots[-1], roots[-1]))
    q = reverse_poly(n, p)
    out = [StageSnapshot(n, 0, roots[n], q)]
    for width in range(n):
        depth = n - 1 - width
        q = step1(depth, width, roots[depth], q)
        out.append(StageSnapshot(depth, width + 1, roots[depth], q))
    return out


def check_all_results(depth: int, leaf: int, w: Any, p: Polynomial, q: Polynomial) -> bool:
    """Whether ``q`` holds every ``fft1`` leaf result of ``p`` cut at ``depth``.

    Below the cut each leaf is ``fft1(leaf, w, .)`` of the matching
    even/odd sub-polynomial of ``p``, and leaves are laid out left to right
    with ``take_poly``/``drop_poly`` at ``2**(leaf + depth - 1)``.
    Exponential cost; meant for tests and traces only.
    """
    if depth == 0:
        return q == _fft1(p.domain, leaf, w, p)
    cut = 1 << (leaf + depth - 1)
    return check_all_results(depth - 1, leaf, w, even_poly(p), take_poly(cut, q)) and (
        check_all_results(depth - 1, leaf, w, odd_poly(p), drop_poly(cut, q))
    )
