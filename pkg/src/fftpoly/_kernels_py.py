"""Pure-Python hot loops over residue lists (fallback for the Cython core).

Every function takes and returns plain lists of ints in ``[0, p)``.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=32)
def bit_reverse_table(n: int) -> tuple[int, ...]:
    """``rev[i]`` is ``i`` with its ``n`` low bits reversed."""
    rev = [0] * (1 << n)
    for i in range(1, 1 << n):
        rev[i] = (rev[i >> 1] >> 1) | ((i & 1) << (n - 1))
    return tuple(rev)


def convolve(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    nb = len(b)
    out = [0] * (len(a) + nb - 1)
    for i, x in enumerate(a):
        if x:
            out[i : i + nb] = [o + x * y for o, y in zip(out[i : i + nb], b)]
    return [o % p for o in out]


def ntt(a: list[int], n: int, w: int, p: int) -> list[int]:
    """Bit-reverse ``a`` (length 2^n) then run the n butterfly stages.

    The stage merging blocks of half-width 2^s uses the root ``w**(2**(n-1-s))``.
    """
    size = 1 << n
    if len(a) != size:
        raise ValueError(f"expected {size} coefficients, got {len(a)}")
    buf = [a[r] for r in bit_reverse_table(n)]
    roots = [w % p]
    for _ in range(n - 1):
        roots.append(roots[-1] * roots[-1] % p)
    half = 1
    for s in range(n):
        wr = roots[n - 1 - s]
        tw = [1] * half
        for j in range(1, half):
            tw[j] = tw[j - 1] * wr % p
        for start in range(0, size, 2 * half):
            mid = start + half
            end = mid + half
            ev = buf[start:mid]
            ov = [x * t % p for x, t in zip(buf[mid:end], tw)]
            buf[start:mid] = [(x + y) % p for x, y in zip(ev, ov)]
            buf[mid:end] = [(x - y) % p for x, y in zip(ev, ov)]
        half <<= 1
    return buf


def pointwise(a: list[int], b: list[int], p: int) -> list[int]:
    return [x * y % p for x, y in zip(a, b)]


def scale(a: list[int], c: int, p: int) -> list[int]:
    return [x * c % p for x in a]
