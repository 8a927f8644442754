"""Independent oracles and hypothesis strategies shared by the test modules.

Nothing here calls into the transform code: the reference DFT evaluates
``sum(c_i * x**i)`` with builtin ``pow`` and the reference product is a
plain double loop.
"""

import random

from hypothesis import strategies as st

from fftpoly import Polynomial, PrimeField

P = 998244353
BIG = PrimeField(P)
SMALL = PrimeField(17)


def ref_eval(coeffs, x, p):
    return sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p


def ref_dft(coeffs, n, w, p):
    out = [ref_eval(coeffs, pow(w, i, p), p) for i in range(1 << n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def ref_convolve(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def bitrev(m, n):
    return int(format(m, f"0{n}b")[::-1], 2) if n else 0


def leaves_by_stride(depth, leaf, w, coeffs, p):
    """Concatenated leaf transforms: leaf k reads p at rev(k) + i * 2^depth."""
    out = []
    for k in range(2**depth):
        sub = coeffs[bitrev(k, depth) :: 2**depth]
        vals = ref_dft(sub, leaf, w, p)
        out += vals + [0] * (2**leaf - len(vals))
    return out


def rand_poly(rng: random.Random, dom: PrimeField, max_size: int) -> Polynomial:
    return Polynomial(dom, [rng.randrange(dom.modulus) for _ in range(rng.randint(0, max_size))])


def root(dom: PrimeField, n: int) -> int:
    """Primitive 2^n-th root computed straight from the generator."""
    return pow(dom.generator, (dom.modulus - 1) >> n, dom.modulus)


def polys(dom: PrimeField, max_size: int):
    return st.lists(st.integers(0, dom.modulus - 1), max_size=max_size).map(
        lambda cs: Polynomial(dom, cs)
    )


fields = st.sampled_from([SMALL, BIG])
