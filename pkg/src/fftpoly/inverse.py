"""Inverse transform and multiplication through the evaluation representation."""

from __future__ import annotations

from typing import Any, Callable

from . import kernels
from .algebra import FftPlan, PrimeField, check_root, inverse_root, primitive_root_of_order
from .errors import DomainMismatch, NonInvertibleOrder, OrderUnavailable, SizeExceedsOrder
from .iterative import istep
from .poly import Polynomial, coeff, scale
from .transform import check_size, fft, fft1

ENGINES: dict[str, Callable[[int, Any, Polynomial], Polynomial]] = {
    "recursive": fft,
    "butterfly": fft1,
    "iterative": istep,
}


def _engine(name: str):
    try:
        return ENGINES[name]
    except KeyError:
        raise ValueError(f"unknown engine {name!r}; expected one of {sorted(ENGINES)}") from None


def _check_two_invertible(dom) -> None:
    if dom.is_zero(dom.from_nat(2)):
        raise NonInvertibleOrder(f"2 = 0 in {dom}; 2^n has no inverse")


def ifft(n: int, w: Any, p: Polynomial, engine: str = "iterative") -> Polynomial:
    """Interpolate: ``(2**n)**-1 * fft(n, w**-1, p)``.

    Undoes ``fft(n, w, .)`` on polynomials of size at most ``2**n``.
    ``engine`` picks the forward transform used for the ``w**-1`` pass.
    """
    dom = p.domain
    forward = _engine(engine)
    check_size(p, n)
    w = check_root(dom, n, w)
    _check_two_invertible(dom)
    inv_len = dom.inv(dom.from_nat(1 << n))
    return scale(inv_len, forward(n, inverse_root(dom, n, w), p))


def pointwise_mul(a: Polynomial, b: Polynomial, length: int) -> Polynomial:
    """Coefficient-wise product of the first ``length`` terms."""
    if a.domain != b.domain:
        raise DomainMismatch(f"{a.domain} vs {b.domain}")
    dom = a.domain
    return Polynomial._raw(dom, [dom.mul(coeff(a, i), coeff(b, i)) for i in range(length)])


def fft_mul(p: Polynomial, q: Polynomial, *, engine: str = "iterative", plan: FftPlan | None = None) -> Polynomial:
    """Product of ``p`` and ``q`` by evaluation, pointwise product and interpolation.

    The transform length is the smallest ``2**n`` holding the product unless
    ``plan`` supplies a (prevalidated) larger one.
    """
    if p.domain != q.domain:
        raise DomainMismatch(f"{p.domain} vs {q.domain}")
    dom = p.domain
    forward = _engine(engine)
    if not p or not q:
        return Polynomial.zero(dom)
    need = p.size + q.size - 1
    if plan is None:
        n = (need - 1).bit_length()
        if dom.two_adicity is not None and n > dom.two_adicity:
            raise OrderUnavailable(
                f"product of size {need} needs a 2^{n}-point transform; {dom} supports up to 2^{dom.two_adicity}"
            )
        w = primitive_root_of_order(dom, n)
    else:
        if plan.domain != dom:
            raise DomainMismatch(f"plan over {plan.domain}, operands over {dom}")
        if plan.length < need:
            raise SizeExceedsOrder(f"product of size {need} does not fit a 2^{plan.n}-point plan")
        n, w = plan.n, plan.w
    _check_two_invertible(dom)

    if isinstance(dom, PrimeField) and engine == "iterative":
        mod = dom.modulus
        size = 1 << n
        a = kernels.ntt(list(p.coeffs) + [0] * (size - p.size), n, w, mod)
        b = kernels.ntt(list(q.coeffs) + [0] * (size - q.size), n, w, mod)
        c = kernels.ntt(kernels.pointwise(a, b, mod), n, inverse_root(dom, n, w), mod)
        return Polynomial._raw(dom, kernels.scale(c[:need], dom.inv(size % mod), mod))

    values = pointwise_mul(forward(n, w, p), forward(n, w, q), 1 << n)
    prod = ifft(n, w, values, engine=engine)
    return Polynomial._raw(dom, prod.coeffs[:need])
