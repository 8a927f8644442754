"""Dense univariate polynomials over a coefficient domain.

A polynomial is stored as a tuple of coefficients in ascending degree order,
``coeffs[i]`` being the coefficient of ``X**i``. The tuple is always
normalized: its last entry is nonzero, and the zero polynomial is the empty
tuple, so ``size(p) == len(p.coeffs)`` is the degree plus one.
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Sequence

from . import kernels
from .algebra import Domain, PrimeField
from .errors import DomainMismatch


def _trim(domain: Domain, coeffs: list) -> tuple:
    k = len(coeffs)
    if domain.exact:
        while k and coeffs[k - 1] == 0:
            k -= 1
    else:
        while k and domain.is_zero(coeffs[k - 1]):
            k -= 1
    return tuple(coeffs[:k])


class Polynomial:
    """Immutable normalized polynomial bound to a coefficient domain."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain: Domain, coeffs: Iterable[Any] = ()):
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "coeffs", _trim(domain, [domain.coerce(c) for c in coeffs]))

    @classmethod
    def _raw(cls, domain: Domain, coeffs: Sequence[Any]) -> Polynomial:
        # coefficients already canonical; only trailing zeros are trimmed
        obj = cls.__new__(cls)
        object.__setattr__(obj, "domain", domain)
        object.__setattr__(obj, "coeffs", _trim(domain, list(coeffs)))
        return obj

    @classmethod
    def zero(cls, domain: Domain) -> Polynomial:
        return cls._raw(domain, ())

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def size(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Any:
        return coeff(self, i)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.domain == other.domain and self.domain.seq_eq(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        if not self.domain.exact:
            raise TypeError("approximate polynomials are unhashable")
        return hash((self.domain, self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({self.domain}, {list(self.coeffs)})"

    def __add__(self, other: Polynomial) -> Polynomial:
        return add(self, other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return sub(self, other)

    def __neg__(self) -> Polynomial:
        return neg(self)

    def __mul__(self, other: Polynomial) -> Polynomial:
        return naive_mul(self, other)

    def __call__(self, x: Any) -> Any:
        return evaluate(self, x)


def uphalf(i: int) -> int:
    return (i + 1) // 2


def _same_domain(p: Polynomial, q: Polynomial) -> Domain:
    if p.domain != q.domain:
        raise DomainMismatch(f"{p.domain} vs {q.domain}")
    return p.domain


def constant(domain: Domain, c: Any) -> Polynomial:
    return Polynomial(domain, (c,))


def coeff(p: Polynomial, i: int) -> Any:
    """Coefficient of ``X**i``; zero past the end."""
    return p.coeffs[i] if i < len(p.coeffs) else p.domain.zero


def padded(p: Polynomial, length: int) -> list:
    """The first ``length`` coefficients of ``p`` as a list, zero-filled."""
    c = p.coeffs
    if len(c) >= length:
        return list(c[:length])
    return list(c) + [p.domain.zero] * (length - len(c))


def build(domain: Domain, n: int, f: Callable[[int], Any]) -> Polynomial:
    """The polynomial whose ``i``-th coefficient is ``f(i)`` for ``i < n``."""
    return Polynomial(domain, (f(i) for i in range(n)))


def evaluate(p: Polynomial, x: Any) -> Any:
    """Value of ``p`` at ``x`` (Horner's rule)."""
    return p.domain.horner(p.coeffs, p.domain.coerce(x))


def even_poly(p: Polynomial) -> Polynomial:
    return Polynomial._raw(p.domain, p.coeffs[0::2])


def odd_poly(p: Polynomial) -> Polynomial:
    return Polynomial._raw(p.domain, p.coeffs[1::2])


def take_poly(m: int, p: Polynomial) -> Polynomial:
    """The ``m`` low-order terms of ``p``."""
    return Polynomial._raw(p.domain, p.coeffs[:m])


def drop_poly(m: int, p: Polynomial) -> Polynomial:
    """``p`` without its ``m`` low-order terms, shifted down by ``m``."""
    return Polynomial._raw(p.domain, p.coeffs[m:])


def dilate(p: Polynomial, k: int) -> Polynomial:
    """Composition with the monomial ``X**k``, i.e. ``p(X**k)``."""
    if k < 1:
        raise ValueError("dilate needs k >= 1")
    if k == 1 or not p.coeffs:
        return p
    out = [p.domain.zero] * (k * (len(p.coeffs) - 1) + 1)
    out[::k] = p.coeffs
    return Polynomial._raw(p.domain, out)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    dom = _same_domain(p, q)
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = dom.add(out[i], c)
    return Polynomial._raw(dom, out)


def neg(p: Polynomial) -> Polynomial:
    return Polynomial._raw(p.domain, [p.domain.neg(c) for c in p.coeffs])


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return add(p, neg(q))


def scale(c: Any, p: Polynomial) -> Polynomial:
    """Scalar multiple ``c * p``."""
    dom = p.domain
    c = dom.coerce(c)
    return Polynomial._raw(dom, [dom.mul(c, x) for x in p.coeffs])


def shift_mul_xm(p: Polynomial, m: int) -> Polynomial:
    """``p * X**m``."""
    if not p.coeffs:
        return p
    return Polynomial._raw(p.domain, (p.domain.zero,) * m + p.coeffs)


def naive_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Schoolbook product, quadratic in the sizes."""
    dom = _same_domain(p, q)
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Polynomial.zero(dom)
    if isinstance(dom, PrimeField):
        return Polynomial._raw(dom, kernels.convolve(list(a), list(b), dom.modulus))
    out = [dom.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = dom.add(out[i + j], dom.mul(x, y))
    return Polynomial._raw(dom, out)
