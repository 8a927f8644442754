"""Coefficient domains and primitive roots of unity.

Two concrete domains are provided:

``PrimeField``
    exact arithmetic on residues ``0 <= x < p`` for an odd prime ``p``.
    Elements are plain Python ints.
``ComplexField``
    double-precision complex numbers compared with a relative tolerance.
    Elements are plain Python ``complex`` values.

Both expose the same small set of operations (``add``, ``sub``, ``neg``,
``mul``, ``pow``, ``inv``, ``from_nat``, ``eq``, ...) so the transforms can be
written once against either of them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import InvalidRoot, OrderUnavailable

DEFAULT_MODULUS = 998244353
DEFAULT_EPSILON = 1e-9

# moduli above this bound are handed to sympy for primality and factoring
_TRIAL_DIVISION_LIMIT = 1 << 40


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n >= _TRIAL_DIVISION_LIMIT:
        from sympy import isprime

        return bool(isprime(n))
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    if n >= _TRIAL_DIVISION_LIMIT:
        from sympy import factorint

        return sorted(int(q) for q in factorint(n))
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def two_adic_valuation(n: int) -> int:
    """Largest ``k`` with ``2**k`` dividing ``n`` (``n > 0``)."""
    return (n & -n).bit_length() - 1


@dataclass(frozen=True)
class PrimeField:
    """The field Z_p of residues modulo an odd prime ``p``.

    ``generator`` is a generator of the multiplicative group; it is searched
    for (smallest first) when not given, and verified when given.
    """

    modulus: int = DEFAULT_MODULUS
    generator: int = field(default=0, compare=False)

    exact = True
    zero = 0
    one = 1

    def __post_init__(self) -> None:
        p = self.modulus
        if not isinstance(p, int) or p < 3 or p % 2 == 0 or not _is_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p!r}")
        factors = _prime_factors(p - 1)

        def generates(g: int) -> bool:
            return g % p != 0 and all(pow(g, (p - 1) // q, p) != 1 for q in factors)

        g = self.generator
        if g:
            if not generates(g):
                raise ValueError(f"{g} does not generate the multiplicative group mod {p}")
        else:
            g = 2
            while not generates(g):
                g += 1
            object.__setattr__(self, "generator", g)

    @property
    def two_adicity(self) -> int:
        """Largest ``n`` such that a primitive 2^n-th root of unity exists."""
        return two_adic_valuation(self.modulus - 1)

    def coerce(self, x: Any) -> int:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"prime field coefficients must be integers, got {x!r}")
        return x % self.modulus

    def from_nat(self, k: int) -> int:
        return k % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def neg(self, a: int) -> int:
        return -a % self.modulus

    def mul(self, a: int, b: int) -> int:
        return a * b % self.modulus

    def pow(self, a: int, k: int) -> int:
        return pow(a, k, self.modulus)

    def inv(self, a: int) -> int:
        if a % self.modulus == 0:
            raise ZeroDivisionError("zero has no inverse")
        # Fermat: a^(p-2) = a^-1
        return pow(a, self.modulus - 2, self.modulus)

    def eq(self, a: int, b: int) -> bool:
        return a == b

    def is_zero(self, a: int) -> bool:
        return a == 0

    def horner(self, coeffs: Sequence[int], x: int) -> int:
        p = self.modulus
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        return acc

    def seq_eq(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return tuple(a) == tuple(b)

    def __str__(self) -> str:
        return f"Z_{self.modulus}"


@dataclass(frozen=True)
class ComplexField:
    """Double-precision complex numbers with tolerance-based equality.

    Two values ``a`` and ``b`` compare equal when
    ``|a - b| <= epsilon * max(1, |a|, |b|)``.
    """

    epsilon: float = DEFAULT_EPSILON

    exact = False
    zero = 0j
    one = 1 + 0j
    two_adicity = None

    def __post_init__(self) -> None:
        if not (self.epsilon > 0 and math.isfinite(self.epsilon)):
            raise ValueError(f"epsilon must be a positive finite float, got {self.epsilon!r}")

    def coerce(self, x: Any) -> complex:
        if isinstance(x, bool):
            raise TypeError(f"complex coefficients must be numbers, got {x!r}")
        if isinstance(x, (list, tuple)) and len(x) == 2:
            x = complex(float(x[0]), float(x[1]))
        z = complex(x)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError(f"non-finite complex coefficient {x!r}")
        return z

    def from_nat(self, k: int) -> complex:
        return complex(k)

    def add(self, a: complex, b: complex) -> complex:
        return a + b

    def sub(self, a: complex, b: complex) -> complex:
        return a - b

    def neg(self, a: complex) -> complex:
        return -a

    def mul(self, a: complex, b: complex) -> complex:
        return a * b

    def pow(self, a: complex, k: int) -> complex:
        return power(self, a, k)

    def inv(self, a: complex) -> complex:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 / a

    def eq(self, a: complex, b: complex) -> bool:
        return abs(a - b) <= self.epsilon * max(1.0, abs(a), abs(b))

    def is_zero(self, a: complex) -> bool:
        return a == 0

    def horner(self, coeffs: Sequence[complex], x: complex) -> complex:
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def seq_eq(self, a: Sequence[complex], b: Sequence[complex]) -> bool:
        """Coefficient-wise comparison, relative to the larger L-inf norm."""
        m = max(len(a), len(b))
        a = list(a) + [0j] * (m - len(a))
        b = list(b) + [0j] * (m - len(b))
        scale = max([1.0] + [abs(z) for z in a] + [abs(z) for z in b])
        return all(abs(x - y) <= self.epsilon * scale for x, y in zip(a, b))

    def __str__(self) -> str:
        return f"C(eps={self.epsilon:g})"


Domain = PrimeField | ComplexField


def power(domain: Domain, x: Any, k: int) -> Any:
    """``x**k`` by square-and-multiply; ``x**0`` is one."""
    if k < 0:
        raise ValueError("exponent must be a natural number")
    result = domain.one
    base = x
    while k:
        if k & 1:
            result = domain.mul(result, base)
        base = domain.mul(base, base)
        k >>= 1
    return result


def _is_one(domain: Domain, x: Any) -> bool:
    return domain.eq(x, domain.one)


def is_primitive_root(domain: Domain, w: Any, order: int) -> bool:
    """True iff ``w**order == 1`` and no smaller positive power of ``w`` is one."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if not _is_one(domain, domain.pow(w, order)):
        return False
    # w has order exactly `order` iff w^(order/q) != 1 for every prime q | order
    return all(not _is_one(domain, domain.pow(w, order // q)) for q in _prime_factors(order))


def is_primitive_2n_root(domain: Domain, w: Any, n: int) -> bool:
    """Primitivity for order ``2**n``: squaring ``n`` times reaches one, ``n-1`` times gives -1."""
    if n == 0:
        return _is_one(domain, w)
    x = w
    for _ in range(n - 1):
        x = domain.mul(x, x)
    return not _is_one(domain, x) and _is_one(domain, domain.mul(x, x))


def primitive_root_of_order(domain: Domain, n: int, sign: int = -1) -> Any:
    """A primitive ``2**n``-th root of unity.

    In Z_p this is ``g ** ((p - 1) / 2**n)`` for the field's generator ``g``.
    In the complex domain it is ``exp(sign * 2*pi*i / 2**n)``.
    """
    if n < 0:
        raise ValueError("n must be a natural number")
    if isinstance(domain, PrimeField):
        if n > domain.two_adicity:
            raise OrderUnavailable(
                f"{domain} has no primitive 2^{n}-th root (2-adicity {domain.two_adicity})"
            )
        w = pow(domain.generator, (domain.modulus - 1) >> n, domain.modulus)
    else:
        if sign not in (-1, 1):
            raise ValueError("sign must be -1 or 1")
        exact = {0: 1 + 0j, 1: -1 + 0j, 2: complex(0, sign)}
        w = exact[n] if n in exact else cmath.exp(sign * 2j * math.pi / (1 << n))
    if not is_primitive_2n_root(domain, w, n):  # pragma: no cover - guards the constructions above
        raise InvalidRoot(f"constructed root {w!r} failed the primitivity check")
    return w


def inverse_root(domain: Domain, n: int, w: Any) -> Any:
    """Inverse of a primitive ``2**n``-th root: ``w**(2**n - 1)``, or the conjugate in C."""
    if isinstance(domain, ComplexField):
        return w.conjugate() / abs(w) ** 2
    return domain.pow(w, (1 << n) - 1)


def check_root(domain: Domain, n: int, w: Any) -> Any:
    """Coerce ``w`` into the domain and raise ``InvalidRoot`` unless it is primitive of order 2^n."""
    if n < 0:
        raise ValueError("n must be a natural number")
    w = domain.coerce(w)
    if not is_primitive_2n_root(domain, w, n):
        raise InvalidRoot(f"{w!r} is not a primitive 2^{n}-th root of unity in {domain}")
    return w


@dataclass(frozen=True)
class FftPlan:
    """Transform length exponent ``n`` with a checked primitive 2^n-th root ``w``."""

    domain: Domain
    n: int
    w: Any
    validated: bool = True

    @classmethod
    def create(cls, domain: Domain, n: int, w: Any = None, *, sign: int = -1) -> FftPlan:
        if w is None:
            w = primitive_root_of_order(domain, n, sign)
        else:
            w = check_root(domain, n, w)
        return cls(domain, n, w, True)

    @property
    def length(self) -> int:
        return 1 << self.n


def halve_root(plan: FftPlan) -> FftPlan:
    """Plan for half the length: exponent ``n - 1`` and root ``w**2``."""
    if plan.n == 0:
        raise ValueError("cannot halve a plan of order 2^0")
    w2 = plan.domain.mul(plan.w, plan.w)
    return FftPlan(plan.domain, plan.n - 1, w2, is_primitive_2n_root(plan.domain, w2, plan.n - 1))
