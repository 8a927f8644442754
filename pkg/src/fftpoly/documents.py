"""Polynomial documents: the JSON and plain-text file formats of the CLI.

JSON documents look like::

    {"domain": "prime", "modulus": 17, "coeffs": [1, 2, 3, 4]}
    {"domain": "complex", "epsilon": 1e-9, "coeffs": [[1.0, 0.0], [0.5, -2.0]]}

Coefficients are listed in ascending degree: ``coeffs[i]`` multiplies
``X**i``. Plain-text input is whitespace-separated decimal integers, read
as prime-field coefficients (same ascending order).
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import DEFAULT_EPSILON, DEFAULT_MODULUS, ComplexField, Domain, PrimeField
from .errors import FftError
from .poly import Polynomial


class DocumentError(FftError, ValueError):
    """Malformed polynomial document."""


def _domain_from(doc: dict) -> Domain:
    tag = doc.get("domain")
    try:
        if tag == "prime":
            modulus = doc.get("modulus", DEFAULT_MODULUS)
            if isinstance(modulus, bool) or not isinstance(modulus, int):
                raise DocumentError(f"modulus must be an integer, got {modulus!r}")
            return PrimeField(modulus)
        if tag == "complex":
            eps = doc.get("epsilon", DEFAULT_EPSILON)
            if isinstance(eps, bool) or not isinstance(eps, (int, float)):
                raise DocumentError(f"epsilon must be a number, got {eps!r}")
            return ComplexField(float(eps))
    except DocumentError:
        raise
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    raise DocumentError(f"unknown domain {tag!r}; expected 'prime' or 'complex'")


def _prime_coeff(dom: PrimeField, c: Any) -> int:
    if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < dom.modulus:
        raise DocumentError(f"prime coefficients must be integers in [0, {dom.modulus}), got {c!r}")
    return c


def _complex_coeff(c: Any) -> complex:
    if (
        not isinstance(c, list)
        or len(c) != 2
        or any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in c)
    ):
        raise DocumentError(f"complex coefficients must be [re, im] pairs, got {c!r}")
    return complex(float(c[0]), float(c[1]))


def from_dict(doc: Any) -> Polynomial:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    dom = _domain_from(doc)
    coeffs = doc.get("coeffs")
    if not isinstance(coeffs, list):
        raise DocumentError("'coeffs' must be an array")
    if isinstance(dom, PrimeField):
        values = [_prime_coeff(dom, c) for c in coeffs]
    else:
        values = [_complex_coeff(c) for c in coeffs]
    try:
        return Polynomial(dom, values)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def parse_document(text: str, modulus: int = DEFAULT_MODULUS) -> Polynomial:
    """Parse a JSON document, or plain-text integers over ``Z_modulus``."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
        return from_dict(doc)
    try:
        values = [int(tok) for tok in stripped.split()]
    except ValueError as exc:
        raise DocumentError(f"plain-text input must be decimal integers: {exc}") from exc
    return from_dict({"domain": "prime", "modulus": modulus, "coeffs": values})


def element_to_json(domain: Domain, x: Any) -> Any:
    if isinstance(domain, PrimeField):
        return x
    return [x.real, x.imag]


def domain_to_dict(domain: Domain) -> dict:
    if isinstance(domain, PrimeField):
        return {"domain": "prime", "modulus": domain.modulus}
    return {"domain": "complex", "epsilon": domain.epsilon}


def to_dict(p: Polynomial) -> dict:
    return {**domain_to_dict(p.domain), "coeffs": [element_to_json(p.domain, c) for c in p.coeffs]}


def serialize_document(p: Polynomial) -> str:
    return json.dumps(to_dict(p))
