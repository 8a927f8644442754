"""Radix-2 FFT/NTT over prime fields and complex numbers.

Recursive (``fft``, ``fft1``), iterative (``istep``) and inverse (``ifft``)
transforms on dense polynomials, FFT multiplication (``fft_mul``), and the
checkers used to test them against brute-force evaluation.
"""

from .algebra import (
    ComplexField,
    FftPlan,
    PrimeField,
    halve_root,
    inverse_root,
    is_primitive_root,
    power,
    primitive_root_of_order,
)
from .errors import (
    DomainMismatch,
    FftError,
    InvalidRoot,
    NonInvertibleOrder,
    OrderUnavailable,
    SizeExceedsOrder,
)
from .inverse import fft_mul, ifft, pointwise_mul
from .iterative import (
    StageSnapshot,
    check_all_results,
    digitn,
    istep,
    istep_aux,
    rdigitn,
    reverse_poly,
    stages,
    step,
    step1,
)
from .kernels import BACKEND
from .poly import (
    Polynomial,
    build,
    coeff,
    dilate,
    drop_poly,
    evaluate,
    even_poly,
    naive_mul,
    odd_poly,
    take_poly,
)
from .transform import fft, fft1, naive_dft

__all__ = [
    "BACKEND",
    "ComplexField",
    "DomainMismatch",
    "FftError",
    "FftPlan",
    "InvalidRoot",
    "NonInvertibleOrder",
    "OrderUnavailable",
    "Polynomial",
    "PrimeField",
    "SizeExceedsOrder",
    "StageSnapshot",
    "build",
    "check_all_results",
    "coeff",
    "digitn",
    "dilate",
    "drop_poly",
    "evaluate",
    "even_poly",
    "fft",
    "fft1",
    "fft_mul",
    "halve_root",
    "ifft",
    "inverse_root",
    "is_primitive_root",
    "istep",
    "istep_aux",
    "naive_dft",
    "naive_mul",
    "odd_poly",
    "pointwise_mul",
    "power",
    "primitive_root_of_order",
    "rdigitn",
    "reverse_poly",
    "stages",
    "step",
    "step1",
    "take_poly",
]
