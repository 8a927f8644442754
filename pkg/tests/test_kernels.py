import os
import random
import subprocess
import sys

import pytest

from fftpoly import kernels
from fftpoly import _kernels_py as pyk
from fftpoly.iterative import rdigitn

from helpers import P, ref_convolve, ref_dft, root, BIG

compiled = pytest.importorskip("fftpoly._ckernels")


def _rand(rng, size, p):
    return [rng.randrange(p) for _ in range(size)]


def _trim(xs):
    xs = list(xs)
    while xs and xs[-1] == 0:
        xs.pop()
    return xs


@pytest.mark.parametrize("n", range(0, 9))
def test_bit_reverse_table(n):
    assert list(pyk.bit_reverse_table(n)) == [rdigitn(2, n, i) for i in range(1 << n)]


@pytest.mark.parametrize("impl", [pyk, compiled], ids=["python", "compiled"])
@pytest.mark.parametrize("n", range(0, 10))
def test_ntt_matches_reference(impl, n):
    rng = random.Random(n)
    a = _rand(rng, 1 << n, P)
    w = root(BIG, n)
    assert _trim(impl.ntt(a, n, w, P)) == ref_dft(a, n, w, P)


@pytest.mark.parametrize("p", [17, 97, 7681, 998244353, 2013265921])
def test_backends_agree(p):
    rng = random.Random(p)
    for _ in range(20):
        a = _rand(rng, rng.randrange(0, 70), p)
        b = _rand(rng, rng.randrange(0, 70), p)
        assert compiled.convolve(a, b, p) == pyk.convolve(a, b, p)
        assert _trim(compiled.convolve(a, b, p)) == ref_convolve(a, b, p)
        m = min(len(a), len(b))
        assert compiled.pointwise(a[:m], b[:m], p) == pyk.pointwise(a[:m], b[:m], p)
        c = rng.randrange(p)
        assert compiled.scale(a, c, p) == pyk.scale(a, c, p)


def test_ntt_backends_agree_large():
    rng = random.Random(1)
    n = 12
    a = _rand(rng, 1 << n, P)
    w = root(BIG, n)
    assert compiled.ntt(a, n, w, P) == pyk.ntt(a, n, w, P)


def test_convolve_lazy_reduction_extremes():
    # all coefficients p - 1 stress the batched accumulation
    p = 2013265921
    a = [p - 1] * 3000
    assert compiled.convolve(a, a, p) == pyk.convolve(a, a, p)


def test_compiled_rejects_large_modulus():
    with pytest.raises((ValueError, OverflowError)):
        compiled.ntt([1, 2], 1, 3, (1 << 61) - 1)


def test_dispatch_by_modulus():
    assert kernels.backend_for((1 << 61) - 1) == "python"
    if kernels.BACKEND == "compiled":
        assert kernels.backend_for(P) == "compiled"


def test_pure_python_env_switch():
    env = dict(os.environ, FFTPOLY_PURE_PYTHON="1")
    code = (
        "from fftpoly import kernels, Polynomial, PrimeField, fft_mul\n"
        "F = PrimeField(17)\n"
        "print(kernels.BACKEND, fft_mul(Polynomial(F, [1, 1]), Polynomial(F, [1, 1])).coeffs)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python (1, 2, 1)"


def test_compare_backends_script(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parent.parent / "benchmarks" / "compare_backends.py"
    spec = importlib.util.spec_from_file_location("compare_backends", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--sizes", "2^4,2^6", "--repeat", "1"]) == 0
    out = capsys.readouterr().out
    assert "ntt" in out and "convolve" in out
