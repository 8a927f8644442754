import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fftpoly import ComplexField, FftPlan, InvalidRoot, Polynomial, SizeExceedsOrder, fft, fft1, naive_dft
from fftpoly.poly import add, scale

from helpers import BIG, P, SMALL, polys, rand_poly, ref_dft, root

Z17 = SMALL
P1234 = Polynomial(Z17, [1, 2, 3, 4])
# p(1)=10, p(4)=313=7, p(16)=p(-1)=-2=15, p(13)=p(-4)=-215=6  (mod 17)
WORKED = Polynomial(Z17, [10, 7, 15, 6])


class TestWorkedExamples:
    def test_naive_dft(self):
        assert naive_dft(FftPlan.create(Z17, 0, 1), Polynomial(Z17, [7])) == Polynomial(Z17, [7])
        assert naive_dft(FftPlan.create(Z17, 2, 4), P1234) == WORKED
        assert naive_dft(FftPlan.create(BIG, 5), Polynomial.zero(BIG)).size == 0

    @pytest.mark.parametrize("transform", [fft, fft1])
    def test_transforms(self, transform):
        assert transform(0, 1, Polynomial(Z17, [5])) == Polynomial(Z17, [5])
        assert transform(2, 4, P1234) == WORKED
        assert transform(4, root(BIG, 4), Polynomial.zero(BIG)).size == 0

    def test_single_butterfly(self):
        assert fft1(1, 16, Polynomial(Z17, [3, 5])) == Polynomial(Z17, [8, 15])
        assert fft(1, 16, Polynomial(Z17, [3, 5])) == Polynomial(Z17, [8, 15])

    def test_reference_agrees_with_hand_values(self):
        assert ref_dft([1, 2, 3, 4], 2, 4, 17) == [10, 7, 15, 6]


class TestPreconditions:
    @pytest.mark.parametrize("transform", [fft, fft1])
    def test_size_exceeds_order(self, transform):
        with pytest.raises(SizeExceedsOrder, match="size p ≤ 2\\^n"):
            transform(2, 4, Polynomial(Z17, [1, 2, 3, 4, 5]))

    @pytest.mark.parametrize("transform", [fft, fft1])
    @pytest.mark.parametrize("w", [16, 2, 1, 0])
    def test_invalid_root(self, transform, w):
        with pytest.raises(InvalidRoot):
            transform(2, w, P1234)

    def test_naive_dft_size(self):
        with pytest.raises(SizeExceedsOrder):
            naive_dft(FftPlan.create(Z17, 1), P1234)


class TestOracleEquivalence:
    def test_exhaustive_small_field(self):
        # every primitive 2^n-th root of Z_17 for n <= 2, every p with size <= min(2^n, 3)
        for n in range(3):
            roots = [w for w in range(1, 17) if pow(w, 2**n, 17) == 1 and (n == 0 or pow(w, 2 ** (n - 1), 17) != 1)]
            for w in roots:
                plan = FftPlan.create(Z17, n, w)
                for cs in itertools.product(range(17), repeat=min(2**n, 3)):
                    p = Polynomial(Z17, cs)
                    expected = naive_dft(plan, p)
                    assert fft(n, w, p) == expected
                    assert fft1(n, w, p) == expected

    @pytest.mark.parametrize("n", range(0, 9))
    def test_random_big_field(self, n):
        rng = random.Random(n)
        for _ in range(20):
            w = pow(root(BIG, n), rng.randrange(1, 2**n, 2), P) if n else 1
            p = rand_poly(rng, BIG, 2**n)
            expected = ref_dft(list(p.coeffs), n, w, P)
            assert list(naive_dft(FftPlan.create(BIG, n, w), p).coeffs) == expected
            assert list(fft(n, w, p).coeffs) == expected
            assert list(fft1(n, w, p).coeffs) == expected

    @settings(max_examples=50)
    @given(st.integers(0, 7).flatmap(lambda n: st.tuples(st.just(n), polys(BIG, 2**n), polys(BIG, 2**n), st.integers(0, P - 1))))
    def test_linearity(self, args):
        n, p, q, a = args
        w = root(BIG, n)
        assert fft(n, w, add(scale(a, p), q)) == add(scale(a, fft(n, w, p)), fft(n, w, q))

    @settings(max_examples=50)
    @given(st.integers(0, 7).flatmap(lambda n: st.tuples(st.just(n), polys(BIG, 2**n))))
    def test_output_size_bound(self, args):
        n, p = args
        assert fft(n, root(BIG, n), p).size <= 2**n
        assert fft1(n, root(BIG, n), p).size <= 2**n


class TestComplex:
    @pytest.mark.parametrize("n", range(0, 13))
    def test_matches_naive_within_tolerance(self, n):
        C = ComplexField(1e-9)
        rng = random.Random(100 + n)
        plan = FftPlan.create(C, n)
        p = Polynomial(C, [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(2**n)])
        ref = naive_dft(plan, p)
        bound = C.epsilon * (1 + max((abs(z) for z in ref.coeffs), default=0.0))
        for got in (fft(n, plan.w, p), fft1(n, plan.w, p)):
            diffs = [abs(got[i] - ref[i]) for i in range(2**n)]
            assert max(diffs) <= bound
            assert got == ref

    def test_sign_convention(self):
        C = ComplexField()
        p = Polynomial(C, [0, 1])
        # p(X) = X, so the transform lists the points themselves
        assert fft(2, -1j, p) == Polynomial(C, [1, -1j, -1, 1j])
        assert fft(2, 1j, p) == Polynomial(C, [1, 1j, -1, -1j])
