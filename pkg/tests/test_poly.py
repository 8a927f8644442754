import pytest
from hypothesis import given
from hypothesis import strategies as st

from fftpoly import ComplexField, DomainMismatch, Polynomial, build, coeff, dilate, drop_poly, even_poly
from fftpoly import evaluate, naive_mul, odd_poly, take_poly
from fftpoly.poly import add, neg, scale, shift_mul_xm, sub, uphalf

from helpers import BIG, P, SMALL, fields, polys, ref_convolve, ref_eval

Z17 = SMALL


def poly(*cs, dom=Z17):
    return Polynomial(dom, cs)


P1234 = poly(1, 2, 3, 4)


class TestBasics:
    def test_normalized_on_construction(self):
        assert poly(1, 2, 0, 0).coeffs == (1, 2)
        assert poly(0, 0).coeffs == ()
        assert poly(17, 34).coeffs == ()
        assert poly(-1).coeffs == (16,)

    def test_coeff(self):
        assert coeff(Polynomial.zero(Z17), 5) == 0
        assert coeff(poly(1, 2, 3), 1) == 2
        assert coeff(poly(1, 2, 3), 7) == 0

    def test_build(self):
        assert build(Z17, 3, lambda i: 0) == Polynomial.zero(Z17)
        assert build(Z17, 3, lambda i: i + 1) == poly(1, 2, 3)
        b = build(Z17, 2, lambda i: [5, 0][i])
        assert b == poly(5) and b.size == 1

    def test_eval(self):
        assert evaluate(Polynomial.zero(Z17), 3) == 0
        assert evaluate(P1234, 1) == 10
        assert evaluate(P1234, 4) == 313 % 17 == 7

    def test_immutable(self):
        with pytest.raises(AttributeError):
            P1234.coeffs = ()

    def test_domain_mismatch(self):
        with pytest.raises(DomainMismatch):
            add(P1234, poly(1, dom=BIG))

    def test_size_is_degree_plus_one(self):
        assert P1234.size == 4 and len(P1234) == 4
        assert Polynomial.zero(Z17).size == 0


class TestEvenOdd:
    def test_worked_example(self):
        p = poly(1, 2, 3, 4, 5)
        assert even_poly(p) == poly(1, 3, 5)
        assert odd_poly(p) == poly(2, 4)

    def test_degenerate(self):
        z = Polynomial.zero(Z17)
        assert even_poly(z) == z and odd_poly(z) == z
        assert even_poly(poly(9)) == poly(9)
        assert odd_poly(poly(9)) == z

    def test_inner_zero_trimmed(self):
        # even part of 1 + 7X + 0X^2 + 5X^3 is the constant 1
        assert even_poly(poly(1, 7, 0, 5)).coeffs == (1,)

    @given(fields.flatmap(lambda F: polys(F, 40)))
    def test_poly_even_odd(self, p):
        rebuilt = add(dilate(even_poly(p), 2), shift_mul_xm(dilate(odd_poly(p), 2), 1))
        assert rebuilt == p

    @given(fields.flatmap(lambda F: polys(F, 40)))
    def test_size_bounds(self, p):
        assert even_poly(p).size <= uphalf(p.size)
        assert odd_poly(p).size <= p.size // 2
        for i in range(p.size):
            assert coeff(even_poly(p), i) == coeff(p, 2 * i)
            assert coeff(odd_poly(p), i) == coeff(p, 2 * i + 1)


class TestTakeDrop:
    def test_examples(self):
        assert take_poly(2, P1234) == poly(1, 2)
        assert take_poly(0, P1234) == Polynomial.zero(Z17)
        assert take_poly(9, P1234) == P1234
        assert drop_poly(2, P1234) == poly(3, 4)
        assert drop_poly(0, P1234) == P1234
        assert drop_poly(4, P1234) == Polynomial.zero(Z17)

    @given(fields.flatmap(lambda F: polys(F, 40)), st.integers(0, 50))
    def test_poly_take_drop(self, p, m):
        assert add(take_poly(m, p), shift_mul_xm(drop_poly(m, p), m)) == p


class TestDilate:
    def test_examples(self):
        assert dilate(poly(1, 3, 5), 2) == poly(1, 0, 3, 0, 5)
        assert dilate(P1234, 1) == P1234
        assert dilate(Polynomial.zero(Z17), 2) == Polynomial.zero(Z17)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            dilate(P1234, 0)

    @given(polys(BIG, 20), st.integers(1, 5), st.integers(0, P - 1))
    def test_is_composition_with_monomial(self, p, k, x):
        assert evaluate(dilate(p, k), x) == evaluate(p, pow(x, k, P))


class TestArithmetic:
    def test_examples(self):
        assert naive_mul(poly(1, 1), poly(1, 1)) == poly(1, 2, 1)
        assert naive_mul(P1234, Polynomial.zero(Z17)) == Polynomial.zero(Z17)
        assert add(P1234, neg(P1234)) == Polynomial.zero(Z17)
        assert sub(P1234, P1234).size == 0
        assert scale(2, P1234) == poly(2, 4, 6, 8)
        assert shift_mul_xm(poly(1, 2), 2) == poly(0, 0, 1, 2)

    def test_operators(self):
        assert P1234 * poly(1, 1) == naive_mul(P1234, poly(1, 1))
        assert P1234 + P1234 == scale(2, P1234)
        assert -P1234 == neg(P1234)
        assert P1234(4) == 7

    @given(fields.flatmap(lambda F: st.tuples(polys(F, 60), polys(F, 60))))
    def test_naive_mul_matches_reference(self, pq):
        p, q = pq
        assert list(naive_mul(p, q).coeffs) == ref_convolve(list(p.coeffs), list(q.coeffs), p.domain.modulus)

    @given(polys(BIG, 30), polys(BIG, 30), st.integers(0, P - 1))
    def test_eval_is_ring_morphism(self, p, q, x):
        assert evaluate(naive_mul(p, q), x) == evaluate(p, x) * evaluate(q, x) % P
        assert evaluate(add(p, q), x) == (evaluate(p, x) + evaluate(q, x)) % P
        assert evaluate(p, x) == ref_eval(p.coeffs, x, P)

    @given(fields.flatmap(lambda F: st.tuples(polys(F, 30), polys(F, 30))), st.integers(0, 40))
    def test_outputs_normalized(self, pq, m):
        p, q = pq
        for r in (add(p, q), sub(p, q), naive_mul(p, q), take_poly(m, p), drop_poly(m, p),
                  even_poly(p), odd_poly(p), dilate(p, 3), scale(0, p)):
            assert not r.coeffs or r.coeffs[-1] != 0

    @given(st.integers(1, 30), st.data())
    def test_build_coeff_round_trip(self, n, data):
        vals = data.draw(st.lists(st.integers(0, P - 1), min_size=n, max_size=n))
        vals[-1] = vals[-1] or 1
        p = build(BIG, n, vals.__getitem__)
        assert [coeff(p, i) for i in range(n)] == vals


class TestComplexPolys:
    def test_approximate_equality_pads(self):
        C = ComplexField(1e-9)
        a = Polynomial(C, [1, 2, 1e-12])
        b = Polynomial(C, [1, 2])
        assert a == b
        assert a != Polynomial(C, [1, 2.001])

    def test_unhashable(self):
        with pytest.raises(TypeError):
            hash(Polynomial(ComplexField(), [1]))
        assert hash(P1234) == hash(poly(1, 2, 3, 4))
