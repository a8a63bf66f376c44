import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotconc.laurent import (
    GaussianRational,
    LaurentError,
    LaurentPoly,
    circle_point,
    gcd,
    resultant,
)

L = LaurentPoly


def P(text):
    return LaurentPoly.parse(text)


def random_poly(rng, max_span=4, max_coeff=6, allow_zero=True):
    if allow_zero and rng.random() < 0.1:
        return L.zero()
    lo = rng.randint(-3, 3)
    terms = {}
    for e in range(lo, lo + rng.randint(0, max_span) + 1):
        terms[e] = rng.randint(-max_coeff, max_coeff)
    if not any(terms.values()):
        terms[lo] = 1
    return L(terms)


small_polys = st.builds(
    lambda lo, cs: L({lo + i: c for i, c in enumerate(cs)}),
    st.integers(-3, 3),
    st.lists(st.integers(-6, 6), min_size=0, max_size=5),
)


class TestArithmetic:
    def test_product_expansion(self):
        assert P("t - 2") * P("2*t - 1") == P("2*t^2 - 5*t + 2")

    def test_additive_identity(self):
        f = P("3*t^-1 - 7")
        assert f + L.zero() == f

    def test_divide_with_remainder(self):
        q, r = P("2*t^2 - 5*t + 2").divmod(P("t - 2"))
        assert r.is_zero()
        assert q == P("2*t - 1")
        # oracle: re-multiply
        assert q * P("t - 2") == P("2*t^2 - 5*t + 2")

    def test_divide_by_zero(self):
        with pytest.raises(LaurentError, match="zero divisor"):
            P("t").divmod(L.zero())

    def test_divmod_contract_random(self):
        rng = random.Random(7)
        for _ in range(300):
            f = random_poly(rng)
            g = random_poly(rng, allow_zero=False)
            q, r = f.divmod(g)
            assert f == q * g + r
            assert r.is_zero() or r.span() < g.span()

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=200, deadline=None)
    def test_ring_axioms(self, f, g, h):
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) * h == f * h + g * h
        assert (f * g) * h == f * (g * h)


class TestNormalize:
    def test_unit_shift_and_sign(self):
        assert L({-1: -2, 0: 5, 1: -2}).normalize() == P("2*t^2 - 5*t + 2")

    def test_monomials_normalize_to_one(self):
        assert L({3: Fraction(3, 2)}).normalize() == L.one()

    def test_content_removed(self):
        got = L({-2: 4, -1: -6}).normalize()
        # oracle: 4t^-2 - 6t^-1 = -2 t^-2 (3t - 2); re-multiplying confirms
        assert got == P("3*t - 2")
        assert L({-2: -2}) * got == L({-2: 4, -1: -6})
        # re-check content(result) = 1
        c, _ = got.content_and_primitive()
        assert c == 1

    def test_zero_has_no_normal_form(self):
        with pytest.raises(LaurentError, match="no canonical associate"):
            L.zero().normalize()

    @given(small_polys, small_polys)
    @settings(max_examples=200, deadline=None)
    def test_normalize_multiplicative(self, f, g):
        if f.is_zero() or g.is_zero():
            return
        assert (f * g).normalize() == (f.normalize() * g.normalize()).normalize()


class TestSubstitution:
    def test_paper_substitution(self):
        # 8t - 9 at t -> t^3
        f = L({1: 8, 0: -9})
        assert f.substitute_power(3) == P("8*t^3 - 9")

    def test_negative_power_then_normalize(self):
        f = P("t - 2").substitute_power(-1)
        assert f == L({-1: 1, 0: -2})
        assert f.normalize() == P("2*t - 1")

    def test_identity(self):
        rng = random.Random(1)
        for _ in range(20):
            f = random_poly(rng)
            assert f.substitute_power(1) == f

    def test_zero_exponent_rejected(self):
        with pytest.raises(LaurentError, match="degenerate"):
            P("t").substitute_power(0)

    def test_composition(self):
        rng = random.Random(2)
        for _ in range(50):
            f = random_poly(rng)
            a = rng.choice([-3, -2, -1, 1, 2, 3])
            b = rng.choice([-3, -2, -1, 1, 2, 3])
            assert f.substitute_power(a).substitute_power(b) == f.substitute_power(a * b)

    def test_multiplicative(self):
        rng = random.Random(3)
        for _ in range(50):
            f = random_poly(rng, allow_zero=False)
            g = random_poly(rng, allow_zero=False)
            k = rng.choice([-2, 2, 3])
            assert (f * g).substitute_power(k) == f.substitute_power(k) * g.substitute_power(k)


class TestGcdResultant:
    def test_gcd_examples(self):
        assert gcd(P("2*t^2 - 5*t + 2"), P("t - 2")) == P("t - 2")
        assert gcd(P("t - 2"), P("2*t - 3")) == L.one()
        f = P("3*t^2 - 5*t - 1")
        assert gcd(f, f) == f.normalize()

    def test_gcd_of_zero(self):
        assert gcd(P("2*t - 4"), L.zero()) == P("t - 2")
        with pytest.raises(LaurentError):
            gcd(L.zero(), L.zero())

    def test_gcd_divides_both(self):
        rng = random.Random(11)
        for _ in range(200):
            f = random_poly(rng, allow_zero=False)
            g = random_poly(rng, allow_zero=False)
            d = gcd(f, g)
            assert d.divides(f) and d.divides(g)

    def test_gcd_common_factor(self):
        rng = random.Random(12)
        for _ in range(100):
            f = random_poly(rng, allow_zero=False)
            g = random_poly(rng, allow_zero=False)
            h = random_poly(rng, allow_zero=False)
            d = gcd(f * h, g * h)
            # normalize(h) * gcd(f, g) divides d
            assert (h.normalize() * gcd(f, g)).divides(d)

    def test_resultant_linear(self):
        # res(t - 2, t - 3) has magnitude |3 - 2| = 1
        assert abs(resultant(P("t - 2"), P("t - 3"))) == 1

    def test_resultant_shared_root(self):
        assert resultant(P("t - 2"), P("2*t^2 - 5*t + 2")) == 0

    def test_resultant_unit(self):
        rng = random.Random(13)
        for _ in range(20):
            f = random_poly(rng, allow_zero=False)
            assert resultant(f, L.one()) == 1

    def test_resultant_vs_gcd(self):
        rng = random.Random(14)
        for _ in range(200):
            f = random_poly(rng, allow_zero=False)
            g = random_poly(rng, allow_zero=False)
            r = resultant(f, g)
            d = gcd(f, g)
            assert (r == 0) == (d.span() > 0)


class TestTextForm:
    def test_round_trip(self):
        rng = random.Random(4)
        for _ in range(200):
            f = random_poly(rng)
            assert LaurentPoly.parse(str(f)) == f

    def test_rational_coefficients(self):
        f = L({1: Fraction(3, 2), 0: -1})
        assert LaurentPoly.parse(str(f)) == f
        assert LaurentPoly.parse("3/2*t - 1") == f

    def test_examples(self):
        # canonical rendering is descending in the exponent
        assert str(P("2*t^2 - 5*t + 2")) == "2*t^2 - 5*t + 2"
        assert str(P("8*t^-1 - 9")) == "-9 + 8*t^-1"
        assert P("8*t^-1 - 9") == L({-1: 8, 0: -9})
        assert str(L.zero()) == "0"

    def test_bad_input(self):
        with pytest.raises(LaurentError):
            LaurentPoly.parse("2*x + 1")


class TestGaussianRational:
    def test_circle_point_on_circle(self):
        for s in [Fraction(1, 3), Fraction(2), Fraction(-5, 7)]:
            w = circle_point(s)
            assert w.norm_sq() == 1
            assert w.conjugate() * w == GaussianRational(1, 0)

    def test_evaluate_on_circle(self):
        f = P("t + t^-1")
        w = circle_point(Fraction(1))  # i
        assert f.evaluate(w) == GaussianRational(0, 0)

    def test_field_ops(self):
        a = GaussianRational(Fraction(1, 2), 3)
        b = GaussianRational(-2, Fraction(1, 5))
        assert (a / b) * b == a
        assert a ** 3 == a * a * a
