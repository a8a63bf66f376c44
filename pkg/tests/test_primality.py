import random

import pytest

from knotconc.laurent import LaurentError, LaurentPoly, gcd as poly_gcd
from knotconc.primality import (
    IRREDUCIBLE,
    NOT_STRONGLY_COPRIME,
    NOT_STRONGLY_PRIME,
    REDUCIBLE,
    STRONGLY_COPRIME,
    STRONGLY_PRIME,
    UNIT,
    UNKNOWN,
    bonciocat_criterion,
    catalan_solutions,
    divisors,
    exhaustive_factor_search,
    factor_completely,
    is_irreducible,
    is_perfect_power,
    rational_roots,
    sequences_strongly_coprime,
    strongly_coprime,
    strongly_prime,
)

P = LaurentPoly.parse


def delta_k(k):
    """kt - (k+1), the linear factor of the operator Alexander polynomials."""
    return LaurentPoly({1: k, 0: -(k + 1)})


class TestIntegerHelpers:
    def test_divisors(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(-9) == [1, 3, 9]
        assert divisors(1) == [1]

    def test_perfect_powers(self):
        assert is_perfect_power(4) and is_perfect_power(-8) and is_perfect_power(1)
        assert is_perfect_power(729) and is_perfect_power(1024)
        assert not is_perfect_power(6) and not is_perfect_power(-12)
        assert not is_perfect_power(2)


class TestIrreducibility:
    def test_paper_certificate(self):
        assert is_irreducible(P("8*t^3 - 9")).status == IRREDUCIBLE

    def test_reducible_with_witness(self):
        v = is_irreducible(P("2*t^2 - 5*t + 2"))
        assert v.status == REDUCIBLE
        assert v.witness == P("t - 2")
        assert v.witness.divides(P("2*t^2 - 5*t + 2"))

    def test_monomial_is_unit(self):
        assert is_irreducible(LaurentPoly({5: 1})).status == UNIT

    def test_zero_rejected(self):
        with pytest.raises(LaurentError):
            is_irreducible(LaurentPoly.zero())

    def test_quartic_products(self):
        f = P("t^2 + t + 1") * P("t^2 - t + 1")
        v = is_irreducible(f)
        assert v.status == REDUCIBLE
        assert v.witness.divides(f)

    def test_soundness_against_oracle(self):
        # every Irreducible verdict must agree with the exhaustive search
        rng = random.Random(42)
        for _ in range(120):
            span = rng.randint(1, 8)
            coeffs = [rng.randint(-8, 8) for _ in range(span)] + [rng.randint(1, 8)]
            if coeffs[0] == 0:
                coeffs[0] = 1
            f = LaurentPoly({i: c for i, c in enumerate(coeffs)})
            v = is_irreducible(f)
            w = exhaustive_factor_search(f)
            if v.status == IRREDUCIBLE:
                assert w is None, f"false certificate on {f}"
            elif v.status == REDUCIBLE:
                assert w is not None
                assert v.witness.divides(f.normalize())

    def test_factor_completely(self):
        f = delta_k(3) * delta_k(3) * P("t - 5")
        fac = factor_completely(f)
        assert len(fac) == 3
        prod = LaurentPoly.one()
        for g in fac:
            prod = prod * g
        assert prod.associate(f)

    def test_rational_roots(self):
        assert rational_roots(P("2*t^2 - 5*t + 2")) == [LaurentPoly.parse("1/2").coeff(0), 2]


class TestBonciocat:
    def test_eight_t_p_minus_nine(self):
        # alpha_1 = 3 (valuation of 8 at 2), alpha_2 = 2 (valuation of 9 at 3)
        for p in range(1, 51):
            f = LaurentPoly({p: 8, 0: -9})
            assert bonciocat_criterion(f, 2, 3).status == IRREDUCIBLE

    def test_p_three_edge(self):
        # gcd(alpha_1, 3) = 3 but gcd(alpha_2, 3) = 1 keeps the product 1
        assert bonciocat_criterion(P("8*t^3 - 9"), 2, 3).status == IRREDUCIBLE

    def test_p_two_edge(self):
        assert bonciocat_criterion(P("8*t^2 - 9"), 2, 3).status == IRREDUCIBLE

    def test_reducible_never_certifies(self):
        assert bonciocat_criterion(P("t^2 - 1"), 2, 3).status == UNKNOWN

    def test_invalid_primes(self):
        with pytest.raises(LaurentError, match="invalid prime pair"):
            bonciocat_criterion(P("t - 2"), 4, 3)
        with pytest.raises(LaurentError, match="invalid prime pair"):
            bonciocat_criterion(P("t - 2"), 3, 3)


class TestStrongPrimality:
    def test_delta_family_small(self):
        # k = 3: a_0 = -4 is a perfect power, so the two-prime route fires
        v3 = strongly_prime(delta_k(3))
        assert v3.status == STRONGLY_PRIME
        # k = 5: a_0 = -6 is not a perfect power; coprime-coefficient route
        v5 = strongly_prime(delta_k(5))
        assert v5.status == STRONGLY_PRIME
        assert "coprime-coefficient" in v5.certificate[0]

    def test_eight_t_minus_nine(self):
        v = strongly_prime(P("8*t - 9"))
        assert v.status == STRONGLY_PRIME
        assert any("two-prime" in line for line in v.certificate)

    def test_not_strongly_prime_witness(self):
        v = strongly_prime(P("t^2 + t + 1"))
        assert v.status == NOT_STRONGLY_PRIME
        assert v.witness_exponent == 2
        # witness re-check: the substitution really is reducible
        sub = P("t^2 + t + 1").substitute_power(2)
        assert is_irreducible(sub).status == REDUCIBLE
        assert sub == P("t^2 + t + 1") * P("t^2 - t + 1")

    def test_delta_family_sweep(self):
        for k in range(1, 51):
            assert strongly_prime(delta_k(k)).status == STRONGLY_PRIME, k

    def test_monomial_rejected(self):
        with pytest.raises(LaurentError):
            strongly_prime(LaurentPoly({2: 3}))


class TestCatalan:
    def test_full_bounds(self):
        assert catalan_solutions(1000, 1000, 20, 20) == [(3, 2, 2, 3)]

    def test_tiny_bounds(self):
        assert catalan_solutions(2, 2, 2, 2) == []

    def test_small_bounds(self):
        assert catalan_solutions(10, 10, 5, 5) == [(3, 2, 2, 3)]

    def test_monotone(self):
        small = set(catalan_solutions(50, 50, 6, 6))
        large = set(catalan_solutions(200, 200, 10, 10))
        assert small <= large
        assert (3, 2, 2, 3) in small


class TestStrongCoprimality:
    def test_delta1_delta2(self):
        v = strongly_coprime(P("t - 2"), P("2*t - 3"))
        assert v.status == STRONGLY_COPRIME

    def test_power_dependence(self):
        v = strongly_coprime(P("t - 2"), P("t - 4"))
        assert v.status == NOT_STRONGLY_COPRIME
        k, l = v.witness
        assert (k, l) == (1, 2)
        got = poly_gcd(P("t - 2").substitute_power(k), P("t - 4").substitute_power(l))
        assert got.span() > 0

    def test_self_pair(self):
        v = strongly_coprime(P("t - 2"), P("t - 2"))
        assert v.status == NOT_STRONGLY_COPRIME
        assert v.witness == (1, 1)

    def test_inverse_roots_dependent(self):
        # roots 2 and 1/2: negative exponents relate them
        v = strongly_coprime(P("t - 2"), P("2*t - 1"))
        assert v.status == NOT_STRONGLY_COPRIME
        k, l = v.witness
        g = poly_gcd(P("t - 2").substitute_power(k), P("2*t - 1").substitute_power(l))
        assert g.span() > 0

    def test_sign_blocks_dependence(self):
        # 2 vs -8: would need sigma = +1 and sigma^3 = -1
        v = strongly_coprime(P("t - 2"), P("t + 8"))
        assert v.status == STRONGLY_COPRIME

    def test_even_exponent_erases_sign(self):
        # 2 vs -4 = -(2^2): n=1, m=2 requires ss=+1: not solvable -> coprime
        v = strongly_coprime(P("t - 2"), P("t + 4"))
        assert v.status == STRONGLY_COPRIME
        # but -2 vs 4 is dependent: (-2)^2 = 4
        v2 = strongly_coprime(P("t + 2"), P("t - 4"))
        assert v2.status == NOT_STRONGLY_COPRIME
        k, l = v2.witness
        g = poly_gcd(P("t + 2").substitute_power(k), P("t - 4").substitute_power(l))
        assert g.span() > 0

    def test_outside_class_unknown(self):
        # t^2 + t + 1 is irreducible but not a binomial
        v = strongly_coprime(P("t^2 + t + 1"), P("t - 2"))
        assert v.status == UNKNOWN

    def test_outside_class_witness_found(self):
        v = strongly_coprime(P("t^2 + t + 1"), P("t^2 + t + 1"))
        assert v.status == NOT_STRONGLY_COPRIME
        assert v.witness == (1, 1)

    def test_delta_family_pairwise(self):
        for k1 in range(1, 8):
            for k2 in range(k1 + 1, 8):
                v = strongly_coprime(delta_k(k1), delta_k(k2))
                assert v.status == STRONGLY_COPRIME, (k1, k2)


class TestSequences:
    def test_first_entry_route(self):
        delta = P("t - 2") * P("2*t - 1")
        Pseq = [delta.substitute_power(2), delta]
        Qseq = [delta.substitute_power(3), delta]
        v = sequences_strongly_coprime(Pseq, Qseq)
        assert v.status == STRONGLY_COPRIME

    def test_identical_sequences_never_coprime(self):
        delta = P("t - 2") * P("2*t - 1")
        v = sequences_strongly_coprime([delta, delta], [delta, delta])
        assert v.status != STRONGLY_COPRIME
        if v.status == NOT_STRONGLY_COPRIME:
            k, l = v.witness
            assert poly_gcd(delta.substitute_power(k), delta.substitute_power(l)).span() > 0

    def test_single_entry(self):
        v = sequences_strongly_coprime([P("t - 2")], [P("2*t - 3")])
        assert v.status == STRONGLY_COPRIME

    def test_length_mismatch(self):
        with pytest.raises(LaurentError):
            sequences_strongly_coprime([P("t - 2")], [])
