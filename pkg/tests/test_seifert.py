import random
from fractions import Fraction

import pytest

from knotconc.laurent import GaussianRational, LaurentPoly, circle_point
from knotconc.seifert import (
    EMPTY,
    DerivativeClass,
    SeifertError,
    SeifertMatrix,
    alexander_at_minus_one,
    alexander_polynomial,
    arf,
    connected_sum,
    genus_one_derivatives,
    mirror,
    mirror_reverse,
    operator_matrix,
    reverse,
    signature_at,
    twist_matrix,
)

P = LaurentPoly.parse


def expected_operator_delta(k):
    return (LaurentPoly({1: k, 0: -(k + 1)}) * LaurentPoly({1: k + 1, 0: -k})).normalize()


def random_seifert(rng, genus=None):
    """Random valid Seifert matrix: start from the standard skew form and
    add an arbitrary symmetric integer perturbation below the diagonal."""
    g = genus if genus is not None else rng.randint(1, 3)
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(0, n, 2):
        rows[i][i + 1] = 1  # V - V^T becomes the standard symplectic form
    for i in range(n):
        for j in range(i + 1):
            delta = rng.randint(-2, 2)
            rows[i][j] += delta
            if i != j:
                rows[j][i] += delta
    return SeifertMatrix(rows)


class TestConstruction:
    def test_validation(self):
        with pytest.raises(SeifertError, match="odd"):
            SeifertMatrix([[1]])
        with pytest.raises(SeifertError, match="det"):
            SeifertMatrix([[0, 0], [0, 0]])
        SeifertMatrix([[0, 1], [0, 0]])  # valid

    def test_builtins_valid(self):
        for j in range(1, 30):
            twist_matrix(j)
            operator_matrix(j)

    def test_out_of_range(self):
        with pytest.raises(SeifertError):
            twist_matrix(0)
        with pytest.raises(SeifertError):
            operator_matrix(-1)

    def test_text_roundtrip(self):
        V = operator_matrix(4)
        W = SeifertMatrix.from_text(V.to_text())
        assert V == W

    def test_random_matrices_valid(self):
        rng = random.Random(3)
        for _ in range(50):
            random_seifert(rng)


class TestAlexander:
    def test_operator_formula(self):
        # Delta = (kt - (k+1))((k+1)t - k), exact up to normalization
        for k in range(1, 21):
            got = alexander_polynomial(operator_matrix(k))
            assert got == expected_operator_delta(k), k

    def test_twist_formula(self):
        # jt^2 - (2j-1)t + j, verified independently by 2x2 determinant
        for j in range(1, 21):
            got = alexander_polynomial(twist_matrix(j))
            want = LaurentPoly({2: j, 1: -(2 * j - 1), 0: j})
            assert got == want.normalize()
            # determinant oracle: det([[a-ta, 1], [-t, b-tb]]) with a=-1, b=-j
            a, b = -1, -j
            t = LaurentPoly.t()
            one = LaurentPoly.one()
            det = (LaurentPoly.constant(a) * (one - t)) * (LaurentPoly.constant(b) * (one - t)) + t
            assert got == det.normalize()

    def test_empty(self):
        assert alexander_polynomial(EMPTY) == LaurentPoly.one()

    def test_symmetry_and_det(self):
        rng = random.Random(9)
        for _ in range(60):
            V = random_seifert(rng)
            d = alexander_polynomial(V)
            assert d == d.reciprocal().normalize()  # Delta(t) ~ Delta(1/t)
            assert alexander_at_minus_one(V) % 2 == 1  # |Delta(-1)| odd

    def test_sum_multiplicative(self):
        rng = random.Random(10)
        for _ in range(30):
            V, W = random_seifert(rng, 1), random_seifert(rng, 1)
            lhs = alexander_polynomial(connected_sum(V, W))
            rhs = (alexander_polynomial(V) * alexander_polynomial(W)).normalize()
            assert lhs == rhs

    def test_mirror_reciprocal(self):
        rng = random.Random(11)
        for _ in range(30):
            V = random_seifert(rng, 1)
            assert alexander_polynomial(mirror(V)) == \
                alexander_polynomial(V).reciprocal().normalize()


class TestSignature:
    def test_at_one_is_zero(self):
        for j in range(1, 5):
            assert signature_at(twist_matrix(j), circle_point(Fraction(0))) == 0

    def test_trefoil_convention(self):
        # right-handed trefoil: sigma(-1) = -2
        assert signature_at(twist_matrix(1), GaussianRational(-1, 0)) == -2

    def test_twist_family_at_minus_one(self):
        for j in range(1, 20):
            assert signature_at(twist_matrix(j), GaussianRational(-1, 0)) == -2

    def test_operator_identically_zero(self):
        # ribbon pattern: signature vanishes everywhere off the roots
        for k in (1, 3, 7):
            V = operator_matrix(k)
            for s in (Fraction(1, 3), Fraction(1), Fraction(3), Fraction(7, 2)):
                assert signature_at(V, circle_point(s)) == 0
            assert signature_at(V, GaussianRational(-1, 0)) == 0

    def test_sum_with_inverse_vanishes(self):
        rng = random.Random(12)
        for _ in range(15):
            V = random_seifert(rng, 1)
            W = connected_sum(V, mirror_reverse(V))
            for s in (Fraction(1, 2), Fraction(2), Fraction(5, 3)):
                om = circle_point(s)
                try:
                    assert signature_at(W, om) == 0
                except SeifertError:
                    pass  # random point hit an Alexander root; fine

    def test_even_valued(self):
        rng = random.Random(13)
        for _ in range(25):
            V = random_seifert(rng)
            for s in (Fraction(1, 2), Fraction(3)):
                try:
                    assert signature_at(V, circle_point(s)) % 2 == 0
                except SeifertError:
                    pass

    def test_root_rejected(self):
        # omega = primitive 6th root of unity is a root of the trefoil Delta;
        # it is not on the rational parametrization, so use the matrix with
        # Delta = 2t^2 - 3t + 2 evaluated... instead check the error path by
        # constructing the point exactly: cos = 3/4 is not rational-circle;
        # use omega = i for V with Delta(i) = 0: Delta = t^2 + 1 impossible
        # (|Delta(-1)| odd). The reachable error is the off-circle check.
        with pytest.raises(SeifertError, match="unit circle"):
            signature_at(twist_matrix(1), GaussianRational(2, 0))


class TestArf:
    def test_twist_parity(self):
        for j in range(1, 51):
            assert arf(twist_matrix(j)) == j % 2

    def test_empty(self):
        assert arf(EMPTY) == 0

    def test_additivity(self):
        rng = random.Random(14)
        for _ in range(40):
            V, W = random_seifert(rng), random_seifert(rng)
            assert arf(connected_sum(V, W)) == arf(V) ^ arf(W)

    def test_inverse_cancels(self):
        rng = random.Random(15)
        for _ in range(20):
            V = random_seifert(rng)
            assert arf(connected_sum(V, mirror_reverse(V))) == 0


class TestTransforms:
    def test_sum_with_empty(self):
        V = twist_matrix(2)
        assert connected_sum(V, EMPTY) == V
        assert connected_sum(EMPTY, V) == V

    def test_involutions(self):
        V = operator_matrix(3)
        assert mirror(mirror(V)) == V
        assert reverse(reverse(V)) == V
        assert mirror_reverse(mirror_reverse(V)) == V
        assert mirror(reverse(V)) == mirror_reverse(V)


class TestDerivatives:
    def test_operator_classes(self):
        # -kx^2 + xy + (k+1)y^2 = 0: for k = 3 roots give (1,-1) and (4,3)
        got = genus_one_derivatives(operator_matrix(3))
        assert set((d.x, d.y) for d in got) == {(1, -1), (4, 3)}

    def test_operator_classes_family(self):
        for k in range(1, 15):
            got = genus_one_derivatives(operator_matrix(k))
            assert set((d.x, d.y) for d in got) == {(1, -1), (k + 1, k)}, k

    def test_twist_has_none(self):
        for j in range(1, 10):
            assert genus_one_derivatives(twist_matrix(j)) == []

    def test_definite_form_empty(self):
        V = SeifertMatrix([[1, 1], [0, 1]])  # symmetrization [[2,1],[1,2]] definite
        assert genus_one_derivatives(V) == []

    def test_primitivity_enforced(self):
        with pytest.raises(SeifertError):
            DerivativeClass(2, 4)
