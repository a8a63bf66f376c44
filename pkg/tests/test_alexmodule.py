import pytest

from knotconc.laurent import LaurentPoly, gcd as poly_gcd
from knotconc.alexmodule import (
    ISOTROPIC,
    LAGRANGIAN,
    NEITHER,
    CyclicAlexModule,
    ModuleError,
    PairingValue,
    Submodule,
    beta_relation_check,
    blanchfield_pairing,
    cable_module,
    cyclic_reduction,
    derivative_submodule,
    is_isotropic,
    orthogonal_submodule,
    orthogonal_submodule_shortcut,
    proper_submodules,
    transport_submodule,
)
from knotconc.seifert import genus_one_derivatives, operator_matrix

P = LaurentPoly.parse


def delta_k(k):
    return LaurentPoly({1: k, 0: -(k + 1)})


def q_module(k):
    return CyclicAlexModule(delta_k(k), f"alpha_{k}")


class TestSubmodules:
    def test_three_distinct_for_k3(self):
        subs = proper_submodules(q_module(3))
        assert len(subs) == 3
        gens = {s.generator for s in subs}
        assert P("3*t - 4") in gens and P("4*t - 3") in gens
        # trivial intersection of the two nontrivial ones
        assert poly_gcd(P("3*t - 4"), P("4*t - 3")).span() == 0

    def test_three_distinct_family(self):
        for k in range(1, 21):
            subs = proper_submodules(q_module(k))
            assert len(subs) == 3, k

    def test_self_reciprocal_coincide(self):
        # delta = t - 1 is its own reciprocal up to units
        M = CyclicAlexModule(P("t - 1"))
        assert len(proper_submodules(M)) == 2

    def test_eight_nine(self):
        M = CyclicAlexModule(P("8*t - 9"))
        assert len(proper_submodules(M)) == 3

    def test_reducible_rejected(self):
        M = CyclicAlexModule(P("2*t^2 - 5*t + 2"))
        with pytest.raises(ModuleError, match="robust-type"):
            proper_submodules(M)

    def test_membership(self):
        M = q_module(3)
        d = Submodule(M.delta_factor)
        assert d.contains(M, P("3*t - 4") * P("t + 7"))
        assert not d.contains(M, LaurentPoly.one())
        zero = Submodule(M.order)
        assert zero.contains(M, M.order * P("t"))
        assert not zero.contains(M, P("3*t - 4"))


class TestBlanchfield:
    def test_derivative_lifts_pair_to_zero(self):
        for k in (1, 3, 5):
            V = operator_matrix(k)
            for cls in genus_one_derivatives(V):
                lift = (LaurentPoly.constant(V[0, 0] * cls.x + V[1, 0] * cls.y),
                        LaurentPoly.constant(V[0, 1] * cls.x + V[1, 1] * cls.y))
                val = blanchfield_pairing(V, lift, lift)
                assert val.is_zero()

    def test_zero_argument(self):
        V = operator_matrix(2)
        z = (LaurentPoly.zero(), LaurentPoly.zero())
        e = (LaurentPoly.one(), LaurentPoly.zero())
        assert blanchfield_pairing(V, z, e).is_zero()

    def test_hermitian(self):
        V = operator_matrix(3)
        x = (P("t - 2"), LaurentPoly.one())
        y = (LaurentPoly.one(), P("t"))
        b1 = blanchfield_pairing(V, x, y)
        b2 = blanchfield_pairing(V, y, x).conjugate()
        assert b1.equals(b2)

    def test_sesquilinear(self):
        V = operator_matrix(2)
        x = (LaurentPoly.one(), LaurentPoly.zero())
        y = (LaurentPoly.zero(), LaurentPoly.one())
        t = LaurentPoly.t()
        base = blanchfield_pairing(V, x, y)
        assert blanchfield_pairing(V, (t, LaurentPoly.zero()), y).equals(base.scaled(t))

    def test_nonzero_somewhere(self):
        V = operator_matrix(3)
        e1 = (LaurentPoly.one(), LaurentPoly.zero())
        assert not blanchfield_pairing(V, e1, e1).is_zero()


class TestIsotropy:
    def test_zero_submodule_isotropic(self):
        M = q_module(3)
        V = operator_matrix(3)
        zero = Submodule(M.order)
        assert is_isotropic(M, V, zero) == ISOTROPIC

    def test_nontrivial_lagrangians(self):
        for k in range(1, 21):
            M = q_module(k)
            V = operator_matrix(k)
            for sub in proper_submodules(M)[1:]:
                assert is_isotropic(M, V, sub) == LAGRANGIAN, k

    def test_whole_module_neither(self):
        M = q_module(4)
        V = operator_matrix(4)
        whole = Submodule(LaurentPoly.one())
        assert is_isotropic(M, V, whole) == NEITHER

    def test_convention_independent(self):
        M = q_module(5)
        V = operator_matrix(5)
        for sub in proper_submodules(M):
            assert is_isotropic(M, V, sub, sign="1-t") == \
                is_isotropic(M, V, sub, sign="t-1")

    def test_pairing_vs_divisibility_shortcut(self):
        # two independent routes to P^perp must agree on the delta family
        for k in range(1, 21):
            M = q_module(k)
            V = operator_matrix(k)
            for sub in proper_submodules(M):
                via_pairing = orthogonal_submodule(M, V, sub)
                via_shortcut = orthogonal_submodule_shortcut(M, sub)
                assert via_pairing.same_as(via_shortcut), k

    def test_derivative_classes_generate_isotropic(self):
        for k in range(1, 15):
            M = q_module(k)
            V = operator_matrix(k)
            subs = [derivative_submodule(M, V, c) for c in genus_one_derivatives(V)]
            assert len(subs) == 2
            for s in subs:
                assert is_isotropic(M, V, s) in (ISOTROPIC, LAGRANGIAN)
            # they are exactly the two nontrivial proper submodules
            gens = {s.generator for s in subs}
            assert gens == {M.delta_factor, M.delta_reciprocal}


class TestCabling:
    def test_cable_order(self):
        M = q_module(3)
        M2 = cable_module(M, 2)
        assert M2.delta_factor == P("3*t^2 - 4")
        assert M2.order == (P("3*t^2 - 4") * P("4*t^2 - 3")).normalize()
        assert M2.robust_type

    def test_identity(self):
        M = q_module(2)
        assert cable_module(M, 1) is M

    def test_submodule_count_preserved(self):
        for k in (1, 3, 8):
            M = q_module(k)
            for p in (2, 3, 5):
                Mp = cable_module(M, p)
                subs = proper_submodules(Mp)
                assert len(subs) == 3, (k, p)
                transported = {transport_submodule(M, s, p).generator
                               for s in proper_submodules(M)}
                assert transported == {s.generator for s in subs}

    def test_composition(self):
        M = q_module(3)
        a = cable_module(cable_module(M, 2), 3)
        b = cable_module(M, 6)
        assert a.order == b.order

    def test_non_robust_flagged(self):
        # delta = t - 4: at p = 2, t^2 - 4 factors; flag, not error
        M = CyclicAlexModule(P("t - 4"))
        M2 = cable_module(M, 2)
        assert not M2.robust_type

    def test_ribbon_marker_transported(self):
        M = q_module(3)
        marked = Submodule(M.delta_factor, frozenset({"ribbon"}))
        moved = transport_submodule(M, marked, 4)
        assert "ribbon" in moved.labels
        assert moved.generator == P("3*t^4 - 4")


class TestBetaRelation:
    def test_small_k(self):
        assert beta_relation_check(1)
        assert beta_relation_check(3)

    def test_k10(self):
        assert beta_relation_check(10)

    def test_cyclic_reduction_value(self):
        # e2 = k(1-t) e1 in the operator presentation
        for k in (1, 2, 7):
            c = cyclic_reduction(operator_matrix(k))
            assert c == LaurentPoly({0: k, 1: -k})
