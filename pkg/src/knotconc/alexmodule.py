"""Cyclic rational Alexander modules and the Blanchfield pairing.

The robust-operator patterns have A(R) = Q[t,t^-1] / (delta(t) delta(1/t))
with delta irreducible, so every submodule is cyclic, generated by a
divisor of the order.  Submodules are stored through that divisor (the
gcd of any generator with the order), which makes inclusion a divisibility
test and lets ribbon-disk markers ride along as labels.

The pairing is computed from a genus-one Seifert matrix presentation
x^T (tV - V^T)^{-1} y (1-t), conjugating the second argument, with values
in Q(t)/Q[t,t^-1].  The sign and conjugation conventions are options;
isotropy verdicts do not depend on them (tested).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .laurent import LaurentError, LaurentPoly, gcd as poly_gcd
from . import primality

ISOTROPIC = "isotropic"
LAGRANGIAN = "lagrangian"
NEITHER = "neither"


class ModuleError(ValueError):
    pass


def reciprocal_normalized(f: LaurentPoly) -> LaurentPoly:
    return f.reciprocal().normalize()


@dataclass(frozen=True)
class CyclicAlexModule:
    """Q[t,t^-1] / (delta(t) * delta(1/t)) with a named generator."""
    delta_factor: LaurentPoly
    generator_name: str = "alpha"
    robust_type: bool = field(default=True, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "delta_factor", self.delta_factor.normalize())

    @property
    def order(self) -> LaurentPoly:
        return (self.delta_factor * self.delta_factor.reciprocal()).normalize()

    @property
    def delta_reciprocal(self) -> LaurentPoly:
        return reciprocal_normalized(self.delta_factor)

    def check_robust_type(self) -> bool:
        """delta must be irreducible for the three-submodule picture."""
        return primality.is_irreducible(self.delta_factor).is_irreducible

    def element(self, g: LaurentPoly) -> LaurentPoly:
        """Canonical residue representative: the normalized gcd with the order."""
        if g.is_zero():
            return self.order
        d = poly_gcd(g, self.order)
        return d.normalize()


@dataclass(frozen=True)
class Submodule:
    """A submodule of a cyclic module, stored as its canonical generator:
    a normalized divisor of the order (the order itself encodes <0>)."""
    generator: LaurentPoly
    labels: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "generator", self.generator.normalize())

    def is_zero_submodule(self, M: CyclicAlexModule) -> bool:
        return self.generator == M.order

    def contains(self, M: CyclicAlexModule, element: LaurentPoly) -> bool:
        """element in <generator> iff generator | gcd(element, order)."""
        return self.generator.divides(M.element(element))

    def included_in(self, other: "Submodule") -> bool:
        return other.generator.divides(self.generator)

    def same_as(self, other: "Submodule") -> bool:
        return self.generator == other.generator

    def with_label(self, *names: str) -> "Submodule":
        return Submodule(self.generator, self.labels | frozenset(names))


def proper_submodules(M: CyclicAlexModule) -> list[Submodule]:
    """All proper submodules: <0>, <delta(t)>, <delta(1/t)>; the last two
    coincide exactly when delta is self-reciprocal up to units."""
    if not M.check_robust_type():
        raise ModuleError("not a robust-type module: delta factor is reducible")
    zero = Submodule(M.order)
    d1 = Submodule(M.delta_factor)
    d2 = Submodule(M.delta_reciprocal)
    if d1.same_as(d2):
        return [zero, d1]
    return [zero, d1, d2]


# ----------------------------------------------------------------------
# Blanchfield pairing from a genus-one presentation

@dataclass(frozen=True)
class PairingValue:
    """An element of Q(t)/Q[t,t^-1] as a (numerator, denominator) pair."""
    num: LaurentPoly
    den: LaurentPoly

    def reduced(self) -> LaurentPoly:
        """Representative with span below span(den)."""
        return self.num.divmod(self.den)[1]

    def is_zero(self) -> bool:
        return self.den.divides(self.num)

    def equals(self, other: "PairingValue") -> bool:
        cross = self.num * other.den - other.num * self.den
        return (self.den * other.den).divides(cross)

    def conjugate(self) -> "PairingValue":
        return PairingValue(self.num.reciprocal(), self.den.reciprocal())

    def scaled(self, p: LaurentPoly) -> "PairingValue":
        return PairingValue(self.num * p, self.den)


def _presentation_matrix(V) -> list[list[LaurentPoly]]:
    t = LaurentPoly.t()
    n = V.dim
    return [[t * V[i, j] - LaurentPoly.constant(V[j, i]) for j in range(n)]
            for i in range(n)]


def blanchfield_pairing(V, x, y, sign: str = "1-t") -> PairingValue:
    """Pairing of elements x, y (pairs of Laurent polynomials in the
    band-dual generator basis) of the module presented by tV - V^T.

    Convention: Bl(x, y) = s(t) * x^T (tV - V^T)^{-1} conj(y), where s(t)
    is (1-t) or (t-1) per ``sign``; so Bl(p x, y) = p Bl(x, y) and
    Bl(x, p y) = conj(p) Bl(x, y).
    """
    if V.dim != 2:
        raise ModuleError("pairing needs a genus-one (2x2) presentation")
    if sign not in ("1-t", "t-1"):
        raise ModuleError("sign convention must be '1-t' or 't-1'")
    A = _presentation_matrix(V)
    det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    if det.is_zero():
        raise ModuleError("degenerate module: det(tV - V^T) = 0")
    adj = [[A[1][1], -A[0][1]], [-A[1][0], A[0][0]]]
    x = [LaurentPoly.constant(c) if isinstance(c, int) else c for c in x]
    y = [LaurentPoly.constant(c) if isinstance(c, int) else c for c in y]
    ybar = [c.reciprocal() for c in y]
    acc = LaurentPoly.zero()
    for i in range(2):
        for j in range(2):
            acc = acc + x[i] * adj[i][j] * ybar[j]
    s = LaurentPoly({0: 1, 1: -1}) if sign == "1-t" else LaurentPoly({0: -1, 1: 1})
    return PairingValue(acc * s, det)


def cyclic_reduction(V) -> LaurentPoly:
    """Express the second presentation generator through the first:
    e2 = c(t) e1, read off a relation column with a unit entry."""
    A = _presentation_matrix(V)
    for j in range(2):
        for i, other in ((1, 0), (0, 1)):
            entry = A[i][j]
            if not entry.is_zero() and entry.span() == 0:
                # A[other][j] e_other + entry * e_i = 0
                coeff = -A[other][j] * (entry ** -1)
                if i == 1:
                    return coeff  # e2 = coeff * e1
                # e1 = coeff * e2: invert only when coeff is a unit
                if not coeff.is_zero() and coeff.is_unit():
                    return coeff ** -1
    raise ModuleError("presentation is not visibly cyclic on a generator")


def _orthogonal_generator(M: CyclicAlexModule, V, gen: LaurentPoly,
                          sign: str = "1-t") -> LaurentPoly:
    """Canonical generator of <gen>^perp via the pairing on e1."""
    b11 = blanchfield_pairing(V, (LaurentPoly.one(), LaurentPoly.zero()),
                              (LaurentPoly.one(), LaurentPoly.zero()), sign)
    order = M.order
    # h in perp iff order | gen * conj(h) * num(b11) * (order/den-unit);
    # rescale the pairing to denominator = order
    q, r = (b11.num * order).divmod(b11.den)
    if not r.is_zero():
        raise ModuleError("pairing denominator does not divide the order")
    n = q  # b11 = n / order
    gbar_n = (gen * n)
    d = poly_gcd(gbar_n, order)
    perp_of_conj = order.exact_div(d)  # condition was on conj(h)
    return reciprocal_normalized(perp_of_conj)


def orthogonal_submodule(M: CyclicAlexModule, V, P: Submodule,
                         sign: str = "1-t") -> Submodule:
    return Submodule(_orthogonal_generator(M, V, P.generator, sign))


def orthogonal_submodule_shortcut(M: CyclicAlexModule, P: Submodule) -> Submodule:
    """Independent route for nondegenerate pairings on robust-type modules:
    <d>^perp = <order / conj(d)>."""
    dbar = reciprocal_normalized(P.generator)
    if not dbar.divides(M.order):
        raise ModuleError("submodule generator does not divide the order")
    return Submodule(M.order.exact_div(dbar).normalize())


def is_isotropic(M: CyclicAlexModule, V, P: Submodule, sign: str = "1-t") -> str:
    """Classify P against P^perp: isotropic (P <= P^perp), lagrangian
    (P = P^perp), or neither."""
    perp = orthogonal_submodule(M, V, P, sign)
    if P.same_as(perp):
        return LAGRANGIAN
    if P.included_in(perp):
        return ISOTROPIC
    return NEITHER


def derivative_submodule(M: CyclicAlexModule, V, cls) -> Submodule:
    """The submodule generated by the lift of a derivative class: the
    push-off V^T z in the dual basis, reduced to the cyclic generator."""
    z = (cls.x, cls.y)
    lift = (V[0, 0] * z[0] + V[1, 0] * z[1], V[0, 1] * z[0] + V[1, 1] * z[1])
    c = cyclic_reduction(V)
    element = LaurentPoly.constant(lift[0]) + LaurentPoly.constant(lift[1]) * c
    return Submodule(M.element(element), frozenset({"derivative"}))


# ----------------------------------------------------------------------
# cabling

def cable_module(M: CyclicAlexModule, p: int) -> CyclicAlexModule:
    """The module of the (p,1) cable: order delta(s^p) delta(s^-p).  When
    delta(s^p) is reducible the result is flagged not robust-type (the
    cabling theorem hypothesis fails); that is a flag, not an error."""
    if p < 1:
        raise ModuleError("cable parameter must be a positive integer")
    if p == 1:
        return M
    new_delta = M.delta_factor.substitute_power(p).normalize()
    robust = primality.is_irreducible(new_delta).is_irreducible
    return CyclicAlexModule(new_delta, f"{M.generator_name}'", robust_type=robust)


def transport_submodule(M: CyclicAlexModule, P: Submodule, p: int) -> Submodule:
    """<g(t)> goes to <g(s^p)>, keeping labels (ribbon markers ride along)."""
    cabled = cable_module(M, p)
    g = P.generator.substitute_power(p)
    return Submodule(cabled.element(g), P.labels)


# ----------------------------------------------------------------------
# presentation sanity harness

def beta_relation_check(k: int) -> bool:
    """In the k-th operator presentation the second generator is
    +-k(1-t) times the first, and the first generates (trivially, since
    gcd(1, order) = 1).  Returns True when both facts hold."""
    from .seifert import operator_matrix
    if k < 1:
        raise ModuleError("k must be >= 1")
    V = operator_matrix(k)
    c = cyclic_reduction(V)
    target = LaurentPoly({0: k, 1: -k})  # k(1-t)
    if not (c == target or c == -target):
        return False
    M = CyclicAlexModule(LaurentPoly({1: k, 0: -(k + 1)}), "alpha")
    return poly_gcd(LaurentPoly.one(), M.order) == LaurentPoly.one()
