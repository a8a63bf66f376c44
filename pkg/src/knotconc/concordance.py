"""The knot-expression calculus and the symbolic certificate engine.

Knots are expression trees over a few constructors (twist knots, named
base knots with injected facts, connected sum, mirror-reverse, (p,1)
cables, and infection by doubling operators).  Invariants are evaluated
recursively with the composition rules for winding-zero satellites and
cables; metabelian signature data is never invented -- it is tracked as
formal atoms in per-operator ledgers, and every certificate splits its
content into machine-verified conditions, assumed (cited) hypotheses,
and failures.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .laurent import LaurentPoly, resultant
from . import alexmodule, legendrian, primality, seifert, signature_fn
from .alexmodule import CyclicAlexModule, Submodule
from .legendrian import LegInvariants
from .seifert import SeifertMatrix
from .signature_fn import SignatureProfile, SymbolicReal, ZERO_PROFILE


class ExprError(ValueError):
    pass


INF = float("inf")  # filtration level of slice knots


# ----------------------------------------------------------------------
# formal metabelian signature expressions

@dataclass(frozen=True)
class RhoExpr:
    """Rational combination of formal atoms: first-order signatures
    ("fos", operator, submodule) and abelian integrals ("rho0", knot)."""
    terms: tuple[tuple[tuple[str, str, str], Fraction], ...] = ()
    const: Fraction = Fraction(0)

    @classmethod
    def fos_atom(cls, op_name: str, submodule_key: str) -> "RhoExpr":
        return cls(((("fos", op_name, submodule_key), Fraction(1)),))

    @classmethod
    def rho0_atom(cls, knot_name: str) -> "RhoExpr":
        return cls(((("rho0", knot_name, ""), Fraction(1)),))

    def __add__(self, other: "RhoExpr") -> "RhoExpr":
        acc: dict = {}
        for k, c in self.terms + other.terms:
            acc[k] = acc.get(k, Fraction(0)) + c
        terms = tuple(sorted((k, c) for k, c in acc.items() if c != 0))
        return RhoExpr(terms, self.const + other.const)

    def is_zero(self) -> bool:
        return not self.terms and self.const == 0

    def atoms(self) -> list[tuple[str, str, str]]:
        return [k for k, _ in self.terms]

    def render(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for (kind, a, b), c in self.terms:
            body = f"rho(M({a}), phi_{b})" if kind == "fos" else f"rho0({a})"
            parts.append(body if c == 1 else f"{c}*{body}")
        if self.const:
            parts.append(str(self.const))
        return " + ".join(parts)


KNOWN_ZERO = "known-zero"
FORMAL = "formal"


@dataclass(frozen=True)
class FOSStatus:
    kind: str                    # KNOWN_ZERO or FORMAL
    reason: str = ""             # ribbon-disk provenance for KNOWN_ZERO
    expr: RhoExpr | None = None  # for FORMAL entries


def submodule_key(M: CyclicAlexModule, P: Submodule) -> str:
    return "<0>" if P.is_zero_submodule(M) else f"<{P.generator}>"


# ----------------------------------------------------------------------
# facts

@dataclass(frozen=True)
class Fact:
    statement: str
    citation: str = ""


class FactSet:
    def __init__(self, facts=()):
        self._by_statement = {}
        for f in facts:
            self._by_statement[f.statement] = f

    def __contains__(self, statement: str) -> bool:
        return statement in self._by_statement

    def get(self, statement: str) -> Fact | None:
        return self._by_statement.get(statement)

    def __iter__(self):
        return iter(self._by_statement.values())

    def __len__(self):
        return len(self._by_statement)


def fact_q_operator_nonzero(k: int) -> Fact:
    return Fact(f"rho(M(Q^{k}), phi_<0>) != 0",
                "signature estimate for the zero-submodule representation")


def fact_r_operator_avoidance(k: int, companion_name: str) -> Fact:
    return Fact(f"-rho0({companion_name}) notin FOS(R^{k},U)",
                "companion chosen with integral avoiding the finite base set")


def fact_rho0_independence(companion_names, base_op_name: str) -> Fact:
    names = ", ".join(companion_names)
    return Fact(f"no nontrivial rational combination of rho0({names}) "
                f"lies in span FOS({base_op_name})",
                "twist-knot integrals are linearly independent over Q")


# ----------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class Certificate:
    statement: str
    verified: tuple[str, ...] = ()
    assumed: tuple[Fact, ...] = ()
    failed: tuple[str, ...] = ()
    conclusion: str | None = None

    def __post_init__(self):
        if self.failed and self.conclusion is not None:
            raise ExprError("a certificate with failures cannot assert a conclusion")

    @property
    def asserted(self) -> bool:
        return self.conclusion is not None and not self.failed

    def render(self) -> str:
        lines = [f"CERTIFICATE: {self.statement}"]
        lines.append(f"  verified ({len(self.verified)}):")
        for v in self.verified:
            lines.append(f"    [ok] {v}")
        lines.append(f"  assumed ({len(self.assumed)}):")
        for a in self.assumed:
            lines.append(f"    [hyp] {a.statement}" + (f"  -- {a.citation}" if a.citation else ""))
        if self.failed:
            lines.append(f"  failed ({len(self.failed)}):")
            for f in self.failed:
                lines.append(f"    [!!] {f}")
        lines.append(f"  conclusion: {self.conclusion if self.asserted else 'withheld'}")
        return "\n".join(lines)


# ----------------------------------------------------------------------
# tau information

@dataclass(frozen=True)
class TauInfo:
    lower: int | None = None
    upper: int | None = None

    @property
    def exact(self) -> int | None:
        if self.lower is not None and self.lower == self.upper:
            return self.lower
        return None

    def negate(self) -> "TauInfo":
        lo = -self.upper if self.upper is not None else None
        hi = -self.lower if self.lower is not None else None
        return TauInfo(lo, hi)

    def __add__(self, other: "TauInfo") -> "TauInfo":
        lo = self.lower + other.lower if None not in (self.lower, other.lower) else None
        hi = self.upper + other.upper if None not in (self.upper, other.upper) else None
        return TauInfo(lo, hi)


# ----------------------------------------------------------------------
# expression nodes

class KnotExpr:
    """Marker base class; nodes are frozen dataclasses below."""

    def name(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Unknot(KnotExpr):
    def name(self):
        return "unknot"


@dataclass(frozen=True)
class Twist(KnotExpr):
    """The twist knot with positive clasp and j full twists (j >= 1);
    it unknots by undoing one positive crossing at the clasp."""
    j: int

    def __post_init__(self):
        if self.j < 1:
            raise ExprError("twist parameter must be >= 1")

    def name(self):
        return f"T_{self.j}"


@dataclass(frozen=True)
class BaseFacts:
    alexander: LaurentPoly = field(default_factory=LaurentPoly.one)
    arf: int = 0
    profile: SignatureProfile = ZERO_PROFILE
    genus_upper: int = 0
    tau_exact: int | None = None
    tau_cables: tuple[tuple[int, int], ...] = ()   # (p, tau of the (p,1) cable)
    positive_unknotting: bool = False
    negative_unknotting: bool = False
    slice_flag: bool = False
    leg: LegInvariants | None = None
    citations: tuple[str, ...] = ()

    def tau_cable(self, p: int) -> int | None:
        for q, v in self.tau_cables:
            if q == p:
                return v
        return None


@dataclass(frozen=True)
class Base(KnotExpr):
    label: str
    matrix: SeifertMatrix | None = None
    facts: BaseFacts = field(default_factory=BaseFacts)

    def name(self):
        return self.label


@dataclass(frozen=True)
class Sum(KnotExpr):
    parts: tuple[KnotExpr, ...]

    def __post_init__(self):
        if len(self.parts) < 1:
            raise ExprError("sum needs at least one part")

    def name(self):
        return " # ".join(p.name() for p in self.parts)


@dataclass(frozen=True)
class MirrorReverse(KnotExpr):
    inner: KnotExpr

    def name(self):
        return f"-({self.inner.name()})"


@dataclass(frozen=True)
class Cable(KnotExpr):
    inner: KnotExpr
    p: int
    q: int = 1

    def __post_init__(self):
        if self.q != 1:
            raise ExprError("only (p,1) cables are supported")
        if self.p < 1:
            raise ExprError("cable parameter must be a positive integer")

    def name(self):
        return f"({self.inner.name()})_({self.p},1)"


@dataclass(frozen=True)
class CrossingRoute:
    """Injected diagrammatic fact: changing ``count`` crossings of the
    given sign in Infect(op, K) yields the ``target`` knot."""
    sign: str           # "positive" or "negative"
    count: int
    target: "KnotExpr"
    citation: str = ""


@dataclass(frozen=True)
class OperatorSpec:
    """A doubling operator: ribbon pattern, infection axis with winding
    number zero, module data, and the formal first-order-signature ledger."""
    op_name: str
    base_name: str                      # ledger atoms reference this
    pattern_matrix: SeifertMatrix | None
    module: CyclicAlexModule | None
    axis_element: LaurentPoly           # class of the axis in the module
    fos: tuple[tuple[str, FOSStatus], ...]   # keyed by submodule_key
    cable_level: int = 1
    base_pattern_matrix: SeifertMatrix | None = None  # survives cabling
    robust_flag: bool = True            # delta(t^p) primality at this level
    leg: LegInvariants | None = None    # operator front invariants
    crossing_route: CrossingRoute | None = None
    companion_name: str | None = None

    def name(self):
        return self.op_name

    def fos_status(self, key: str) -> FOSStatus:
        for k, st in self.fos:
            if k == key:
                return st
        raise ExprError(f"no ledger entry for submodule {key} of {self.op_name}")


@dataclass(frozen=True)
class Infect(KnotExpr):
    op: OperatorSpec
    inner: KnotExpr

    def name(self):
        return f"{self.op.op_name}({self.inner.name()})"


# ----------------------------------------------------------------------
# built-in operators and knots

@functools.cache
def _twist_leg(j: int) -> LegInvariants:
    return legendrian.classical_invariants(legendrian.twist_front(j))


@functools.cache
def _q_leg(k: int) -> LegInvariants:
    return legendrian.classical_invariants(legendrian.q_operator_front(k))


def left_trefoil() -> KnotExpr:
    return MirrorReverse(Twist(1))


def neg_trefoils(m: int) -> KnotExpr:
    """Connected sum of m left-handed trefoils: lies in N_0 (each unknots
    by switching one negative crossing) with rho0 = 4m/3 > 0."""
    if m < 1:
        raise ExprError("need at least one summand")
    return Sum(tuple(left_trefoil() for _ in range(m)))


def whitehead_double() -> Base:
    """Marker leaf for the positive Whitehead double of the right-handed
    trefoil: trivial Alexander polynomial, vanishing Arf, genus one, with
    injected cited values tau = 1 and tau of the (2,1) cable = 2."""
    return Base(
        "Wh+(RH-trefoil)",
        matrix=None,
        facts=BaseFacts(
            alexander=LaurentPoly.one(),
            arf=0,
            profile=ZERO_PROFILE,
            genus_upper=1,
            tau_exact=1,
            tau_cables=((2, 2),),
            citations=("tau of the double: Livingston/Hedden",
                       "tau of its (2,1) cable: cabling formula"),
        ),
    )


def _operator_module(k: int) -> CyclicAlexModule:
    return CyclicAlexModule(LaurentPoly({1: k, 0: -(k + 1)}), f"alpha_{k}")


def operator_q(k: int) -> OperatorSpec:
    """The explicit robust doubling operator family (robust for k >= 3).

    Both nontrivial proper submodules are generated by band-dual curves
    whose bands can be cut, so they correspond to ribbon disks; only the
    zero submodule needs a nonvanishing hypothesis."""
    if k < 1:
        raise ExprError("operator parameter must be >= 1")
    M = _operator_module(k)
    name = f"Q^{k}"
    zero = Submodule(M.order)
    d1 = Submodule(M.delta_factor)
    d2 = Submodule(M.delta_reciprocal)
    fos = (
        (submodule_key(M, zero),
         FOSStatus(FORMAL, expr=RhoExpr.fos_atom(name, "<0>"))),
        (submodule_key(M, d1),
         FOSStatus(KNOWN_ZERO, reason="ribbon disk from cutting the eta+ band")),
        (submodule_key(M, d2),
         FOSStatus(KNOWN_ZERO, reason="ribbon disk from cutting the eta- band")),
    )
    V = seifert.operator_matrix(k)
    return OperatorSpec(
        op_name=name,
        base_name=name,
        pattern_matrix=V,
        module=M,
        axis_element=LaurentPoly.one(),     # [alpha] generates
        fos=fos,
        base_pattern_matrix=V,
        leg=_q_leg(k),
    )


def r_base_operator(k: int) -> OperatorSpec:
    """The untied pattern of the ambiguous family, with the infection
    axis eta sitting inside the ribbon submodule <d> = <delta(t)> (the
    unknotted derivative of the pattern)."""
    if k < 1:
        raise ExprError("operator parameter must be >= 1")
    M = _operator_module(k)
    name = f"R^{k},U"
    zero = Submodule(M.order)
    d_marker = Submodule(M.delta_factor)
    other = Submodule(M.delta_reciprocal)
    fos = (
        (submodule_key(M, zero),
         FOSStatus(FORMAL, expr=RhoExpr.fos_atom(name, "<0>"))),
        (submodule_key(M, d_marker),
         FOSStatus(KNOWN_ZERO, reason="ribbon disk from the unknotted derivative d")),
        (submodule_key(M, other),
         FOSStatus(FORMAL, expr=RhoExpr.fos_atom(name, submodule_key(M, other)))),
    )
    V = seifert.operator_matrix(k)
    return OperatorSpec(
        op_name=name,
        base_name=name,
        pattern_matrix=V,
        module=M,
        axis_element=M.delta_factor,   # [eta] generates <d>, and is nonzero
        fos=fos,
        base_pattern_matrix=V,
    )


def operator_r(k: int, companion: KnotExpr, companion_name: str | None = None) -> OperatorSpec:
    """The ambiguous robust family: the pattern is the eta-infection of
    the base pattern tied into the companion J, so its ledger is the base
    ledger pushed through the infection formula -- rho0(J) is added at
    every submodule avoiding [eta], while <d> stays a ribbon marker."""
    if k < 1:
        raise ExprError("operator parameter must be >= 1")
    jname = companion_name or companion.name()
    base = r_base_operator(k)
    M = base.module
    name = f"R^{k},{jname}"
    fos_entries = []
    for sub in alexmodule.proper_submodules(M):
        key = submodule_key(M, sub)
        expr = rho_ledger_infection(base, _named(companion, jname), sub)
        if base.fos_status(key).kind == KNOWN_ZERO and expr.is_zero():
            fos_entries.append((key, FOSStatus(
                KNOWN_ZERO,
                reason="ribbon disk from the unknotted derivative d (for any J)")))
        else:
            fos_entries.append((key, FOSStatus(FORMAL, expr=expr)))
    route = CrossingRoute(
        sign="negative", count=k + 1,
        target=Infect(unknot_operator("eta"), companion),
        citation="changing k+1 negative crossings yields the unknot-pattern infection")
    return OperatorSpec(
        op_name=name,
        base_name=base.base_name,
        pattern_matrix=base.pattern_matrix,
        module=M,
        axis_element=LaurentPoly.one(),
        fos=tuple(fos_entries),
        base_pattern_matrix=base.pattern_matrix,
        crossing_route=route,
        companion_name=jname,
    )


class _named(KnotExpr):
    """Wrapper giving a fixed display name to a companion expression."""

    def __init__(self, inner: KnotExpr, label: str):
        self.inner = inner
        self.label = label

    def name(self):
        return self.label


@functools.cache
def unknot_operator(axis_name: str = "eta") -> OperatorSpec:
    """Infection with an unknotted pattern: trivial module, no ledger."""
    return OperatorSpec(
        op_name=f"U_{axis_name}",
        base_name=f"U_{axis_name}",
        pattern_matrix=seifert.EMPTY,
        module=None,
        axis_element=LaurentPoly.one(),
        fos=(),
    )


def cable_operator(op: OperatorSpec, p: int) -> OperatorSpec:
    """The (p,1) cable of a doubling operator: module tensored up, ribbon
    markers transported, and the ledger mapped atom-for-atom (the cabled
    first-order signatures equal the base ones)."""
    if p < 1:
        raise ExprError("cable parameter must be a positive integer")
    if p == 1:
        return op
    if op.module is None:
        raise ExprError("cannot cable an operator without module data")
    M = op.module
    Mp = alexmodule.cable_module(M, p)
    new_fos = []
    for key, status in op.fos:
        if key == "<0>":
            sub = Submodule(M.order)
        else:
            sub = Submodule(LaurentPoly.parse(key[1:-1]))
        moved = alexmodule.transport_submodule(M, sub, p)
        new_fos.append((submodule_key(Mp, moved), status))
    return OperatorSpec(
        op_name=f"({op.op_name})_({p},1)",
        base_name=op.base_name,
        pattern_matrix=None,
        module=Mp,
        axis_element=op.axis_element.substitute_power(p),
        fos=tuple(new_fos),
        cable_level=op.cable_level * p,
        base_pattern_matrix=op.base_pattern_matrix,
        robust_flag=Mp.robust_type,
        companion_name=op.companion_name,
    )


# ----------------------------------------------------------------------
# invariant evaluation

@dataclass(frozen=True)
class Invariants:
    alexander: LaurentPoly
    arf: int
    profile: SignatureProfile
    genus_upper: int
    tau: TauInfo
    leg: LegInvariants | None = None

    @property
    def rho0(self) -> SymbolicReal:
        return signature_fn.rho0(self.profile)


def _pattern_invariants(op: OperatorSpec) -> Invariants:
    """Invariants of the pattern knot of an operator; cabled operators
    apply the cable composition rules to the base pattern."""
    V = op.base_pattern_matrix
    if V is None:
        raise ExprError(f"operator {op.op_name} has no pattern data")
    p = op.cable_level
    alex = seifert.alexander_polynomial(V)
    prof = signature_fn.levine_tristram_profile(V)
    if p > 1:
        alex = alex.substitute_power(p).normalize()
        prof = signature_fn.cable_pullback(prof, p)
    return Invariants(
        alexander=alex,
        arf=(p * seifert.arf(V)) % 2,
        profile=prof,
        genus_upper=p * V.genus,
        tau=TauInfo(None, p * V.genus),
    )


@functools.cache
def eval_invariants(e: KnotExpr) -> Invariants:
    """Recursive invariant evaluation.

    Sum multiplies Alexander polynomials, adds profiles, xors Arf;
    mirror-reverse reciprocates, negates, preserves Arf; the (p,1) cable
    substitutes t -> t^p, pulls the profile back, multiplies Arf by p and
    the genus bound by p; infection by a winding-zero operator keeps the
    pattern's abelian invariants.
    """
    if isinstance(e, Unknot):
        return Invariants(LaurentPoly.one(), 0, ZERO_PROFILE, 0,
                          TauInfo(0, 0), LegInvariants(-1, 0))
    if isinstance(e, Twist):
        V = seifert.twist_matrix(e.j)
        leg = _twist_leg(e.j)
        bounds = legendrian.tau_bounds(leg, V.genus)
        return Invariants(seifert.alexander_polynomial(V), seifert.arf(V),
                          signature_fn.levine_tristram_profile(V), V.genus,
                          TauInfo(bounds.lower, bounds.upper), leg)
    if isinstance(e, Base):
        f = e.facts
        if e.matrix is not None:
            V = e.matrix
            return Invariants(seifert.alexander_polynomial(V), seifert.arf(V),
                              signature_fn.levine_tristram_profile(V), f.genus_upper or V.genus,
                              TauInfo(f.tau_exact, f.tau_exact) if f.tau_exact is not None
                              else TauInfo(None, f.genus_upper or V.genus),
                              f.leg)
        tau = TauInfo(f.tau_exact, f.tau_exact) if f.tau_exact is not None \
            else TauInfo(None, f.genus_upper)
        return Invariants(f.alexander, f.arf, f.profile, f.genus_upper, tau, f.leg)
    if isinstance(e, Sum):
        parts = [eval_invariants(p) for p in e.parts]
        alex = LaurentPoly.one()
        prof = ZERO_PROFILE
        arf = 0
        genus = 0
        tau = TauInfo(0, 0)
        for iv in parts:
            alex = (alex * iv.alexander).normalize()
            prof = signature_fn.add(prof, iv.profile)
            arf ^= iv.arf
            genus += iv.genus_upper
            tau = tau + iv.tau
        return Invariants(alex, arf, prof, genus, tau)
    if isinstance(e, MirrorReverse):
        iv = eval_invariants(e.inner)
        return Invariants(iv.alexander.reciprocal().normalize(), iv.arf,
                          signature_fn.negate(iv.profile), iv.genus_upper,
                          iv.tau.negate())
    if isinstance(e, Cable):
        iv = eval_invariants(e.inner)
        tau = TauInfo(None, e.p * iv.genus_upper)
        if isinstance(e.inner, Base):
            injected = e.inner.facts.tau_cable(e.p)
            if injected is not None:
                tau = TauInfo(injected, injected)
        return Invariants(iv.alexander.substitute_power(e.p).normalize(),
                          (e.p * iv.arf) % 2,
                          signature_fn.cable_pullback(iv.profile, e.p),
                          e.p * iv.genus_upper, tau)
    if isinstance(e, Infect):
        inner = eval_invariants(e.inner)
        pat = _pattern_invariants(e.op)
        tau = TauInfo(None, pat.genus_upper)
        leg = None
        if e.op.leg is not None and inner.leg is not None and inner.leg.tb >= 0:
            # stabilize the companion representative down to tb = 0, then
            # the Legendrian satellite carries the operator's front values
            comp = inner.leg
            while comp.tb > 0:
                comp = legendrian.stabilize(comp, +1)
            leg = legendrian.legendrian_satellite(e.op.leg, comp)
            b = legendrian.tau_bounds(leg, pat.genus_upper)
            tau = TauInfo(b.lower, b.upper)
        return Invariants(pat.alexander, pat.arf, pat.profile,
                          pat.genus_upper, tau, leg)
    raise ExprError(f"unknown expression node {e!r}")


# ----------------------------------------------------------------------
# the rho ledger under infection

def rho_ledger_infection(op: OperatorSpec, companion: KnotExpr,
                         P: Submodule) -> RhoExpr:
    """The metabelian rho-invariant of Infect(op, K) at the submodule P,
    as a formal expression: the base atom plus rho0(K) exactly when the
    axis class lies outside P.  Atoms already known zero in the ledger
    (ribbon markers) are dropped."""
    if op.module is None:
        raise ExprError("operator has no module data")
    M = op.module
    key = submodule_key(M, P)
    status = op.fos_status(key)   # raises for non-submodules
    if status.kind == KNOWN_ZERO:
        base = RhoExpr()
    else:
        base = RhoExpr.fos_atom(op.base_name, key)
    if not P.contains(M, op.axis_element):
        base = base + RhoExpr.rho0_atom(companion.name())
    return base


# ----------------------------------------------------------------------
# robustness certificates

def _resolve_formal(expr: RhoExpr, facts: FactSet):
    """Try to justify expr != 0 from the supplied facts.  Returns the
    matching Fact or None."""
    atoms = expr.atoms()
    fos_atoms = [a for a in atoms if a[0] == "fos"]
    rho_atoms = [a for a in atoms if a[0] == "rho0"]
    if len(fos_atoms) == 1 and not rho_atoms:
        _, opname, key = fos_atoms[0]
        stmt = f"rho(M({opname}), phi_{key}) != 0"
        return facts.get(stmt)
    if len(fos_atoms) == 1 and len(rho_atoms) == 1:
        _, opname, _ = fos_atoms[0]
        _, jname, _ = rho_atoms[0]
        stmt = f"-rho0({jname}) notin FOS({opname})"
        return facts.get(stmt)
    if not fos_atoms and len(rho_atoms) == 1:
        _, jname, _ = rho_atoms[0]
        stmt = f"rho0({jname}) != 0"
        return facts.get(stmt)
    return None


def robustness_check(op: OperatorSpec, facts, p: int = 1) -> Certificate:
    """Certify that the (p,1) cable of the operator is robust.

    Machine-verified: the delta factor and its p-th substitution are
    irreducible (so the module is cyclic of order delta * conj(delta) with
    at most three proper submodules), the pattern Alexander polynomial
    matches the module order, and the ledger transports atom-for-atom.
    Assumed: exactly the nonvanishing hypotheses for non-ribbon
    submodules, resolved against the supplied facts.
    """
    if op.module is None:
        raise ExprError("robustness needs module data")
    facts = facts if isinstance(facts, FactSet) else FactSet(facts)
    verified: list[str] = []
    assumed: list[Fact] = []
    failed: list[str] = []

    delta = op.module.delta_factor
    v = primality.is_irreducible(delta)
    if v.is_irreducible:
        verified.append(f"delta = {delta} irreducible ({v.method})")
    else:
        failed.append(f"delta = {delta} reducible: witness {v.witness}")

    cop = cable_operator(op, p)
    if p > 1:
        vp = primality.is_irreducible(cop.module.delta_factor)
        if vp.is_irreducible:
            verified.append(
                f"delta(t^{p}) = {cop.module.delta_factor} irreducible ({vp.method})")
        else:
            failed.append(f"delta(t^{p}) reducible: witness {vp.witness}")
        verified.append("ledger transported atom-for-atom: FOS(R_(p,1)) = FOS(R)")

    if op.pattern_matrix is not None:
        pattern_delta = seifert.alexander_polynomial(op.pattern_matrix)
        if pattern_delta == op.module.order:
            verified.append(
                f"pattern Alexander polynomial equals the module order {op.module.order}")
        else:
            failed.append("pattern Alexander polynomial does not match the module order")
        # the nontrivial submodules are Lagrangian for the Blanchfield form
        try:
            for sub in alexmodule.proper_submodules(op.module)[1:]:
                verdict = alexmodule.is_isotropic(op.module, op.pattern_matrix, sub)
                if verdict == alexmodule.LAGRANGIAN:
                    verified.append(
                        f"submodule {submodule_key(op.module, sub)} is Lagrangian")
                else:
                    failed.append(
                        f"submodule {submodule_key(op.module, sub)} is not Lagrangian")
        except alexmodule.ModuleError as exc:
            failed.append(str(exc))

    if not cop.module.robust_type:
        failed.append("cabled delta factor is reducible: hypothesis fails")

    try:
        subs = alexmodule.proper_submodules(cop.module)
    except alexmodule.ModuleError as exc:
        subs = []
        failed.append(str(exc))
    for sub in subs:
        key = submodule_key(cop.module, sub)
        status = cop.fos_status(key)
        if status.kind == KNOWN_ZERO:
            verified.append(f"submodule {key}: corresponds to a ribbon disk ({status.reason})")
        else:
            fact = _resolve_formal(status.expr, facts)
            if fact is not None:
                assumed.append(fact)
            else:
                failed.append(
                    f"submodule {key}: no fact certifies {status.expr.render()} != 0")

    # deduplicate assumed facts, preserving order
    seen = set()
    assumed_unique = []
    for f in assumed:
        if f.statement not in seen:
            seen.add(f.statement)
            assumed_unique.append(f)

    name = cop.op_name
    return Certificate(
        statement=f"robustness of {name}",
        verified=tuple(verified),
        assumed=tuple(assumed_unique),
        failed=tuple(failed),
        conclusion=None if failed else f"{name} is a robust doubling operator",
    )


# ----------------------------------------------------------------------
# independence certificates

def independence_report(operator_sequences, companions, facts,
                        run_relation_search: bool = False,
                        relation_bound: int = 100,
                        relation_precision: Fraction = Fraction(1, 10 ** 30)) -> Certificate:
    """Certify linear independence of the family
    { R^(i,n) o ... o R^(i,1)(K^m) } in C / (F_{n.5} + B_{n+1}).

    Machine-verified: robustness of every operator (modulo its cited
    hypotheses, which land in assumed) and pairwise strong coprimality of
    the reversed Alexander-polynomial sequences, with resultant witnesses.
    Assumed: the rho0 linear-independence hypothesis for the companions.
    Optionally backed by the bounded integer relation search as evidence.
    """
    facts = facts if isinstance(facts, FactSet) else FactSet(facts)
    seqs = [tuple(s) for s in operator_sequences]
    if not seqs or not companions:
        raise ExprError("need at least one operator sequence and one companion")
    depth = len(seqs[0])
    if any(len(s) != depth for s in seqs):
        raise ExprError("operator sequences must have equal depth")
    verified: list[str] = []
    assumed: list[Fact] = []
    failed: list[str] = []

    for s in seqs:
        for op in s:
            cert = robustness_check(op, facts)
            verified.extend(f"[{op.op_name}] {v}" for v in cert.verified)
            assumed.extend(cert.assumed)
            failed.extend(f"[{op.op_name}] {f}" for f in cert.failed)

    # pairwise strong coprimality of the Alexander sequences, outermost first
    def q_sequence(s):
        return [op.module.order for op in reversed(s)]

    for i in range(len(seqs)):
        for j in range(i + 1, len(seqs)):
            Pv, Qv = q_sequence(seqs[i]), q_sequence(seqs[j])
            v = primality.sequences_strongly_coprime(Pv, Qv)
            tag = f"sequence {i + 1} vs sequence {j + 1}"
            if v.status == primality.STRONGLY_COPRIME:
                res = resultant(Pv[0], Qv[0])
                verified.append(
                    f"{tag}: strongly coprime ({'; '.join(v.detail)}); "
                    f"resultant witness {res} != 0")
            else:
                failed.append(f"{tag}: not strongly coprime ({v.status})")

    base_name = seqs[0][0].base_name
    names = [c.name() for c in companions]
    stmt = fact_rho0_independence(names, base_name).statement
    fact = facts.get(stmt)
    if fact is not None:
        assumed.append(fact)
    else:
        failed.append(f"missing fact: {stmt}")

    if run_relation_search:
        values = [eval_invariants(c).rho0 for c in companions]
        rel = signature_fn.small_relation_search(values, relation_bound, relation_precision)
        if rel is None:
            verified.append(
                f"bounded relation search on rho0({', '.join(names)}): no integer "
                f"relation with |c| <= {relation_bound} at precision {relation_precision}")
        else:
            failed.append(f"relation search found a certified relation {rel}")

    seen = set()
    assumed_unique = []
    for f in assumed:
        if f.statement not in seen:
            seen.add(f.statement)
            assumed_unique.append(f)

    family = f"{{ ops^({depth}) applied to {', '.join(names)} }}"
    n = depth
    concl = (f"the family {family} is linearly independent in "
             f"C/(F_{n}.5 + B_{n + 1}); corollaries: linearly independent in "
             f"F_{n}/F_{n}.5 and in B_{n - 1}/B_{n + 1}")
    return Certificate(
        statement=f"linear independence at depth {depth} "
                  f"({len(seqs)} sequences, {len(companions)} companions)",
        verified=tuple(verified),
        assumed=tuple(assumed_unique),
        failed=tuple(failed),
        conclusion=None if failed else concl,
    )


def thm_a_family(k: int, n: int, p_values, companion_twists,
                 j_name: str = "J", j_summands: int = 3):
    """Operator sequences and companions for the headline family:
    sequences (R, ..., R, R_(p,1)) over the given cable parameters, and
    twist-knot companions T_{2j}."""
    J = neg_trefoils(j_summands)
    jname = f"{j_summands}-left-trefoils"
    base = operator_r(k, J, jname)
    seqs = []
    for p in p_values:
        seqs.append(tuple([base] * (n - 1) + [cable_operator(base, p)]))
    companions = [Twist(2 * j) for j in companion_twists]
    return seqs, companions, base


# ----------------------------------------------------------------------
# filtration certificates

@dataclass(frozen=True)
class FiltrationLevels:
    """Certified maximal memberships; None = not certified, INF = slice."""
    f: object = None
    p: object = None
    n: object = None
    b: object = None

    def describe(self) -> str:
        def fmt(tag, v):
            if v is None:
                return f"{tag}:none"
            if v == INF:
                return f"{tag}:inf"
            return f"{tag}:{v}"
        return " ".join(fmt(*kv) for kv in
                        (("F", self.f), ("P", self.p), ("N", self.n), ("B", self.b)))


def _lvl_min(a, b):
    if a is None or b is None:
        return None
    return min(a, b)


def _lvl_inc(a):
    if a is None:
        return None
    return a if a == INF else a + 1


def _lvl_max(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def filtration_levels(e: KnotExpr, facts=None) -> FiltrationLevels:
    """Derive the maximal certified filtration levels of the expression."""
    facts = facts if isinstance(facts, FactSet) else FactSet(facts or ())
    return _filtration(e, facts)


def _filtration(e: KnotExpr, facts: FactSet) -> FiltrationLevels:
    if isinstance(e, Unknot):
        return FiltrationLevels(INF, INF, INF, INF)
    if isinstance(e, Twist):
        f = 0 if eval_invariants(e).arf == 0 else None
        return FiltrationLevels(f=f, p=0, n=None, b=None)
    if isinstance(e, Base):
        bf = e.facts
        if bf.slice_flag:
            return FiltrationLevels(INF, INF, INF, INF)
        f = 0 if eval_invariants(e).arf == 0 else None
        p = 0 if bf.positive_unknotting else None
        n = 0 if bf.negative_unknotting else None
        return FiltrationLevels(f, p, n, _lvl_min(p, n))
    if isinstance(e, Sum):
        parts = [_filtration(x, facts) for x in e.parts]
        f = parts[0].f
        p = parts[0].p
        n = parts[0].n
        b = parts[0].b
        for x in parts[1:]:
            f, p, n, b = _lvl_min(f, x.f), _lvl_min(p, x.p), _lvl_min(n, x.n), _lvl_min(b, x.b)
        if f is None and eval_invariants(e).arf == 0:
            f = 0
        return FiltrationLevels(f, p, n, b)
    if isinstance(e, MirrorReverse):
        lv = _filtration(e.inner, facts)
        return FiltrationLevels(lv.f, lv.n, lv.p, lv.b)
    if isinstance(e, Cable):
        return _filtration(e.inner, facts)
    if isinstance(e, Infect):
        lv = _filtration(e.inner, facts)
        f = _lvl_inc(lv.f)
        p = _lvl_inc(lv.p)
        n = _lvl_inc(lv.n)
        b = _lvl_inc(lv.b)
        # the pattern is ribbon: Arf vanishes, and the Seifert form is
        # metabolic, so membership at the bottom levels is automatic
        f = _lvl_max(f, Fraction(1, 2))
        if e.op.crossing_route is not None:
            route = e.op.crossing_route
            target = _filtration(route.target, facts)
            if route.sign == "negative" and target.n is not None:
                n = _lvl_max(n, 0)
            if route.sign == "positive" and target.p is not None:
                p = _lvl_max(p, 0)
        b = _lvl_max(b, _lvl_min(p, n))
        p = _lvl_max(p, b)
        n = _lvl_max(n, b)
        return FiltrationLevels(f, p, n, b)
    raise ExprError(f"unknown expression node {e!r}")


def filtration_certify(e: KnotExpr, facts=None) -> Certificate:
    facts = facts if isinstance(facts, FactSet) else FactSet(facts or ())
    lv = filtration_levels(e, facts)
    verified = [f"derived levels: {lv.describe()}"]
    assumed = []
    for leaf_fact in _collect_crossing_facts(e):
        assumed.append(leaf_fact)
    concl = f"{e.name()} certified at {lv.describe()}"
    return Certificate(
        statement=f"filtration membership of {e.name()}",
        verified=tuple(verified),
        assumed=tuple(assumed),
        failed=(),
        conclusion=concl,
    )


def _collect_crossing_facts(e: KnotExpr) -> list[Fact]:
    out = []
    if isinstance(e, Twist):
        out.append(Fact(f"{e.name()} unknots by undoing one positive crossing",
                        "clasp crossing change"))
    if isinstance(e, MirrorReverse) and isinstance(e.inner, Twist):
        out.append(Fact(f"{e.name()} unknots by undoing one negative crossing",
                        "mirror of the clasp crossing change"))
        return out
    if isinstance(e, (MirrorReverse, Cable)):
        out.extend(_collect_crossing_facts(e.inner))
    if isinstance(e, Sum):
        for x in e.parts:
            out.extend(_collect_crossing_facts(x))
    if isinstance(e, Infect):
        if e.op.crossing_route is not None:
            out.append(Fact(
                f"changing {e.op.crossing_route.count} {e.op.crossing_route.sign} "
                f"crossings of {e.name()} yields {e.op.crossing_route.target.name()}",
                e.op.crossing_route.citation))
        out.extend(_collect_crossing_facts(e.inner))
    seen = set()
    unique = []
    for f in out:
        if f.statement not in seen:
            seen.add(f.statement)
            unique.append(f)
    return unique


# ----------------------------------------------------------------------
# derived slice-knot examples (genus-one derivative pairs)

def derivative_pair_report(L: KnotExpr, facts=None, depth: int = 1) -> dict:
    """For the slice knot with genus-one surface whose derivatives are
    d = L # -(L_(2,1)) and a companion curve d', report the certified
    invariants: Arf(d') = 1 always (satellite additivity kills the L
    contributions), and the d-side data from the expression engine."""
    facts = facts if isinstance(facts, FactSet) else FactSet(facts or ())
    ivL = eval_invariants(L)
    d = Sum((L, MirrorReverse(Cable(L, 2, 1))))
    ivd = eval_invariants(d)
    arf_dprime = (1 + ivL.arf + ivL.arf) % 2
    report = {
        "L": L.name(),
        "arf_dprime": arf_dprime,
        "d": d.name(),
        "alexander_d": ivd.alexander,
        "arf_d": ivd.arf,
        "tau_d": ivd.tau.exact,
        "topologically_slice_d": ivd.alexander == LaurentPoly.one(),
        "d_expr": d,
    }
    return report


def kauffman_suite(facts=None) -> dict:
    """The derivative-curve example suite: the Whitehead-double companion
    gives a topologically slice but not smoothly slice d (tau = -1); a
    deep-filtration companion delegates nontriviality to the independence
    engine; Arf(d') = 1 in every case."""
    facts = facts if isinstance(facts, FactSet) else FactSet(facts or ())
    out: dict = {"entries": []}

    # 1. generic low-complexity companion
    out["entries"].append(derivative_pair_report(Twist(2), facts))

    # 2. the Whitehead-double marker: trivial Alexander polynomial and
    # injected tau facts force tau(d) = 1 - 2 = -1
    wh = derivative_pair_report(whitehead_double(), facts)
    out["entries"].append(wh)

    # 3. a deep-filtration companion: d nontrivial via the independence
    # certificate for its cables
    seqs, companions, base = thm_a_family(1, 2, (1, 2), (1,))
    cert = independence_report(seqs, companions, facts)
    member = Infect(seqs[0][0], Infect(seqs[0][0], companions[0]))
    rep = derivative_pair_report(member, facts)
    rep["independence_certificate"] = cert
    rep["nontrivial_d"] = cert.asserted
    out["entries"].append(rep)
    return out
