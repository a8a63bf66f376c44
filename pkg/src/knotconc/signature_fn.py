"""The Levine-Tristram signature as exact jump data on the circle.

A profile stores, for the upper half circle, the jump locations of the
signature function (as real algebraic numbers x = 2cos(theta), with the
conjugate arc implied) together with the even jump there, plus the value
at -1.  Levels are recovered by partial sums; the integral over the whole
circle (normalized to total measure 1) is

    rho0 = sigma(-1) - sum_i J_i * theta_i / pi,

so it is a rational combination of normalized angles.  Those angles are
kept symbolically: each root remembers its angle as an affine rational
combination of "primitive" arccos atoms, which makes the integral
invariant under cable pullback *exactly*, not just numerically.

No floating point is used anywhere in this module; numeric enclosures
come from the certified interval layer in :mod:`knotconc.realalg`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import GaussianRational, LaurentPoly, circle_point
from .realalg import (
    RealAlgebraic,
    acos_over_pi_of_algebraic,
    poly_squarefree,
)
from .seifert import SeifertMatrix, alexander_polynomial, signature_at


class ProfileError(ValueError):
    pass


# ----------------------------------------------------------------------
# symbolic reals: q0 + sum q_i * (arccos(a_i / 2) / pi)

class SymbolicReal:
    """A rational linear combination of normalized-angle atoms.

    The atom attached to a real algebraic number a in (-2, 2) has value
    arccos(a/2)/pi, i.e. the normalized angle of the unit-circle point
    with 2cos(theta) = a.  Canonical form: atoms sorted by their (exact)
    real value with equal atoms merged, zero coefficients dropped.
    """

    __slots__ = ("const", "atoms")

    def __init__(self, const: Fraction | int = 0,
                 atoms: list[tuple[RealAlgebraic, Fraction]] | None = None):
        merged: list[tuple[RealAlgebraic, Fraction]] = []
        for alg, coeff in sorted(atoms or [], key=lambda ac: ac[0]):
            coeff = Fraction(coeff)
            if merged and merged[-1][0] == alg:
                merged[-1] = (merged[-1][0], merged[-1][1] + coeff)
            else:
                merged.append((alg, coeff))
        object.__setattr__(self, "const", Fraction(const))
        object.__setattr__(self, "atoms", tuple((a, c) for a, c in merged if c != 0))

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicReal is immutable")

    @classmethod
    def atom(cls, alg: RealAlgebraic, coeff: Fraction | int = 1) -> "SymbolicReal":
        return cls(0, [(alg, Fraction(coeff))])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymbolicReal(other)
        return SymbolicReal(self.const + other.const,
                            list(self.atoms) + list(other.atoms))

    __radd__ = __add__

    def __neg__(self):
        return SymbolicReal(-self.const, [(a, -c) for a, c in self.atoms])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymbolicReal(other)
        return self + (-other)

    def scale(self, q: Fraction | int) -> "SymbolicReal":
        q = Fraction(q)
        return SymbolicReal(self.const * q, [(a, c * q) for a, c in self.atoms])

    def is_zero(self) -> bool:
        return self.const == 0 and not self.atoms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymbolicReal(other)
        if not isinstance(other, SymbolicReal):
            return NotImplemented
        if self.const != other.const or len(self.atoms) != len(other.atoms):
            return False
        return all(a1 == a2 and c1 == c2
                   for (a1, c1), (a2, c2) in zip(self.atoms, other.atoms))

    def __hash__(self):
        return hash((self.const, tuple(c for _, c in self.atoms)))

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        """Certified interval containing the value."""
        budget = bits + 4
        weight = sum(abs(c) for _, c in self.atoms)
        if weight:
            budget += max(0, (weight.numerator // weight.denominator).bit_length())
        lo = hi = self.const
        for alg, coeff in self.atoms:
            alo, ahi = acos_over_pi_of_algebraic(alg, budget)
            if coeff >= 0:
                lo, hi = lo + coeff * alo, hi + coeff * ahi
            else:
                lo, hi = lo + coeff * ahi, hi + coeff * alo
        return lo, hi

    def __float__(self):
        lo, hi = self.enclosure(60)
        return float((lo + hi) / 2)

    def __repr__(self):
        parts = [str(self.const)] if self.const or not self.atoms else []
        for alg, c in self.atoms:
            parts.append(f"{'+' if c >= 0 else '-'} {abs(c)}*acos({list(alg.poly)};~{float(alg):.4f})/pi")
        return "SymbolicReal(" + " ".join(parts) + ")"


# ----------------------------------------------------------------------
# circle roots and profiles

@dataclass(frozen=True, eq=False)
class CircleRoot:
    """A jump position on the open upper half circle.

    ``alg`` is 2cos(theta) as a real algebraic number (used for exact
    ordering and merging); ``angle`` is theta/pi as a symbolic real (used
    for the exact integral).  The two describe the same point.
    """
    alg: RealAlgebraic
    angle: SymbolicReal

    @classmethod
    def from_algebraic(cls, alg: RealAlgebraic) -> "CircleRoot":
        return cls(alg, SymbolicReal.atom(alg))

    def __eq__(self, other):
        return isinstance(other, CircleRoot) and self.alg == other.alg

    def __hash__(self):
        return hash(self.alg)


@dataclass(frozen=True)
class SignatureProfile:
    """Piecewise-constant signature data: jumps on the upper half circle
    ordered by increasing angle, and the value at -1.  The sum of jumps
    always equals the value at -1 (checked on construction)."""
    jumps: tuple[tuple[CircleRoot, int], ...]
    at_minus_one: int

    def __post_init__(self):
        if sum(j for _, j in self.jumps) != self.at_minus_one:
            raise ProfileError("jump sum does not match the value at -1")

    @property
    def is_trivial(self) -> bool:
        return not self.jumps and self.at_minus_one == 0

    def levels(self) -> list[int]:
        """Arc levels from angle 0+ to pi, one more entry than jumps."""
        out = [0]
        for _, j in self.jumps:
            out.append(out[-1] + j)
        return out

    def level_at(self, s: Fraction) -> int:
        """sigma at the exact rational circle point with parameter s > 0
        (an error if the point is a jump location)."""
        x = 2 * (1 - s * s) / (1 + s * s)
        level = 0
        for root, j in self.jumps:
            if root.alg == x:
                raise ProfileError("signature undefined at a jump location")
            if root.alg > x:  # root angle below the sample angle
                level += j
        return level


ZERO_PROFILE = SignatureProfile((), 0)


def _compact_form(delta: LaurentPoly) -> list[int]:
    """For palindromic delta of even span 2h, the integer polynomial G with
    delta(t) * t^-h = G(t + 1/t), via t^k + t^-k = C_k(t + 1/t)."""
    coeffs = delta.int_coeffs()
    n = len(coeffs) - 1
    if n % 2 != 0:
        raise ProfileError("Alexander polynomial must have even span")
    h = n // 2
    if coeffs != coeffs[::-1]:
        raise ProfileError("Alexander polynomial must be palindromic")
    # C_0 = 2, C_1 = x, C_{k+1} = x C_k - C_{k-1}
    C = [[2], [0, 1]]
    for _ in range(2, h + 1):
        nxt = [0] + C[-1]
        for i, c in enumerate(C[-2]):
            nxt[i] -= c
        C.append(nxt)
    G = [0] * (h + 1)
    G[0] += coeffs[h]
    for k in range(1, h + 1):
        for i, c in enumerate(C[k]):
            G[i] += coeffs[h + k] * c
    while len(G) > 1 and G[-1] == 0:
        G.pop()
    return G


def _rational_sample_between(upper, lower) -> Fraction:
    """A rational circle parameter s > 0 whose point has 2cos(theta)
    strictly inside the x-arc (lower, upper), where each bound is a
    RealAlgebraic or None for the ends 2 / -2.  Exact comparisons only."""
    def above(xval: Fraction) -> bool:   # xval >= upper bound?
        return upper is not None and not (upper > xval)

    def below(xval: Fraction) -> bool:
        return lower is not None and not (lower < xval)

    slo, shi = Fraction(0), Fraction(10 ** 6)
    for _ in range(4096):
        mid = (slo + shi) / 2
        x = 2 * (1 - mid * mid) / (1 + mid * mid)
        if above(x):
            slo = mid
        elif below(x):
            shi = mid
        else:
            return mid
    raise ProfileError("failed to find a rational sample point in an arc")


def levine_tristram_profile(V: SeifertMatrix) -> SignatureProfile:
    """Locate the unit-circle Alexander roots exactly (Sturm isolation of
    the compact form), evaluate the signature once per arc at an exact
    rational circle point, and emit the jump list."""
    minus_one = signature_at(V, GaussianRational(-1, 0)) if V.dim else 0
    delta = alexander_polynomial(V)
    if delta.span() == 0:
        return SignatureProfile((), minus_one)
    G = poly_squarefree(_compact_form(delta))
    roots = RealAlgebraic.roots_of(G, Fraction(-2), Fraction(2))
    # sort by angle: descending in x = 2cos(theta)
    roots.sort(reverse=True)
    if not roots:
        if minus_one != 0:
            raise ProfileError("no circle roots but nonzero value at -1")
        return SignatureProfile((), 0)
    levels = []
    for i in range(len(roots) + 1):
        upper = roots[i - 1] if i > 0 else None
        lower = roots[i] if i < len(roots) else None
        s = _rational_sample_between(upper, lower)
        levels.append(signature_at(V, circle_point(s)))
    if levels[0] != 0:
        raise ProfileError("signature must vanish near 1")
    if levels[-1] != minus_one:
        raise ProfileError("arc level at pi disagrees with the value at -1")
    jumps = []
    for i, root in enumerate(roots):
        j = levels[i + 1] - levels[i]
        if j != 0:
            jumps.append((CircleRoot.from_algebraic(root), j))
    return SignatureProfile(tuple(jumps), minus_one)


# ----------------------------------------------------------------------
# the integral

def rho0(profile: SignatureProfile) -> SymbolicReal:
    """Integral of the signature over the circle with total measure 1:
    sigma(-1) minus the jump-weighted normalized angles."""
    out = SymbolicReal(profile.at_minus_one)
    for root, j in profile.jumps:
        out = out + root.angle.scale(-j)
    return out


# ----------------------------------------------------------------------
# transforms

def negate(profile: SignatureProfile) -> SignatureProfile:
    return SignatureProfile(tuple((r, -j) for r, j in profile.jumps),
                            -profile.at_minus_one)


def add(f: SignatureProfile, g: SignatureProfile) -> SignatureProfile:
    """Merge jump lists with exact root-coincidence detection."""
    merged: list[tuple[CircleRoot, int]] = []
    i = j = 0
    fj, gj = list(f.jumps), list(g.jumps)
    while i < len(fj) and j < len(gj):
        rf, jf = fj[i]
        rg, jg = gj[j]
        if rf.alg == rg.alg:
            if jf + jg != 0:
                merged.append((rf, jf + jg))
            i += 1
            j += 1
        elif rf.alg > rg.alg:  # smaller angle first
            merged.append((rf, jf))
            i += 1
        else:
            merged.append((rg, jg))
            j += 1
    merged.extend(fj[i:])
    merged.extend(gj[j:])
    return SignatureProfile(tuple(merged), f.at_minus_one + g.at_minus_one)


def _compose_with_cosine_multiple(poly: tuple[int, ...], p: int) -> list[int]:
    """P(C_p(y)) where C_p(2cos t) = 2cos(pt): the defining polynomial of
    pullback positions."""
    C = [[2], [0, 1]]
    for _ in range(2, p + 1):
        nxt = [0] + C[-1]
        for i, c in enumerate(C[-2]):
            nxt[i] -= c
        C.append(nxt)
    cp = C[p]

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for k, cb in enumerate(b):
                out[i + k] += ca * cb
        return out

    result = [0]
    power = [1]
    for coeff in poly:
        if coeff:
            term = [coeff * c for c in power]
            if len(term) > len(result):
                result, term = term, result
            for i, c in enumerate(term):
                result[i] += c
        power = mul(power, cp)
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result


def _locate_pullback_root(qpoly: list[int], angle: SymbolicReal) -> RealAlgebraic:
    """The root of qpoly at position x = 2cos(pi * angle), isolated by
    refining a certified enclosure of the angle until unique."""
    from .realalg import cos_pi_times_bounds
    sf = poly_squarefree(qpoly)
    bits = 32
    while bits <= 4096:
        tlo, thi = angle.enclosure(bits)
        tlo, thi = max(tlo, Fraction(0)), min(thi, Fraction(1))
        clo1, chi1 = cos_pi_times_bounds(tlo, bits + 4)
        clo2, chi2 = cos_pi_times_bounds(thi, bits + 4)
        xlo, xhi = 2 * min(clo1, clo2), 2 * max(chi1, chi2)
        cands = RealAlgebraic.roots_of(sf, xlo, xhi)
        if len(cands) == 1:
            return cands[0]
        bits *= 2
    raise ProfileError("could not isolate a pullback root")


def cable_pullback(profile: SignatureProfile, p: int) -> SignatureProfile:
    """The profile of omega -> sigma(omega^p).

    Each jump at angle t (in units of pi) pulls back to jumps +J at
    (t + 2m)/p and -J at (2m - t)/p for the m keeping the angle in (0, 1);
    the counts depend only on the parity of p.  Positions are algebraic
    roots of P(C_p(y)); angles stay symbolic, so the integral is exactly
    preserved.
    """
    if p < 1:
        raise ProfileError("cable parameter must be a positive integer")
    if p == 1 or not profile.jumps:
        # with no jumps the value at -1 is 0 by the profile invariant
        return profile
    new_jumps: list[tuple[CircleRoot, int]] = []
    for root, j in profile.jumps:
        qpoly = _compose_with_cosine_multiple(root.alg.poly, p)
        ups = (p + 1) // 2 if p % 2 else p // 2
        downs = (p - 1) // 2 if p % 2 else p // 2
        for m in range(ups):
            angle = (root.angle + 2 * m).scale(Fraction(1, p))
            alg = _locate_pullback_root(qpoly, angle)
            new_jumps.append((CircleRoot(alg, angle), j))
        for m in range(1, downs + 1):
            angle = ((-root.angle) + 2 * m).scale(Fraction(1, p))
            alg = _locate_pullback_root(qpoly, angle)
            new_jumps.append((CircleRoot(alg, angle), -j))
    new_jumps.sort(key=lambda rj: rj[0].alg, reverse=True)
    value = profile.at_minus_one if p % 2 else 0
    return SignatureProfile(tuple(new_jumps), value)


# ----------------------------------------------------------------------
# bounded integer relation search

def small_relation_search(values: list[SymbolicReal], coeff_bound: int,
                          precision: Fraction) -> list[int] | None:
    """Exhaustively search nontrivial integer relations sum c_i v_i = 0
    with |c_i| <= coeff_bound, certified by interval arithmetic to
    |sum| < precision, then re-certified at 4x tighter precision.  Returns
    None when no combination certifies -- supporting evidence against a
    rational relation, never a proof of independence.
    """
    n = len(values)
    if n == 0 or n > 6:
        raise ProfileError("use smaller family: exhaustive mode handles 1..6 values")
    precision = Fraction(precision)
    if precision <= 0:
        raise ProfileError("precision must be positive")

    def certify(coeffs: list[int], eps: Fraction, bits: int) -> bool:
        lo = hi = Fraction(0)
        for c, v in zip(coeffs, values):
            vlo, vhi = v.enclosure(bits)
            if c >= 0:
                lo, hi = lo + c * vlo, hi + c * vhi
            else:
                lo, hi = lo + c * vhi, hi + c * vlo
        return -eps < lo and hi < eps

    # integer-scaled enclosures tight enough for the first pass
    bits = max(8, (coeff_bound * n * 4 * precision.denominator
                   // max(1, precision.numerator)).bit_length() + 8)
    scale = 1 << bits
    enc = []
    for v in values:
        lo, hi = v.enclosure(bits + 8)
        enc.append(((lo * scale).__floor__(), -((-hi * scale).__floor__())))
    eps_int = (precision * scale).__ceil__()

    last_lo, last_hi = enc[-1]
    # precompute c * [vlo, vhi] for the last coordinate
    last_products = {}
    for c in range(-coeff_bound, coeff_bound + 1):
        a, b = c * last_lo, c * last_hi
        last_products[c] = (min(a, b), max(a, b))

    found: list[int] | None = None

    def rec(idx: int, coeffs: list[int], slo: int, shi: int) -> list[int] | None:
        if idx == n - 1:
            for c, (plo, phi) in last_products.items():
                if c == 0 and all(x == 0 for x in coeffs):
                    continue
                lo, hi = slo + plo, shi + phi
                if -eps_int < lo and hi < eps_int:
                    cand = coeffs + [c]
                    # canonical sign: first nonzero coefficient positive
                    nz = next((x for x in cand if x), 0)
                    if nz < 0:
                        continue
                    if certify(cand, precision / 4, 2 * bits + 16):
                        return cand
            return None
        vlo, vhi = enc[idx]
        for c in range(-coeff_bound, coeff_bound + 1):
            a, b = c * vlo, c * vhi
            got = rec(idx + 1, coeffs + [c], slo + min(a, b), shi + max(a, b))
            if got:
                return got
        return None

    if n == 1:
        for c in range(1, coeff_bound + 1):
            if certify([c], precision, bits) and certify([c], precision / 4, 2 * bits + 16):
                return [c]
        return None
    return rec(0, [], 0, 0)


# ----------------------------------------------------------------------
# report helpers

def profile_table(profile: SignatureProfile, bits: int = 40) -> list[tuple[str, str, int]]:
    """Arc table (start theta/pi, end theta/pi, level) with certified
    interval strings for the endpoints."""
    def fmt(lo: Fraction, hi: Fraction) -> str:
        return f"[{float(lo):.12f},{float(hi):.12f}]"

    rows = []
    levels = profile.levels()
    bounds = [(Fraction(0), Fraction(0))]
    for root, _ in profile.jumps:
        bounds.append(root.angle.enclosure(bits))
    bounds.append((Fraction(1), Fraction(1)))
    for i, level in enumerate(levels):
        rows.append((fmt(*bounds[i]), fmt(*bounds[i + 1]), level))
    return rows
