"""Real algebraic numbers and certified rational interval arithmetic.

Two independent facilities live here:

1. :class:`RealAlgebraic` -- a real number given by a square-free integer
   polynomial plus an isolating rational interval, with exact comparison
   and equality (Sturm counts on polynomial gcds, never floating point).

2. Certified enclosures of pi, cos, and arccos as pairs of Fractions with
   directed rounding, built from alternating series with explicit
   remainder bounds.  No float ever crosses a decision boundary.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _intgcd
from typing import Sequence

# ----------------------------------------------------------------------
# dense integer/rational polynomial helpers (low-to-high coefficient lists)


def poly_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_eval(a: Sequence, x: Fraction) -> Fraction:
    r = Fraction(0)
    for c in reversed(a):
        r = r * x + c
    return r


def poly_derivative(a: Sequence) -> list:
    return [i * c for i, c in enumerate(a)][1:]


def poly_content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = _intgcd(g, c)
    return g or 1


def poly_primitive(a: Sequence[int]) -> list[int]:
    g = poly_content(a)
    if a and a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _poly_pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while f and len(f) - 1 >= dg:
        d = len(f) - 1 - dg
        lf = f[-1]
        f = [c * lg for c in f]
        for i, c in enumerate(g):
            f[i + d] -= lf * c
        poly_trim(f)
    return f


def poly_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd of integer polynomials via a primitive PRS."""
    a = poly_primitive(list(a)) if any(a) else []
    b = poly_primitive(list(b)) if any(b) else []
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _poly_pseudo_rem(a, b)
        if not r:
            return poly_primitive(b)
        a, b = b, poly_primitive(r)


def poly_squarefree(a: Sequence[int]) -> list[int]:
    """The square-free part a / gcd(a, a')."""
    a = poly_primitive(list(a))
    if len(a) <= 2:
        return a
    g = poly_gcd(a, poly_derivative(a))
    if len(g) == 1:
        return a
    # exact division a // g over the rationals, then re-normalize
    q = _poly_exact_div(a, g)
    return poly_primitive(q)


def _poly_exact_div(a: Sequence[int], b: Sequence[int]) -> list[int]:
    f = [Fraction(c) for c in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    db, lb = len(b) - 1, Fraction(b[-1])
    while poly_trim(f) and len(f) - 1 >= db:
        d = len(f) - 1 - db
        c = f[-1] / lb
        q[d] = c
        for i, cb in enumerate(b):
            f[i + d] -= c * cb
    assert not poly_trim(f), "inexact polynomial division"
    den = 1
    for c in q:
        den = den * c.denominator // _intgcd(den, c.denominator)
    return [int(c * den) for c in q]


def _frac_rem(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    """True polynomial remainder over Q (dense lists, low to high)."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while poly_trim(f) and len(f) - 1 >= dg:
        d = len(f) - 1 - dg
        c = f[-1] / lg
        for i, cg in enumerate(g):
            f[i + d] -= c * cg
        f[-1] = Fraction(0)
    return poly_trim(f)


def _positive_int_rescale(f: list[Fraction]) -> list[int]:
    """Scale by a positive rational to a primitive integer list (sign kept)."""
    den = 1
    for c in f:
        den = den * c.denominator // _intgcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = poly_content(ints)
    return [c // g for c in ints]


def sturm_sequence(a: Sequence[int]) -> list[list[int]]:
    """Sturm chain of a square-free integer polynomial.  Each element is
    rescaled by a positive constant (sign variations are unaffected)."""
    p0 = poly_primitive(list(a))
    p1 = poly_derivative(p0)
    chain = [p0, poly_primitive(p1) if p1 else []]
    while chain[-1] and len(chain[-1]) > 1:
        r = _frac_rem([Fraction(c) for c in chain[-2]],
                      [Fraction(c) for c in chain[-1]])
        if not r:
            break
        chain.append(_positive_int_rescale([-c for c in r]))
    return [c for c in chain if c]


def _sign_variations(chain: list[list[int]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def count_real_roots(a: Sequence[int], lo: Fraction, hi: Fraction,
                     chain: list[list[int]] | None = None) -> int:
    """Number of distinct real roots of square-free ``a`` in the open
    interval (lo, hi).  Callers must ensure a(lo) != 0 and a(hi) != 0."""
    if chain is None:
        chain = sturm_sequence(a)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def root_bound(a: Sequence[int]) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lead = abs(a[-1])
    m = max(abs(c) for c in a[:-1]) if len(a) > 1 else 0
    return Fraction(m, lead) + 1


def isolate_real_roots(a: Sequence[int], lo: Fraction | None = None,
                       hi: Fraction | None = None) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals (one per distinct real root) for square-free
    ``a`` inside (lo, hi).  Interval endpoints are never roots."""
    a = poly_primitive(list(a))
    if len(a) <= 1:
        return []
    chain = sturm_sequence(a)
    b = root_bound(a)
    lo = -b if lo is None else lo
    hi = b if hi is None else hi
    # nudge endpoints off roots
    while poly_eval(a, lo) == 0:
        lo -= Fraction(1, 1000)
    while poly_eval(a, hi) == 0:
        hi += Fraction(1, 1000)
    out: list[tuple[Fraction, Fraction]] = []

    def recurse(x: Fraction, y: Fraction, n: int):
        if n == 0:
            return
        if n == 1:
            out.append((x, y))
            return
        mid = (x + y) / 2
        while poly_eval(a, mid) == 0:
            mid = (x + 2 * mid) / 3
        left = count_real_roots(a, x, mid, chain)
        recurse(x, mid, left)
        recurse(mid, y, n - left)

    recurse(lo, hi, count_real_roots(a, lo, hi, chain))
    return out


# ----------------------------------------------------------------------


class RealAlgebraic:
    """A real algebraic number: square-free primitive defining polynomial
    over Z plus an isolating open interval with rational endpoints.

    Equality and ordering are exact.  Refinement narrows the isolating
    interval in place (semantics never change, so hashing uses only the
    defining polynomial).
    """

    __slots__ = ("poly", "lo", "hi", "_chain")

    def __init__(self, poly: Sequence[int], lo: Fraction, hi: Fraction):
        self.poly = tuple(poly_primitive(list(poly)))
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._chain = None
        if len(self.poly) < 2:
            raise ValueError("defining polynomial must be nonconstant")
        if poly_eval(self.poly, self.lo) == 0 or poly_eval(self.poly, self.hi) == 0:
            raise ValueError("isolating interval endpoints must not be roots")

    @classmethod
    def from_rational(cls, q: Fraction | int) -> "RealAlgebraic":
        q = Fraction(q)
        return cls([-q.numerator, q.denominator], q - 1, q + 1)

    @classmethod
    def roots_of(cls, poly: Sequence[int], lo: Fraction | None = None,
                 hi: Fraction | None = None) -> list["RealAlgebraic"]:
        sf = poly_squarefree(poly)
        return [cls(sf, a, b) for a, b in isolate_real_roots(sf, lo, hi)]

    # -- queries --------------------------------------------------------

    def is_rational(self) -> bool:
        return len(self.poly) == 2

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(-self.poly[0], self.poly[1])

    def interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    def _sturm(self):
        if self._chain is None:
            self._chain = sturm_sequence(list(self.poly))
        return self._chain

    # -- refinement -----------------------------------------------------

    def refine(self) -> None:
        """Halve the isolating interval (bisection on sign changes)."""
        if self.is_rational():
            q = self.as_rational()
            w = (self.hi - self.lo) / 4
            self.lo, self.hi = q - w, q + w
            return
        mid = (self.lo + self.hi) / 2
        v = poly_eval(self.poly, mid)
        if v == 0:
            # mid is the root itself: impossible for irrational roots of a
            # square-free poly unless rational; shrink asymmetrically
            self.lo, self.hi = mid - (mid - self.lo) / 4, mid + (self.hi - mid) / 4
            return
        vlo = poly_eval(self.poly, self.lo)
        if (vlo > 0) != (v > 0):
            self.hi = mid
        else:
            self.lo = mid

    def refine_below(self, width: Fraction) -> None:
        while self.hi - self.lo >= width:
            self.refine()

    # -- exact comparison -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RealAlgebraic.from_rational(other)
        if not isinstance(other, RealAlgebraic):
            return NotImplemented
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo >= hi:
            return False
        # Equal iff the overlap contains a common root, i.e. a root of the
        # gcd.  Overlap endpoints are endpoints of an isolating interval and
        # hence never roots of either defining polynomial.
        g = poly_gcd(list(self.poly), list(other.poly))
        if len(g) < 2:
            return False
        return count_real_roots(g, lo, hi) > 0

    def __hash__(self):
        return hash(self.poly)

    def __lt__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RealAlgebraic.from_rational(other)
        if self == other:
            return False
        while not (self.hi <= other.lo or other.hi <= self.lo):
            self.refine()
            other.refine()
        return self.hi <= other.lo

    def __le__(self, other) -> bool:
        return self == other or self < other

    def __gt__(self, other) -> bool:
        return not self <= other

    def __ge__(self, other) -> bool:
        return not self < other

    def __float__(self) -> float:
        self.refine_below(Fraction(1, 10 ** 17))
        return float((self.lo + self.hi) / 2)

    def __repr__(self):
        return f"RealAlgebraic({list(self.poly)}, ({self.lo}, {self.hi}))"


# ----------------------------------------------------------------------
# certified enclosures: pi, cos, arccos


_PI_CACHE: dict[int, tuple[Fraction, Fraction]] = {}


def _atan_inv_bounds(n: int, terms: int) -> tuple[Fraction, Fraction]:
    """Alternating-series enclosure of arctan(1/n)."""
    s = Fraction(0)
    x = Fraction(1, n)
    xsq = x * x
    term = x
    k = 0
    for k in range(terms):
        contrib = term / (2 * k + 1)
        s += contrib if k % 2 == 0 else -contrib
        term *= xsq
    tail = term / (2 * terms + 1)
    # alternating with decreasing terms: truth lies within tail of s
    return s - tail, s + tail


def pi_bounds(bits: int) -> tuple[Fraction, Fraction]:
    """Machin: pi = 16 atan(1/5) - 4 atan(1/239)."""
    key = bits
    if key in _PI_CACHE:
        return _PI_CACHE[key]
    terms = max(8, bits // 4 + 4)
    a5 = _atan_inv_bounds(5, terms)
    a239 = _atan_inv_bounds(239, terms)
    lo = 16 * a5[0] - 4 * a239[1]
    hi = 16 * a5[1] - 4 * a239[0]
    _PI_CACHE[key] = (lo, hi)
    return lo, hi


def cos_bounds(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Alternating-series enclosure of cos(x) for |x| <= 4."""
    x = abs(Fraction(x))
    assert x <= 4, "cos_bounds expects an argument reduced to [0, pi]"
    target = Fraction(1, 2 ** (bits + 2))
    s = Fraction(1)
    term = Fraction(1)
    xsq = x * x
    k = 0
    while True:
        k += 1
        term = term * xsq / ((2 * k - 1) * (2 * k))
        s += term if k % 2 == 0 else -term
        # once terms decrease (true for k >= 2 when x <= 4) the remainder
        # is bounded by the next term
        nxt = term * xsq / ((2 * k + 1) * (2 * k + 2))
        if k >= 2 and nxt < target:
            return s - nxt, s + nxt


def _round_down(x: Fraction, bits: int) -> Fraction:
    return Fraction((x.numerator << bits) // x.denominator, 1 << bits)


def _round_up(x: Fraction, bits: int) -> Fraction:
    return Fraction(-((-x.numerator << bits) // x.denominator), 1 << bits)


def cos_pi_times_bounds(t: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Enclosure of cos(pi * t) for t in [0, 1].  Arguments are rounded
    outward to denominator 2^(bits+12) to cap coefficient growth in the
    Taylor series."""
    plo, phi = pi_bounds(bits + 8)
    alo = _round_down(plo * t, bits + 12)
    ahi = _round_up(phi * t, bits + 12)
    lo1, hi1 = cos_bounds(alo, bits + 4)
    lo2, hi2 = cos_bounds(ahi, bits + 4)
    return min(lo1, lo2), max(hi1, hi2)


def sin_pi_times_bounds(t: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Enclosure of sin(pi * t) for t in [0, 1], via sin(pi t) = cos(pi(1/2 - t))."""
    u = abs(Fraction(1, 2) - t)
    return cos_pi_times_bounds(u, bits)


def _acos_bracket(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Bracket [lo, hi] containing arccos(x)/pi, of width < 2^-bits.

    Interval Newton against certified cos(pi t): from a bracket B and its
    midpoint m, the root lies in m - (cos(pi m) - x) / (pi sin(pi xi)) for
    some xi in B, so intersecting that interval with B shrinks it
    quadratically.  No sign decision on an enclosure is ever needed, so
    the iteration cannot stall when x is hit exactly.  A float seed is
    used only as a guess; the bracket is certified before use.
    """
    import math as _math

    if x >= 1:
        return Fraction(0), Fraction(0)
    if x <= -1:
        return Fraction(1), Fraction(1)
    target = Fraction(1, 2 ** bits)

    def certified(lo: Fraction, hi: Fraction, prec: int) -> bool:
        if not (0 <= lo < hi <= 1):
            return False
        return (cos_pi_times_bounds(lo, prec)[0] >= x
                and cos_pi_times_bounds(hi, prec)[1] <= x)

    seed = _math.acos(max(-1.0, min(1.0, float(x)))) / _math.pi
    lo = Fraction(max(0.0, seed - 1e-5)).limit_denominator(1 << 40)
    hi = Fraction(min(1.0, seed + 1e-5)).limit_denominator(1 << 40)
    if not certified(lo, hi, 64):
        lo, hi = Fraction(0), Fraction(1)

    prec = 64
    stall = 0
    while hi - lo > target and stall < 64:
        prec = min(2 * prec, 2 * bits + 32)
        m = _round_down((lo + hi) / 2, prec + 8)
        if not (lo < m < hi):
            m = (lo + hi) / 2
        clo, chi = cos_pi_times_bounds(m, prec)
        s_bounds = [sin_pi_times_bounds(lo, prec), sin_pi_times_bounds(hi, prec)]
        # sin(pi t) is concave on [0, 1]: its minimum over the bracket is at
        # an endpoint; the maximum is 1 if the bracket contains 1/2
        smin = min(b[0] for b in s_bounds)
        if lo < Fraction(1, 2) < hi:
            smax = Fraction(1)
        else:
            smax = max(b[1] for b in s_bounds)
        plo, phi = pi_bounds(prec)
        new_lo, new_hi = lo, hi
        if smin > 0:
            # t* = m + (cos(pi m) - x) / (pi sin(pi xi)) for some xi in the
            # bracket (mean value theorem, cos decreasing)
            den_lo, den_hi = plo * smin, phi * smax
            cands = [(clo - x) / den_lo, (clo - x) / den_hi,
                     (chi - x) / den_lo, (chi - x) / den_hi]
            new_lo = max(lo, _round_down(m + min(cands), prec + 8))
            new_hi = min(hi, _round_up(m + max(cands), prec + 8))
        if new_lo > new_hi or (new_hi - new_lo) > Fraction(9, 10) * (hi - lo):
            # Newton made no progress (bracket touching the ends of [0,1],
            # or precision still too low): fall back to one bisection step
            if chi <= x:
                new_lo, new_hi = lo, m
            elif clo >= x:
                new_lo, new_hi = m, hi
            else:
                new_lo, new_hi = lo, hi
                stall += 1
        lo, hi = new_lo, new_hi
    return lo, hi


def acos_over_pi_bounds(x_lo: Fraction, x_hi: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Enclosure of arccos(x)/pi in [0, 1] given an enclosure [x_lo, x_hi]
    of x in [-1, 1].  arccos is decreasing, so the lower answer bound comes
    from the upper argument bound."""
    assert -1 <= x_lo <= x_hi <= 1
    if x_lo == x_hi:
        return _acos_bracket(x_lo, bits)
    return _acos_bracket(x_hi, bits)[0], _acos_bracket(x_lo, bits)[1]


def acos_over_pi_of_algebraic(alpha: RealAlgebraic, bits: int) -> tuple[Fraction, Fraction]:
    """Enclosure of arccos(alpha/2)/pi for an algebraic alpha in (-2, 2),
    the normalized angle of a unit-circle point with 2cos(theta) = alpha."""
    alpha.refine_below(Fraction(1, 2 ** (bits + 4)))
    lo, hi = alpha.interval()
    lo, hi = max(lo / 2, Fraction(-1)), min(hi / 2, Fraction(1))
    return acos_over_pi_bounds(lo, hi, bits)
