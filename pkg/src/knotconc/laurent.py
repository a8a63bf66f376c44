"""Exact Laurent polynomial arithmetic over the rationals.

The ring Q[t, t^-1] is the ambient ring for every Alexander-polynomial
and primality computation in this package.  A Laurent polynomial is kept
as a map from integer exponents to nonzero Fraction coefficients; the
zero polynomial is the empty map.  All values are immutable and all
operations are pure, so instances may be shared freely across threads.

Units of Q[t, t^-1] are exactly the nonzero monomials, so "equality up
to units" is decided by comparing canonical associates: shifted to
minimum exponent 0, integer coefficients with content 1, and positive
leading coefficient (see :meth:`LaurentPoly.normalize`).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as _intgcd
from typing import Iterable, Mapping, Union

Rational = Fraction  # exact rationals: always lowest terms, denominator > 0

Coeffable = Union[int, Fraction]


class LaurentError(ValueError):
    """Raised on domain errors (division by zero, degenerate substitution...)."""


def _as_fraction(c: Coeffable) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an integer or Fraction coefficient, got {c!r}")


class LaurentPoly:
    """A Laurent polynomial with exact rational coefficients.

    >>> f = LaurentPoly({1: 1, 0: -2})        # t - 2
    >>> g = LaurentPoly({1: 2, 0: -1})        # 2t - 1
    >>> print(f * g)
    2*t^2 - 5*t + 2
    >>> print(LaurentPoly({-1: 8, 0: -9}))
    8*t^-1 - 9
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Coeffable] | Iterable[tuple[int, Coeffable]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d = {}
        for e, c in items:
            c = _as_fraction(c)
            if c != 0:
                d[int(e)] = d.get(int(e), Fraction(0)) + c
        object.__setattr__(self, "terms", {e: c for e, c in d.items() if c != 0})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def t(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def monomial(cls, coeff: Coeffable, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, coeff: Coeffable) -> "LaurentPoly":
        return cls({0: coeff})

    @classmethod
    def from_int_coeffs(cls, coeffs: Iterable[int], min_exp: int = 0) -> "LaurentPoly":
        """Build from a dense low-to-high coefficient list starting at ``min_exp``."""
        return cls({min_exp + i: c for i, c in enumerate(coeffs)})

    # ------------------------------------------------------------------
    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        """Units of Q[t,t^-1] are exactly the nonzero monomials."""
        return len(self.terms) == 1

    def is_one(self) -> bool:
        return self.terms == {0: Fraction(1)}

    def min_exp(self) -> int:
        if not self.terms:
            raise LaurentError("zero polynomial has no exponents")
        return min(self.terms)

    def max_exp(self) -> int:
        if not self.terms:
            raise LaurentError("zero polynomial has no exponents")
        return max(self.terms)

    def span(self) -> int:
        """Euclidean size: difference between highest and lowest exponents."""
        return self.max_exp() - self.min_exp()

    def coeff(self, e: int) -> Fraction:
        return self.terms.get(e, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = dict(self.terms)
        for e, c in other.terms.items():
            d[e] = d.get(e, Fraction(0)) + c
        return LaurentPoly(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                d[e] = d.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_unit():
                raise LaurentError("only monomials are invertible in Q[t,t^-1]")
            e, c = next(iter(self.terms.items()))
            return LaurentPoly({-e: 1 / c}) ** (-n)
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by the unit t^k."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def divmod(self, g: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Euclidean division after unit-shifting both inputs to minimum exponent 0.

        Returns (q, r) with ``self = q*g + r`` and ``span(r) < span(g)`` or r = 0.
        """
        if g.is_zero():
            raise LaurentError("zero divisor")
        if self.is_zero():
            return LaurentPoly.zero(), LaurentPoly.zero()
        a, b = self.min_exp(), g.min_exp()
        f0 = self.shift(-a)  # ordinary polynomial, constant term may be 0 though;
        g0 = g.shift(-b)     # min exp 0 guarantees nonzero constant term
        # ordinary long division of f0 by g0
        q: dict[int, Fraction] = {}
        r = dict(f0.terms)
        dg = max(g0.terms)
        lg = g0.terms[dg]
        while r and max(r) >= dg:
            dr = max(r)
            c = r[dr] / lg
            q[dr - dg] = c
            for e, ce in g0.terms.items():
                e2 = e + dr - dg
                nc = r.get(e2, Fraction(0)) - c * ce
                if nc == 0:
                    r.pop(e2, None)
                else:
                    r[e2] = nc
        quotient = LaurentPoly(q).shift(a - b)
        remainder = LaurentPoly(r).shift(a)
        return quotient, remainder

    def __divmod__(self, other):
        return self.divmod(_coerce(other))

    def __floordiv__(self, other) -> "LaurentPoly":
        return self.divmod(_coerce(other))[0]

    def __mod__(self, other) -> "LaurentPoly":
        return self.divmod(_coerce(other))[1]

    def divides(self, other: "LaurentPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    def exact_div(self, g: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(g)
        if not r.is_zero():
            raise LaurentError(f"{self} is not divisible by {g}")
        return q

    # ------------------------------------------------------------------
    # canonical form

    def content_and_primitive(self) -> tuple[Fraction, "LaurentPoly"]:
        """Write self = c * f0 with f0 having coprime integer coefficients
        and positive leading coefficient.  Requires self != 0."""
        if self.is_zero():
            raise LaurentError("zero polynomial has no content")
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // _intgcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = _intgcd(num, c.numerator * den // c.denominator)
        content = Fraction(num, den)
        if self.terms[self.max_exp()] < 0:
            content = -content
        return content, LaurentPoly({e: c / content for e, c in self.terms.items()})

    def normalize(self) -> "LaurentPoly":
        """The canonical associate: minimum exponent 0, integer coefficients
        with content 1, positive leading coefficient.

        >>> print(LaurentPoly({-1: -2, 0: 5, 1: -2}).normalize())
        2*t^2 - 5*t + 2
        >>> print(LaurentPoly({3: Fraction(3, 2)}).normalize())
        1
        """
        if self.is_zero():
            raise LaurentError("no canonical associate of zero")
        _, prim = self.content_and_primitive()
        return prim.shift(-prim.min_exp())

    def associate(self, other: "LaurentPoly") -> bool:
        """True when self and other differ by a unit of Q[t,t^-1]."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.normalize() == other.normalize()

    # ------------------------------------------------------------------
    # substitutions and evaluations

    def substitute_power(self, k: int) -> "LaurentPoly":
        """t -> t^k for a nonzero integer k (negative k yields f(t^-|k|))."""
        if k == 0:
            raise LaurentError("degenerate substitution")
        return LaurentPoly({e * k: c for e, c in self.terms.items()})

    def reciprocal(self) -> "LaurentPoly":
        """f(t^-1)."""
        return self.substitute_power(-1)

    def evaluate(self, x):
        """Evaluate at x, which must be invertible if negative exponents occur.

        Works for Fraction and for any type supporting +, *, and ** with
        integer exponents (e.g. GaussianRational).
        """
        total = None
        for e, c in sorted(self.terms.items()):
            term = x ** e * c
            total = term if total is None else total + term
        if total is None:
            return Fraction(0)
        return total

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: c * e for e, c in self.terms.items() if e != 0})

    def int_coeffs(self) -> list[int]:
        """Dense low-to-high integer coefficient list of the primitive part
        shifted to minimum exponent 0."""
        f = self.normalize()
        top = f.max_exp()
        return [int(f.coeff(i)) for i in range(top + 1)]

    # ------------------------------------------------------------------
    # text form

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    _TERM_RE = re.compile(
        r"""^\s*
        (?P<coeff>[0-9]+(?:/[0-9]+)?)?      # optional rational coefficient
        \s*(?P<star>\*)?\s*
        (?P<var>t(?:\^(?P<exp>-?[0-9]+))?)?  # optional t or t^e
        \s*$""",
        re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse strings like ``2*t^2 - 5*t + 2`` or ``8*t^-1 - 9``.

        Coefficients may be rationals written as p/q.
        """
        s = text.strip()
        if not s:
            raise LaurentError("empty polynomial text")
        # split into signed chunks
        chunks: list[tuple[int, str]] = []
        sign, buf = 1, []
        first = True
        for ch in s:
            if ch in "+-" and buf and buf[-1] not in "*^/+-" and not first:
                chunks.append((sign, "".join(buf)))
                sign, buf = (1 if ch == "+" else -1), []
            elif ch in "+-" and not buf:
                sign *= 1 if ch == "+" else -1
            else:
                buf.append(ch)
                first = False
        if buf:
            chunks.append((sign, "".join(buf)))
        terms: dict[int, Fraction] = {}
        for sgn, chunk in chunks:
            m = cls._TERM_RE.match(chunk)
            if not m or (m.group("coeff") is None and m.group("var") is None):
                raise LaurentError(f"cannot parse polynomial term {chunk!r} in {text!r}")
            coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
            if m.group("var"):
                exp = int(m.group("exp")) if m.group("exp") else 1
            else:
                exp = 0
            terms[exp] = terms.get(exp, Fraction(0)) + sgn * coeff
        return cls(terms)


def _coerce(x) -> "LaurentPoly":
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    return NotImplemented


# ----------------------------------------------------------------------
# gcd and resultant

def _int_primitive(f: LaurentPoly) -> list[int]:
    """Primitive integer coefficient list (low to high), min exponent 0."""
    return f.int_coeffs()


def _list_content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = _intgcd(g, c)
    return g or 1


def _list_primitive(a: list[int]) -> list[int]:
    g = _list_content(a)
    if a and a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _list_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _list_pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomial lists (dense, low to high)."""
    f = list(f)
    df, dg = len(f) - 1, len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and f:
        d = len(f) - 1 - dg
        lf = f[-1]
        f = [c * lg for c in f]
        for i, c in enumerate(g):
            f[i + d] -= lf * c
        _list_trim(f)
        if not f:
            break
    return f


def gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Normalized greatest common divisor, via subresultant-style PRS on
    primitive integer parts (unit-shifted), so no rational blowup occurs.

    gcd(f, 0) = normalize(f); an error if both arguments are zero.
    """
    if f.is_zero() and g.is_zero():
        raise LaurentError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.normalize()
    if g.is_zero():
        return f.normalize()
    a = _list_primitive(_int_primitive(f))
    b = _list_primitive(_int_primitive(g))
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _list_pseudo_rem(a, b)
        if not r:
            return LaurentPoly.from_int_coeffs(_list_primitive(b)).normalize()
        a, b = b, _list_primitive(r)


def resultant(f: LaurentPoly, g: LaurentPoly) -> Fraction:
    """Resultant of the unit-shifted ordinary polynomials, computed by
    fraction-free (Bareiss) elimination of the Sylvester matrix.

    Zero exactly when f and g share a nonconstant factor.
    """
    if f.is_zero() or g.is_zero():
        raise LaurentError("resultant of the zero polynomial is undefined")
    fa = f.shift(-f.min_exp())
    ga = g.shift(-g.min_exp())
    m, n = fa.max_exp(), ga.max_exp()
    if m == 0 and n == 0:
        return Fraction(1)
    if m == 0:
        return fa.coeff(0) ** n
    if n == 0:
        return ga.coeff(0) ** m
    # Sylvester matrix over Q, scaled to integers for Bareiss
    den = 1
    for c in list(fa.terms.values()) + list(ga.terms.values()):
        den = den * c.denominator // _intgcd(den, c.denominator)
    fi = [int(fa.coeff(m - i) * den) for i in range(m + 1)]  # high to low
    gi = [int(ga.coeff(n - i) * den) for i in range(n + 1)]
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + fi + [0] * (size - i - m - 1))
    for i in range(m):
        rows.append([0] * i + gi + [0] * (size - i - n - 1))
    det = _bareiss_det(rows)
    return Fraction(det, den ** (m + n))


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ----------------------------------------------------------------------
# Gaussian rationals, for exact evaluation on the unit circle

class GaussianRational:
    """An element of Q(i), used for exact unit-circle evaluations."""

    __slots__ = ("re", "im")

    def __init__(self, re: Coeffable = 0, im: Coeffable = 0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _co(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        return NotImplemented

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> "GaussianRational":
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussianRational(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


def circle_point(s: Fraction | int) -> GaussianRational:
    """The rational circle parametrization w = ((1 - s^2) + 2is)/(1 + s^2).

    s = 0 gives 1; s -> infinity approaches -1; s > 0 covers the upper
    half circle minus the endpoints.
    """
    s = _as_fraction(s)
    d = 1 + s * s
    return GaussianRational((1 - s * s) / d, 2 * s / d)
