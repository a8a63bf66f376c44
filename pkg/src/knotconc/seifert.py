"""Seifert matrices and the classical invariants computed from them.

A Seifert matrix is a 2g x 2g integer matrix V with det(V - V^T) = 1.
From it we compute the Alexander polynomial det(V - tV^T) (normalized),
Levine-Tristram signatures at exact unit-circle points, the Arf
invariant, block-sum/mirror/reverse transforms, and the derivative
(self-annihilating) classes of genus-one forms.

Built-in matrices:

* ``twist_matrix(j)``   -- the twist knot with positive clasp and j full
  twists, as [[-1, 1], [0, -j]].  This sign variant is the one with
  Arf = j mod 2, Alexander polynomial jt^2 - (2j-1)t + j (roots on the
  unit circle at cos(theta) = (2j-1)/2j), and signature -2 at -1, so the
  j = 1 case is the right-handed trefoil with sigma = -2.
* ``operator_matrix(k)`` -- the genus-one pattern shared by the two
  doubling-operator families, [[-k, 1], [0, k+1]], with Alexander
  polynomial (kt - (k+1))((k+1)t - k).  The two families differ only by
  data recorded in the concordance ledger, not by this pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _intgcd

from .laurent import GaussianRational, LaurentError, LaurentPoly


class SeifertError(ValueError):
    pass


class SeifertMatrix:
    """Immutable 2g x 2g integer matrix with unimodular skew part."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(c) for c in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise SeifertError("not a square matrix")
        if n % 2 != 0:
            raise SeifertError("not a Seifert matrix: odd dimension")
        object.__setattr__(self, "rows", rows)
        if n and _int_det([[self[i, j] - self[j, i] for j in range(n)] for i in range(n)]) != 1:
            raise SeifertError("not a Seifert matrix: det(V - V^T) != 1")

    def __setattr__(self, name, value):
        raise AttributeError("SeifertMatrix is immutable")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def genus(self) -> int:
        return self.dim // 2

    def __eq__(self, other):
        return isinstance(other, SeifertMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SeifertMatrix({[list(r) for r in self.rows]})"

    def transpose(self) -> "SeifertMatrix":
        n = self.dim
        return SeifertMatrix([[self[j, i] for j in range(n)] for i in range(n)])

    # -- text format ------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"g={self.genus}"]
        for r in self.rows:
            lines.append(" ".join(str(c) for c in r))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SeifertMatrix":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
        if not lines or not lines[0].startswith("g="):
            raise SeifertError("matrix file must start with 'g=<genus>'")
        try:
            g = int(lines[0][2:])
        except ValueError:
            raise SeifertError(f"bad genus line {lines[0]!r}") from None
        rows = []
        for ln in lines[1:]:
            rows.append([int(tok) for tok in ln.split()])
        if len(rows) != 2 * g:
            raise SeifertError(f"expected {2 * g} rows, found {len(rows)}")
        return cls(rows)


def _int_det(rows: list[list[int]]) -> int:
    """Bareiss determinant of an integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    a = [r[:] for r in rows]
    sign, prev = 1, 1
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


def _poly_matrix_det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant over Z[t, t^-1] by expansion with memoized minors.
    Matrix dimensions here are small (2g x 2g with g rarely above 6)."""
    n = len(rows)
    if n == 0:
        return LaurentPoly.one()
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def minor(rowmask: int, depth: int) -> LaurentPoly:
        if depth == n:
            return LaurentPoly.one()
        total = LaurentPoly.zero()
        sign = 1
        for i in range(n):
            if rowmask & (1 << i):
                continue
            entry = rows[i][depth]
            if not entry.is_zero():
                sub = minor(rowmask | (1 << i), depth + 1)
                term = entry * sub
                total = total + (term if sign > 0 else -term)
            sign = -sign
        return total

    return minor(0, 0)


# ----------------------------------------------------------------------
# invariants

def alexander_polynomial(V: SeifertMatrix) -> LaurentPoly:
    """normalize(det(V - t V^T)); the empty matrix gives 1."""
    n = V.dim
    if n == 0:
        return LaurentPoly.one()
    t = LaurentPoly.t()
    rows = [[LaurentPoly.constant(V[i, j]) - t * V[j, i] for j in range(n)]
            for i in range(n)]
    det = _poly_matrix_det(rows)
    if det.is_zero():
        raise SeifertError("degenerate pairing: det(V - tV^T) = 0")
    return det.normalize()


def signature_at(V: SeifertMatrix, omega: GaussianRational) -> int:
    """Signature of (1 - w)V + (1 - conj(w))V^T at an exact unit-circle w.

    w must come from the rational circle parametrization (or be -1), and
    must avoid the roots of the Alexander polynomial.  The Hermitian form
    is diagonalized by exact congruence over the Gaussian rationals.
    """
    if omega.norm_sq() != 1:
        raise SeifertError("evaluation point must lie on the unit circle")
    n = V.dim
    if n == 0:
        return 0
    delta = alexander_polynomial(V)
    if delta.evaluate(omega).is_zero():
        raise SeifertError("signature undefined at Alexander root")
    a = GaussianRational(1) - omega
    b = a.conjugate()
    H = [[a * V[i, j] + b * V[j, i] for j in range(n)] for i in range(n)]
    return _hermitian_signature(H)


def _hermitian_signature(H: list[list[GaussianRational]]) -> int:
    """Signature of a Hermitian Gaussian-rational matrix by congruence."""
    n = len(H)
    H = [row[:] for row in H]
    live = list(range(n))
    pos = neg = 0

    def pivot_on(i):
        nonlocal pos, neg
        d = H[i][i].re
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in live:
            if r == i:
                continue
            factor = H[r][i] * H[i][i].inverse()
            if factor.is_zero():
                continue
            for c in live:
                if c == i:
                    continue
                H[r][c] = H[r][c] - factor * H[i][c]
            H[r][i] = GaussianRational(0)
        for c in live:
            if c != i:
                H[i][c] = GaussianRational(0)

    while live:
        i = next((r for r in live if not H[r][r].is_zero()), None)
        if i is not None:
            live.remove(i)
            pivot_on(i)
            continue
        # all live diagonal entries vanish; find an off-diagonal entry
        found = None
        for r in live:
            for c in live:
                if r != c and not H[r][c].is_zero():
                    found = (r, c)
                    break
            if found:
                break
        if found is None:
            break  # the live block is zero: contributes nothing
        r, c = found
        # replace e_r by e_r + u e_c with u in {1, i} to create a nonzero
        # diagonal entry 2 Re(u conj stuff); one of the two choices works
        for u in (GaussianRational(1), GaussianRational(0, 1)):
            new_diag = H[r][r] + u * H[r][c] + u.conjugate() * H[c][r] \
                + u * u.conjugate() * H[c][c]
            if not new_diag.is_zero():
                for j in live:
                    if j != r:
                        H[r][j] = H[r][j] + u.conjugate() * H[c][j]
                for j in live:
                    if j != r:
                        H[j][r] = H[j][r] + u * H[j][c]
                H[r][r] = new_diag
                break
    return pos - neg


def alexander_at_minus_one(V: SeifertMatrix) -> int:
    d = alexander_polynomial(V)
    val = d.evaluate(Fraction(-1))
    assert val.denominator == 1
    return int(val)


def arf(V: SeifertMatrix) -> int:
    """0 iff |Alexander(-1)| is congruent to +-1 mod 8."""
    return 0 if alexander_at_minus_one(V) % 8 in (1, 7) else 1


# ----------------------------------------------------------------------
# transforms

def connected_sum(V: SeifertMatrix, W: SeifertMatrix) -> SeifertMatrix:
    n, m = V.dim, W.dim
    rows = []
    for i in range(n):
        rows.append(list(V.rows[i]) + [0] * m)
    for i in range(m):
        rows.append([0] * n + list(W.rows[i]))
    return SeifertMatrix(rows)


def mirror(V: SeifertMatrix) -> SeifertMatrix:
    return SeifertMatrix([[-V[j, i] for j in range(V.dim)] for i in range(V.dim)])


def reverse(V: SeifertMatrix) -> SeifertMatrix:
    return V.transpose()


def mirror_reverse(V: SeifertMatrix) -> SeifertMatrix:
    """The concordance inverse -K: mirror image with orientation reversed."""
    return SeifertMatrix([[-V[i, j] for j in range(V.dim)] for i in range(V.dim)])


EMPTY = SeifertMatrix(())


# ----------------------------------------------------------------------
# built-in matrices

def twist_matrix(j: int) -> SeifertMatrix:
    """Twist knot with positive clasp and j full twists; j >= 1."""
    if j < 1:
        raise SeifertError("twist parameter must be >= 1")
    return SeifertMatrix([[-1, 1], [0, -j]])


def operator_matrix(k: int) -> SeifertMatrix:
    """Genus-one pattern matrix of the k-th doubling operators; k >= 1."""
    if k < 1:
        raise SeifertError("operator parameter must be >= 1")
    return SeifertMatrix([[-k, 1], [0, k + 1]])


def builtin_matrix(name: str, param: int) -> SeifertMatrix:
    table = {"twist": twist_matrix, "operator-r": operator_matrix,
             "operator-q": operator_matrix}
    if name not in table:
        raise SeifertError(f"unknown builtin {name!r}")
    return table[name](param)


# ----------------------------------------------------------------------
# derivative classes on genus-one surfaces

@dataclass(frozen=True)
class DerivativeClass:
    """A primitive homology class (x, y) with vanishing Seifert self-pairing."""
    x: int
    y: int

    def __post_init__(self):
        if (self.x, self.y) == (0, 0) or _intgcd(self.x, self.y) != 1:
            raise SeifertError("derivative class must be primitive")


def genus_one_derivatives(V: SeifertMatrix) -> list[DerivativeClass]:
    """Primitive integer solutions of x^2 V11 + xy (V12 + V21) + y^2 V22 = 0,
    up to sign (first nonzero coordinate positive).  Empty when the form
    has no isotropic vectors (e.g. definite symmetrization)."""
    if V.dim != 2:
        raise SeifertError("derivative classes are defined for 2x2 matrices")
    a, b, c = V[0, 0], V[0, 1] + V[1, 0], V[1, 1]
    sols: set[tuple[int, int]] = set()

    def norm(x, y):
        if x < 0 or (x == 0 and y < 0):
            x, y = -x, -y
        g = _intgcd(x, y)
        return (x // g, y // g)

    if a == 0 and c == 0 and b == 0:
        raise SeifertError("zero form has every class as a derivative")
    if a == 0:
        sols.add(norm(1, 0))          # y = 0 direction
        if b != 0:                    # bx + cy = 0 along y != 0
            sols.add(norm(-c, b))
    elif c == 0:
        sols.add(norm(0, 1))
        if b != 0:                    # ax + by = 0 along x != 0
            sols.add(norm(b, -a))
    else:
        disc = b * b - 4 * a * c
        if disc >= 0:
            r = _isqrt_exact(disc)
            if r is not None:
                for root_num, root_den in ((-b + r, 2 * a), (-b - r, 2 * a)):
                    # x/y = root: primitive (x, y) = (root_num, root_den) reduced
                    if root_den != 0:
                        sols.add(norm(root_num, root_den))
    out = sorted(sols)
    return [DerivativeClass(x, y) for x, y in out]


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = int(n ** 0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r if r * r == n else None
