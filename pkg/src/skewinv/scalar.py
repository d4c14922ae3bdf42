"""Exact arithmetic in Q(z), z a primitive m-th root of unity, and dense
row-reduction over it.

When phi(m) == 1 (m = 1 or 2) the field is Q and elements are plain
``gmpy2.mpq`` values; otherwise they are :class:`Cyclo` instances holding
coefficients in the power basis 1, z, ..., z^(phi(m)-1).  Both kinds support
the usual operators and mix freely with ``int``.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache
from math import gcd

from gmpy2 import mpq

from . import expr

ZERO = mpq(0)
ONE = mpq(1)


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, low degree first."""
    if m < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num = _exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        q[k] = c
        for j, dj in enumerate(den):
            num[k + j] -= c * dj
    assert not any(num), "inexact division"
    return q


def _to_q(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


class Cyclo:
    """Element of Q(z) with phi(m) >= 2.  Immutable."""

    __slots__ = ("field", "c")

    def __init__(self, field: "CyclotomicField", coeffs):
        self.field = field
        self.c = tuple(coeffs)

    # -- helpers
    def _lift(self, other):
        if isinstance(other, Cyclo):
            if other.field.m != self.field.m:
                raise ValueError("mixed cyclotomic orders")
            return other.c
        if isinstance(other, (int, Fraction)) or type(other) is type(ZERO):
            return (_to_q(other),) + (ZERO,) * (self.field.phi - 1)
        return None

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.field._mk(tuple(a + b for a, b in zip(self.c, o)))

    __radd__ = __add__

    def __neg__(self):
        return self.field._mk(tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.field._mk(tuple(a - b for a, b in zip(self.c, o)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.field._mk(tuple(b - a for a, b in zip(self.c, o)))

    def __mul__(self, other):
        if isinstance(other, Cyclo):
            if other.field.m != self.field.m:
                raise ValueError("mixed cyclotomic orders")
            return self.field._mul(self.c, other.c)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        s = o[0]
        return self.field._mk(tuple(a * s for a in self.c))

    __rmul__ = __mul__

    def inverse(self):
        if not any(self.c):
            raise ZeroDivisionError("inverse of zero")
        return self.field._inv(self.c)

    def __truediv__(self, other):
        if isinstance(other, Cyclo):
            return self * other.inverse()
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o[0] == 0:
            raise ZeroDivisionError("division by zero")
        return self * (1 / o[0])

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc = self.field.one
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.c == o

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash((self.field.m, self.c))

    def conjugate(self):
        """Image under z -> z^-1."""
        return self.field.conjugate(self)

    def __repr__(self):
        return f"Cyclo({self.field.format(self)!r}, m={self.field.m})"

    def __str__(self):
        return self.field.format(self)


class CyclotomicField:
    """Q(z) for a fixed order m; ``z`` is printed and parsed as ``z``."""

    _cache: dict[int, "CyclotomicField"] = {}

    def __new__(cls, m: int = 1):
        if m in cls._cache:
            return cls._cache[m]
        self = super().__new__(cls)
        self.m = m
        self.poly = cyclotomic_poly(m)
        self.phi = len(self.poly) - 1
        self.rational = self.phi == 1
        if self.rational:
            self.zero, self.one = ZERO, ONE
        else:
            self.zero = Cyclo(self, (ZERO,) * self.phi)
            self.one = Cyclo(self, (ONE,) + (ZERO,) * (self.phi - 1))
        # z^k reduced, for k < 2*phi, used by multiplication
        self._powers = [self._reduce_raw([ZERO] * k + [ONE]) for k in range(2 * self.phi)]
        cls._cache[m] = self
        return self

    def __getnewargs__(self):
        return (self.m,)

    def __repr__(self):
        return f"CyclotomicField({self.m})"

    # -- construction
    def _reduce_raw(self, coeffs: list) -> tuple:
        coeffs = list(coeffs)
        d = self.phi
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if c:
                coeffs[k] = ZERO
                for j in range(d):
                    coeffs[k - d + j] -= c * self.poly[j]
        coeffs = coeffs[:d] + [ZERO] * (d - len(coeffs))
        return tuple(mpq(c) for c in coeffs)

    def _mk(self, coeffs: tuple):
        return Cyclo(self, coeffs)

    def _mul(self, a: tuple, b: tuple):
        d = self.phi
        prod = [ZERO] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = list(prod[:d])
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                pk = self._powers[k]
                for j in range(d):
                    if pk[j]:
                        out[j] += c * pk[j]
        return Cyclo(self, tuple(out))

    def _inv(self, a: tuple):
        # solve a * x = 1 using the multiplication matrix of a
        d = self.phi
        cols = []
        for k in range(d):
            basis = [ZERO] * d
            basis[k] = ONE
            cols.append(self._mul(a, tuple(basis)).c)
        mat = Matrix([[cols[k][i] for k in range(d)] for i in range(d)])
        rhs = [ONE] + [ZERO] * (d - 1)
        x = mat.solve(rhs)
        return Cyclo(self, tuple(x))

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction, mpq, str, or element) into the field."""
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Cyclo):
            if x.field is self:
                return x
            return self.embed(x)
        q = _to_q(x)
        if self.rational:
            return q
        return Cyclo(self, (q,) + (ZERO,) * (self.phi - 1))

    def embed(self, x: "Cyclo"):
        """Lift an element of a subfield Q(z_k), k | m, via z_k -> z^(m/k)."""
        k = x.field.m
        if self.m % k:
            raise ValueError(f"Q(z_{k}) does not embed in Q(z_{self.m})")
        step = self.m // k
        acc = self.zero
        for i, c in enumerate(x.c):
            if c:
                acc = acc + c * self.root(i * step)
        return acc

    def root(self, k: int = 1):
        """z^k."""
        if self.m == 1:
            return ONE
        if self.m == 2:
            return ONE if k % 2 == 0 else -ONE
        k %= self.m
        return Cyclo(self, self._reduce_raw([ZERO] * k + [ONE]))

    @property
    def z(self):
        return self.root(1)

    def is_zero(self, x) -> bool:
        return not x

    def conjugate(self, x):
        if self.rational or not isinstance(x, Cyclo):
            return x
        acc = self.zero
        for i, c in enumerate(x.c):
            if c:
                acc = acc + c * self.root(-i)
        return acc

    def order_of_root(self, x) -> int | None:
        """Multiplicative order of x if x is a root of unity in the field."""
        acc = x
        for k in range(1, 2 * self.m + 1):
            if acc == 1:
                return k
            acc = acc * x
        return None

    # -- text form
    def coeffs(self, x) -> tuple:
        if isinstance(x, Cyclo):
            return x.c
        return (_to_q(x),) + (ZERO,) * (self.phi - 1)

    def format(self, x) -> str:
        cs = self.coeffs(x)
        terms = []
        for k in range(len(cs) - 1, -1, -1):
            c = cs[k]
            if not c:
                continue
            mon = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            mag = abs(c)
            if mon:
                body = mon if mag == 1 else f"{_qstr(mag)}*{mon}"
            else:
                body = _qstr(mag)
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for s, b in terms[1:]:
            out += f" {s} {b}"
        return out

    def parse(self, text: str):
        """Parse a scalar literal such as ``-1/3*z^2 + z + 2``."""

        def name(n):
            if n == "z":
                return self.z
            if n[:1] == "z" and n[1:].isdigit():
                # zK is the primitive K-th root z^(m/K)
                k = int(n[1:])
                if k < 1 or self.m % k:
                    raise KeyError(f"{n} needs K dividing the field order {self.m}")
                return self.root(self.m // k)
            raise KeyError(f"unknown scalar symbol {n!r}")

        return expr.parse(text, expr.Evaluator(integer=self, name=name, divide=_scalar_div))


def _scalar_div(a, b):
    if not b:
        raise ZeroDivisionError
    return a / b


def _qstr(q) -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def inv(x):
    """Multiplicative inverse, never falling back to floats."""
    if isinstance(x, Cyclo):
        return x.inverse()
    x = _to_q(x)
    if not x:
        raise ZeroDivisionError("inverse of zero")
    return ONE / x


def field_of(x) -> CyclotomicField:
    if isinstance(x, Cyclo):
        return x.field
    return CyclotomicField(1)


# ---------------------------------------------------------------------------
# dense linear algebra


class Matrix:
    """Dense matrix over a cyclotomic field, rows as lists.

    Row reduction pivots on the first nonzero entry left to right, taking
    rows in input order, so results are reproducible.
    """

    def __init__(self, rows, ncols: int | None = None):
        self.rows = [[mpq(x) if isinstance(x, (int, Fraction)) else x for x in r] for r in rows]
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows and self.ncols == other.ncols

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        out = []
        for r in self.rows:
            row = [ZERO] * other.ncols
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(other.rows[k]):
                        if b:
                            row[j] = row[j] + a * b
            out.append(row)
        return Matrix(out, other.ncols)

    def transpose(self) -> "Matrix":
        return Matrix([list(c) for c in zip(*self.rows)], self.nrows) if self.rows else Matrix([], 0)

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for col in range(self.ncols):
            piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            iv = inv(rows[r][col])
            rows[r] = [x * iv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][col]:
                    c = rows[i][col]
                    rows[i] = [a - c * b for a, b in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
            if r == len(rows):
                break
        return Matrix(rows, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[list]:
        """Basis of {v : M v = 0}, one vector per free column."""
        R, piv = self.rref()
        zero = self.rows[0][0] * 0 if self.rows and self.ncols else ZERO
        out = []
        for free in (j for j in range(self.ncols) if j not in piv):
            v = [zero] * self.ncols
            v[free] = zero + 1
            for r, p in enumerate(piv):
                v[p] = -R.rows[r][free]
            out.append(v)
        return out

    def solve(self, b) -> list:
        """A solution x of self * x = b; raises ValueError if none exists."""
        if len(b) != self.nrows:
            raise ValueError("dimension mismatch")
        aug = Matrix([list(r) + [bi] for r, bi in zip(self.rows, b)], self.ncols + 1)
        red, piv = aug.rref()
        if piv and piv[-1] == self.ncols:
            raise ValueError("inconsistent system")
        x = [ZERO] * self.ncols
        for i, c in enumerate(piv):
            x[c] = red.rows[i][-1]
        return x

    def membership(self, v) -> tuple[bool, list | None]:
        """Is v in the row space?  If so, coefficients c with sum c_i row_i = v."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        if not self.rows:
            return (not any(v)), ([] if not any(v) else None)
        try:
            c = self.transpose().solve(list(v))
        except ValueError:
            return False, None
        return True, c


# ---------------------------------------------------------------------------
# sparse incremental echelon form (backs the ideal-slice computations)


class Echelon:
    """Row-echelon basis of a subspace of k^N built one vector at a time.

    Vectors are dicts ``{column: value}``.  Each stored row has its smallest
    column as pivot with value 1.  Insertion order fixes the basis.
    """

    def __init__(self, track: bool = False):
        self.pivots: dict[int, dict] = {}
        self.track = track
        self.combos: dict[int, dict] = {}
        self._n = 0

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: dict, combo: dict | None = None):
        """Reduce vec modulo the stored rows; returns (remainder, combo)."""
        row = dict(vec)
        heap = list(row)
        heapq.heapify(heap)
        piv = self.pivots
        track = self.track and combo is not None
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            a = row.get(c)
            if not a:
                row.pop(c, None)
                continue
            p = piv.get(c)
            if p is None:
                continue
            for k, v in p.items():
                nv = row.get(k, ZERO) - a * v
                if nv:
                    if k not in row:
                        heapq.heappush(heap, k)
                    row[k] = nv
                else:
                    row.pop(k, None)
            if track:
                for g, v in self.combos[c].items():
                    nv = combo.get(g, ZERO) - a * v
                    if nv:
                        combo[g] = nv
                    else:
                        combo.pop(g, None)
        return row, combo

    def add(self, vec: dict, label=None) -> bool:
        """Insert vec; returns True if it enlarged the span."""
        combo = {label if label is not None else ("gen", self._n): ONE} if self.track else None
        self._n += 1
        row, combo = self.reduce(vec, combo)
        if not row:
            return False
        c = min(row)
        iv = inv(row[c])
        self.pivots[c] = {k: v * iv for k, v in row.items()}
        if self.track:
            self.combos[c] = {k: v * iv for k, v in combo.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def express(self, vec: dict):
        """Coefficients over inserted labels writing vec, or None if outside."""
        if not self.track:
            raise ValueError("Echelon built without tracking")
        row, combo = self.reduce(vec, {})
        if row:
            return None
        return {k: -v for k, v in combo.items()}
