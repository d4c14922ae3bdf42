"""Commutative polynomials over Q for the relative-primality certificates.

Variables are y_1..y_n, standing for the central squares y_i = x_i^2.
"""

from __future__ import annotations

from itertools import combinations

from gmpy2 import mpq

from . import expr


class CommPoly:
    """Finitely supported map exponent-vector -> rational."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {tuple(e): mpq(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, n: int, i: int) -> "CommPoly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def const(cls, n: int, c) -> "CommPoly":
        return cls(n, {(0,) * n: c})

    def _coerce(self, other) -> "CommPoly":
        if isinstance(other, CommPoly):
            if other.n != self.n:
                raise ValueError("variable count mismatch")
            return other
        return CommPoly.const(self.n, other)

    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return CommPoly(self.n, t)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return CommPoly(self.n, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        acc = CommPoly.const(self.n, 1)
        for _ in range(k):
            acc = acc * self
        return acc

    def __truediv__(self, c):
        c = mpq(c)
        return CommPoly(self.n, {e: v / c for e, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, CommPoly):
            other = CommPoly.const(self.n, other)
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def substitute(self, i: int, value: "CommPoly") -> "CommPoly":
        """Replace y_i by value (a ring homomorphism)."""
        out = CommPoly(self.n)
        cache: dict[int, CommPoly] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k not in cache:
                cache[k] = value ** k
            rest = list(e)
            rest[i] = 0
            out = out + CommPoly(self.n, {tuple(rest): c}) * cache[k]
        return out

    def evaluate(self, point) -> mpq:
        acc = mpq(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                t = t * mpq(x) ** k
            acc += t
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for k, (e, c) in enumerate(sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)):
            mono = "*".join(f"y{i + 1}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(e) if p)
            neg = c < 0
            mag = -c if neg else c
            cs = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            body = mono if (mono and mag == 1) else (f"{cs}*{mono}" if mono else cs)
            if k == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"CommPoly({self})"


def parse_comm(text: str, n: int) -> CommPoly:
    """Parse an expression in y1..yn where ``*`` commutes."""

    def name(s):
        if s.startswith("y") and s[1:].isdigit() and 1 <= int(s[1:]) <= n:
            return CommPoly.var(n, int(s[1:]) - 1)
        raise KeyError(f"unknown variable {s!r}")

    def divide(a, b):
        if set(b.terms) - {(0,) * n}:
            raise ValueError("can only divide by a nonzero scalar")
        c = b.terms.get((0,) * n)
        if not c:
            raise ZeroDivisionError
        return a / c

    return expr.parse(text, expr.Evaluator(integer=lambda k: CommPoly.const(n, k), name=name, divide=divide))


def _y(n, i):
    return CommPoly.var(n, i - 1)


def vdm(n: int) -> CommPoly:
    """prod_{i<j} (y_i - y_j)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    acc = CommPoly.const(n, 1)
    for a, b in combinations(range(1, n + 1), 2):
        acc = acc * (_y(n, a) - _y(n, b))
    return acc


def hhat(n: int, variant: str, i: int, j: int) -> CommPoly:
    """(1/2)(x_i f_ij + f_ij x_i) written in the central squares.

    For V_n this is y_i prod_{(a,b) != (i,j)} (y_a - y_b).  For S(1,1,-1)
    (n = 3) one has x_i(x_i - x_j) + (x_i - x_j)x_i = 2y_i - y_k with k the
    third index, so the leading factor is y_i - y_k/2.
    """
    if not 1 <= i < j <= n:
        raise ValueError("need 1 <= i < j <= n")
    acc = CommPoly.const(n, 1)
    for a, b in combinations(range(1, n + 1), 2):
        if (a, b) != (i, j):
            acc = acc * (_y(n, a) - _y(n, b))
    v = variant.lower()
    if v in ("vn", "v"):
        return _y(n, i) * acc
    if v == "sklyanin":
        if n != 3:
            raise ValueError("the Sklyanin variant needs n = 3")
        k = ({1, 2, 3} - {i, j}).pop()
        return (_y(n, i) - _y(n, k) / 2) * acc
    raise ValueError(f"unknown variant {variant!r}")


def hhat_sum(n: int, variant: str = "Vn") -> CommPoly:
    acc = CommPoly(n)
    for i, j in combinations(range(1, n + 1), 2):
        acc = acc + hhat(n, variant, i, j)
    return acc


def rel_prime_by_substitution(h: CommPoly, n: int | None = None):
    """Check that h has no factor y_a - y_b.

    Returns (ok, witnesses) with one (a, b, image) entry per pair, where image
    is h with y_a replaced by y_b.  VdM's irreducible factors are exactly the
    y_a - y_b, so ok means h and VdM are coprime.
    """
    n = h.n if n is None else n
    wit = []
    ok = True
    for a, b in combinations(range(1, n + 1), 2):
        img = h.substitute(a - 1, _y(n, b))
        wit.append((a, b, img))
        ok = ok and bool(img)
    return ok, wit


def coprime_to_linear_factors(h: CommPoly, factors: list) -> tuple[bool, list]:
    """h is coprime to each linear form y_a - c y_b (or c y_a) in ``factors``.

    Each factor is killed by solving for its first variable and substituting;
    a nonzero image certifies that the factor does not divide h.
    """
    wit = []
    ok = True
    for ell in factors:
        lin = [(e.index(1), c) for e, c in ell.terms.items() if sum(e) == 1]
        if len(lin) != len(ell.terms) or not lin:
            raise ValueError(f"{ell} is not a linear form")
        lin.sort()
        i, ci = lin[0]
        rest = CommPoly(h.n)
        for k, ck in lin[1:]:
            rest = rest - CommPoly.var(h.n, k) * (ck / ci)
        img = h.substitute(i, rest)
        wit.append((ell, img))
        ok = ok and bool(img)
    return ok, wit
