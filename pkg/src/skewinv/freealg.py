"""Words and polynomials in a free algebra on named generators."""

from __future__ import annotations

from typing import Iterable, Mapping

from . import expr
from .scalar import CyclotomicField, Cyclo

Word = tuple  # tuple of generator indices


class FreeAlgebra:
    """The free algebra k<x_1, ..., x_n> over a cyclotomic field.

    ``params`` binds scalar names (a, b, c, alpha, ...) to field values so
    that they can appear in parsed expressions.
    """

    def __init__(self, names: Iterable[str], field: CyclotomicField | None = None,
                 params: Mapping | None = None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        self.field = field or CyclotomicField(1)
        self.index = {n: i for i, n in enumerate(self.names)}
        self.params = {k: self.field(v) for k, v in (params or {}).items()}
        clash = set(self.params) & set(self.names)
        if clash:
            raise ValueError(f"names used both as generator and parameter: {sorted(clash)}")

    @property
    def ngens(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, FreeAlgebra) and self.names == other.names
                and self.field.m == other.field.m)

    def __hash__(self):
        return hash((self.names, self.field.m))

    def __repr__(self):
        return f"FreeAlgebra({list(self.names)}, m={self.field.m})"

    def gen(self, i) -> "FreePoly":
        if isinstance(i, str):
            i = self.index[i]
        return FreePoly(self, {(i,): self.field.one})

    def gens(self) -> list["FreePoly"]:
        return [self.gen(i) for i in range(self.ngens)]

    def word(self, w) -> "FreePoly":
        return FreePoly(self, {tuple(w): self.field.one})

    def scalar(self, c) -> "FreePoly":
        c = self.field(c)
        return FreePoly(self, {(): c} if c else {})

    def zero(self) -> "FreePoly":
        return FreePoly(self, {})

    def one(self) -> "FreePoly":
        return self.scalar(1)

    def __call__(self, x) -> "FreePoly":
        if isinstance(x, FreePoly):
            return x
        if isinstance(x, str):
            return self.parse(x)
        return self.scalar(x)

    def parse(self, text: str) -> "FreePoly":
        """Parse an expression; ``*`` is the (noncommutative) product."""
        F = self.field

        def name(n):
            if n in self.index:
                return self.gen(n)
            if n in self.params:
                return self.scalar(self.params[n])
            if n == "z":
                return self.scalar(F.z)
            raise KeyError(f"unknown generator {n!r}")

        def divide(a, b):
            c = b.constant()
            if c is None:
                raise ValueError("can only divide by a nonzero scalar")
            if not c:
                raise ZeroDivisionError
            return a * (1 / c)

        return expr.parse(text, expr.Evaluator(integer=self.scalar, name=name, divide=divide))

    def word_str(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            k = j - i
            parts.append(self.names[w[i]] + (f"^{k}" if k > 1 else ""))
            i = j
        return "*".join(parts)


def deglex_key(w: Word, precedence: Mapping[int, int] | None = None):
    """Sort key: larger key = larger word.  Lower precedence rank = bigger letter."""
    if precedence is None:
        return (len(w), tuple(-i for i in w))
    return (len(w), tuple(-precedence[i] for i in w))


class FreePoly:
    """Finitely supported map from words to scalars.  Treated as immutable."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: FreeAlgebra, terms: Mapping | None = None):
        self.alg = alg
        self.terms = {tuple(w): c for w, c in (terms or {}).items() if c}

    # -- arithmetic
    def _check(self, other: "FreePoly"):
        if other.alg != self.alg:
            raise ValueError("generator-set mismatch")

    def _coerce(self, other):
        if isinstance(other, FreePoly):
            self._check(other)
            return other
        if isinstance(other, (int, Cyclo)) or hasattr(other, "denominator"):
            return self.alg.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for w, c in o.terms.items():
            v = t.get(w, 0) + c
            if v:
                t[w] = v
            else:
                t.pop(w, None)
        return FreePoly(self.alg, t)

    __radd__ = __add__

    def __neg__(self):
        return FreePoly(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FreePoly):
            self._check(other)
            t: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    v = t.get(w, 0) + c1 * c2
                    if v:
                        t[w] = v
                    else:
                        t.pop(w, None)
            return FreePoly(self.alg, t)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = o.constant()
        return FreePoly(self.alg, {w: v * c for w, v in self.terms.items()})

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __truediv__(self, other):
        c = self.alg.field(other)
        return self * (1 / c)

    def __pow__(self, k: int):
        acc = self.alg.one()
        for _ in range(k):
            acc = acc * self
        return acc

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, FreePoly) else other
        if o is None:
            return NotImplemented
        return self.alg == o.alg and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- queries
    def constant(self):
        """The scalar value if this is a constant polynomial, else None."""
        if not self.terms:
            return self.alg.field.zero
        if set(self.terms) == {()}:
            return self.terms[()]
        return None

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def degree(self) -> int:
        """Maximal word length (-1 for zero)."""
        return max((len(w) for w in self.terms), default=-1)

    def homogeneous_degree(self) -> int | None:
        ds = self.degrees()
        if len(ds) == 1:
            return next(iter(ds))
        return None

    def coefficient(self, w) -> object:
        return self.terms.get(tuple(w), self.alg.field.zero)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self, key=None):
        key = key or deglex_key
        return sorted(self.terms.items(), key=lambda wc: key(wc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.alg.field
        out = ""
        for k, (w, c) in enumerate(self.sorted_terms()):
            cs = F.format(c)
            compound = (" + " in cs or " - " in cs.lstrip("-"))
            neg = cs.startswith("-") and not compound
            mag = cs[1:] if neg else cs
            if compound:
                mag = f"({cs})"
            ws = self.alg.word_str(w)
            if w:
                body = ws if mag == "1" else f"{mag}*{ws}"
            else:
                body = mag
            if k == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"FreePoly({str(self)!r})"


def free_mul(p: FreePoly, q: FreePoly) -> FreePoly:
    return p * q


def parse_poly(text: str, generators, field: CyclotomicField | None = None,
               params: Mapping | None = None) -> FreePoly:
    alg = generators if isinstance(generators, FreeAlgebra) else FreeAlgebra(generators, field, params)
    return alg.parse(text)
