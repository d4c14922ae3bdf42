"""Quotient algebras with graded bases, centrality tests and named presets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .freealg import FreeAlgebra, FreePoly
from .rewrite import DegreeBoundError, Presentation, RewriteSystem, complete
from .scalar import CyclotomicField

DEFAULT_BOUND = 12


class AlgebraError(ValueError):
    pass


@dataclass
class CentralHandle:
    """Named elements verified to be central up to ``degree``."""

    names: list
    elements: list
    degree: int


class QuotientAlgebra:
    """k<x_1..x_n>/(relations) with a degree-truncated rewriting system."""

    def __init__(self, presentation: Presentation, bound: int = DEFAULT_BOUND, tag: str = "custom",
                 params: dict | None = None):
        self.presentation = presentation
        self.bound = bound
        self.tag = tag
        self.params = dict(params or {})
        self.rs: RewriteSystem = complete(presentation, bound)
        self._basis: dict[int, list] = {}
        self._index: dict[int, dict] = {}
        self.graded = presentation.graded
        self.witness: dict | None = None

    # -- plumbing
    @property
    def free(self) -> FreeAlgebra:
        return self.presentation.alg

    @property
    def field(self) -> CyclotomicField:
        return self.free.field

    @property
    def ngens(self) -> int:
        return self.free.ngens

    @property
    def names(self) -> tuple:
        return self.free.names

    @property
    def gkdim(self) -> int | None:
        """GK dimension for presets where it is known."""
        if self.tag in ("V", "W", "twisted-tensor"):
            return self.ngens
        if self.tag in ("sklyanin", "downup"):
            return 3
        return None

    def __repr__(self):
        return f"QuotientAlgebra({self.tag}, gens={list(self.names)}, bound={self.bound})"

    def __call__(self, x) -> FreePoly:
        return self.nf(self.free(x))

    def gen(self, i) -> FreePoly:
        return self.free.gen(i)

    def gens(self) -> list[FreePoly]:
        return self.free.gens()

    def nf(self, p: FreePoly) -> FreePoly:
        return self.rs.normal_form(p)

    def mul(self, p: FreePoly, q: FreePoly) -> FreePoly:
        return self.nf(p * q)

    def nf_word(self, w) -> dict:
        return self.rs.nf_word(w)

    def relations(self) -> list[FreePoly]:
        return list(self.presentation.relations)

    # -- bases
    def graded_basis(self, d: int) -> list[tuple]:
        if d > self.bound:
            raise DegreeBoundError(f"degree {d} exceeds completion bound {self.bound}")
        if d not in self._basis:
            words = self.rs.irreducible_words(d)
            self._basis[d] = words
            self._index[d] = {w: k for k, w in enumerate(words)}
        return self._basis[d]

    def basis_index(self, d: int) -> dict:
        self.graded_basis(d)
        return self._index[d]

    def hilbert_function(self, d: int) -> int:
        return len(self.graded_basis(d))

    def hilbert_series(self, N: int) -> list[int]:
        return [self.hilbert_function(d) for d in range(N + 1)]

    def basis_json(self, d: int) -> list[str]:
        return [self.free.word_str(w) for w in self.graded_basis(d)]

    def coords(self, p: FreePoly, d: int) -> dict:
        """Coordinates of the degree-d part of nf(p) over graded_basis(d)."""
        idx = self.basis_index(d)
        return {idx[w]: c for w, c in self.nf(p).terms.items() if len(w) == d}

    # -- centrality
    def is_central(self, e: FreePoly, D: int | None = None) -> bool:
        D = self.bound if D is None else D
        if e.degree() + 1 > min(D, self.bound):
            raise DegreeBoundError("centrality check exceeds the degree bound")
        for x in self.gens():
            if self.nf(e * x - x * e):
                return False
        return True

    def central_handle(self, named: dict) -> CentralHandle:
        """Verify each element and return the handle; raises if one fails."""
        names, elts = [], []
        for n, e in named.items():
            e = self.free(e)
            if not self.is_central(e):
                raise AlgebraError(f"{n} = {e} is not central")
            names.append(n)
            elts.append(self.nf(e))
        return CentralHandle(names, elts, self.bound)


# ---------------------------------------------------------------------------
# presets


def skew_polynomial(n: int, bound: int = DEFAULT_BOUND, names=None, field: CyclotomicField | None = None):
    """V_n: x_i x_j + x_j x_i = 0 for i != j."""
    if n < 1:
        raise AlgebraError("n must be positive")
    names = list(names or [f"x{i}" for i in range(1, n + 1)])
    F = FreeAlgebra(names, field)
    rels = [F.gen(i) * F.gen(j) + F.gen(j) * F.gen(i) for i in range(n) for j in range(i + 1, n)]
    # x_n > ... > x_1 so that normal words have nondecreasing indices
    pres = Presentation(F, rels, list(reversed(names)))
    return QuotientAlgebra(pres, bound, "V", {"n": n})


def quantum_weyl(n: int, bound: int = DEFAULT_BOUND, field: CyclotomicField | None = None):
    """W_n: x_i x_j + x_j x_i = 1 for i != j (filtered)."""
    if n < 2:
        raise AlgebraError("n must be at least 2")
    names = [f"x{i}" for i in range(1, n + 1)]
    F = FreeAlgebra(names, field)
    rels = [F.gen(i) * F.gen(j) + F.gen(j) * F.gen(i) - 1 for i in range(n) for j in range(i + 1, n)]
    pres = Presentation(F, rels, list(reversed(names)))
    return QuotientAlgebra(pres, bound, "W", {"n": n})


def sklyanin(a, b, c, bound: int = DEFAULT_BOUND, names=("x1", "x2", "x3"),
             field: CyclotomicField | None = None, order=None):
    """S(a,b,c): a x1x2 + b x2x1 + c x3^2 and its cyclic shifts."""
    F = FreeAlgebra(list(names), field)
    a, b, c = (F.field(v) for v in (a, b, c))
    x1, x2, x3 = F.gens()
    rels = [a * x1 * x2 + b * x2 * x1 + c * x3 * x3,
            a * x2 * x3 + b * x3 * x2 + c * x1 * x1,
            a * x3 * x1 + b * x1 * x3 + c * x2 * x2]
    pres = Presentation(F, rels, order)
    return QuotientAlgebra(pres, bound, "sklyanin", {"a": a, "b": b, "c": c})


def sklyanin_xyz_params(a, b, c, field: CyclotomicField):
    """(alpha, beta, gamma) = (c + z a + z^2 b, c + z^2 a + z b, c + a + b), z of order 3."""
    if field.m % 3:
        raise AlgebraError("the X, Y, Z generators need a primitive cube root of unity")
    z = field.root(field.m // 3)
    a, b, c = field(a), field(b), field(c)
    return c + z * a + z * z * b, c + z * z * a + z * b, c + a + b


def sklyanin_xyz(a, b, c, bound: int = DEFAULT_BOUND, field: CyclotomicField | None = None):
    """S(a,b,c) in the generators X = x1+z x2+z^2 x3, Y = x1+z^2 x2+z x3, Z = x1+x2+x3.

    In these generators it is again a Sklyanin algebra, with parameters
    from :func:`sklyanin_xyz_params`, and the cyclic permutation of the x_i
    acts diagonally.  Deglex order uses X > Y > Z.
    """
    field = field or CyclotomicField(3)
    al, be, ga = sklyanin_xyz_params(a, b, c, field)
    A = sklyanin(al, be, ga, bound, names=("X", "Y", "Z"), field=field, order=("X", "Y", "Z"))
    A.tag = "sklyanin-xyz"
    A.params = {"a": field(a), "b": field(b), "c": field(c), "alpha": al, "beta": be, "gamma": ga}
    return A


def sklyanin_generic(alpha, beta, gamma) -> bool:
    """alpha, beta, gamma and alpha^3 - beta^3 all nonzero."""
    return bool(alpha) and bool(beta) and bool(gamma) and bool(alpha ** 3 - beta ** 3)


def sklyanin_xyz_squares_quotient(a, b, c, bound: int = DEFAULT_BOUND,
                                  field: CyclotomicField | None = None) -> QuotientAlgebra:
    """S(alpha,beta,gamma) in X, Y, Z modulo X^2 and Y^2, order X > Y > Z."""
    field = field or CyclotomicField(3)
    al, be, ga = sklyanin_xyz_params(a, b, c, field)
    F = FreeAlgebra(["X", "Y", "Z"], field)
    X, Y, Z = F.gens()
    rels = [al * X * Y + be * Y * X + ga * Z * Z,
            al * Y * Z + be * Z * Y + ga * X * X,
            al * Z * X + be * X * Z + ga * Y * Y,
            X * X, Y * Y]
    pres = Presentation(F, rels, ["X", "Y", "Z"])
    return QuotientAlgebra(pres, bound, "sklyanin-xyz-squares",
                           {"a": field(a), "b": field(b), "c": field(c), "alpha": al, "beta": be, "gamma": ga})


def sklyanin_basis_change(a, b, c, field: CyclotomicField | None = None, scale=3) -> dict:
    """Differences F_i - scale*(combination of f_1, f_2, f_3) in the free algebra.

    f_i are the defining relations of S(a,b,c) in x1, x2, x3 and F_i those of
    S(alpha,beta,gamma) in X, Y, Z.  The combinations are f1+f2+f3,
    z f1+f2+z^2 f3 and z^2 f1+f2+z f3; with the parameters above all three
    differences vanish exactly for scale 3.
    """
    field = field or CyclotomicField(3)
    z = field.root(field.m // 3)
    F = FreeAlgebra(["x1", "x2", "x3"], field)
    x1, x2, x3 = F.gens()
    a, b, c = field(a), field(b), field(c)
    f1 = a * x1 * x2 + b * x2 * x1 + c * x3 * x3
    f2 = a * x2 * x3 + b * x3 * x2 + c * x1 * x1
    f3 = a * x3 * x1 + b * x1 * x3 + c * x2 * x2
    X = x1 + z * x2 + z * z * x3
    Y = x1 + z * z * x2 + z * x3
    Z = x1 + x2 + x3
    al, be, ga = sklyanin_xyz_params(a, b, c, field)
    G1 = al * X * Y + be * Y * X + ga * Z * Z
    G2 = al * Y * Z + be * Z * Y + ga * X * X
    G3 = al * Z * X + be * X * Z + ga * Y * Y
    k = field(scale)
    return {
        "F1": G1 - (f1 + f2 + f3) * k,
        "F2": G2 - (z * f1 + f2 + z * z * f3) * k,
        "F3": G3 - (z * z * f1 + f2 + z * f3) * k,
    }


def down_up(alpha, beta, bound: int = DEFAULT_BOUND, field: CyclotomicField | None = None):
    """A(alpha, beta): x^2y = alpha xyx + beta yx^2, xy^2 = alpha yxy + beta y^2x."""
    F = FreeAlgebra(["x", "y"], field)
    alpha, beta = F.field(alpha), F.field(beta)
    if not beta:
        raise AlgebraError("down-up algebras need beta != 0")
    x, y = F.gens()
    rels = [x * x * y - alpha * x * y * x - beta * y * x * x,
            x * y * y - alpha * y * x * y - beta * y * y * x]
    pres = Presentation(F, rels)
    return QuotientAlgebra(pres, bound, "downup", {"alpha": alpha, "beta": beta})


def preset(tag: str, bound: int = DEFAULT_BOUND, field: CyclotomicField | None = None, **params):
    tag_l = tag.lower()
    if tag_l in ("v", "vn", "skew"):
        return skew_polynomial(int(params["n"]), bound, field=field)
    if tag_l in ("w", "wn", "weyl"):
        return quantum_weyl(int(params["n"]), bound, field=field)
    if tag_l in ("sklyanin", "s"):
        kw = {k: params[k] for k in ("names", "order") if k in params}
        return sklyanin(params["a"], params["b"], params["c"], bound, field=field, **kw)
    if tag_l in ("sklyanin-xyz", "sklyanin_xyz"):
        return sklyanin_xyz(params["a"], params["b"], params["c"], bound, field=field)
    if tag_l in ("downup", "down-up", "a"):
        return down_up(params["alpha"], params["beta"], bound, field=field)
    raise AlgebraError(f"unknown preset {tag!r}")


def graded_basis(A: QuotientAlgebra, d: int):
    return A.graded_basis(d)


def hilbert_function(A: QuotientAlgebra, d: int) -> int:
    return A.hilbert_function(d)


def is_central(e: FreePoly, A: QuotientAlgebra, D: int | None = None) -> bool:
    return A.is_central(e, D)


# ---------------------------------------------------------------------------
# sign-twisted tensor products of (-1)-skew polynomial rings


def _vn_size(A: QuotientAlgebra) -> int:
    if A.tag not in ("V", "twisted-tensor"):
        raise AlgebraError("sign-twisted tensor needs (-1)-skew polynomial inputs")
    return A.ngens


def sign_twist_tensor(A: QuotientAlgebra, B: QuotientAlgebra, bound: int | None = None,
                      check_degree: int = 3) -> QuotientAlgebra:
    """A (x)_tau B with tau(b (x) a) = (-1)^{kl} a (x) b, realised as V_{n+m}.

    The witness maps A's generators to the first n and B's to the last m
    generators.  The isomorphism a (x) b -> a*b is checked on bases up to
    ``check_degree``: it must be bijective onto PBW words and multiplicative
    for the twisted product.
    """
    n, m = _vn_size(A), _vn_size(B)
    names_a, names_b = list(A.names), list(B.names)
    if set(names_a) & set(names_b):
        names = [f"x{i}" for i in range(1, n + m + 1)]
    else:
        names = names_a + names_b
    bound = bound if bound is not None else min(A.bound, B.bound)
    T = skew_polynomial(n + m, bound, names=names, field=A.field)
    T.tag = "twisted-tensor"
    T.params = {"n": n + m, "left": n, "right": m}
    T.witness = {**{a: names[i] for i, a in enumerate(names_a)},
                 **{b: names[n + j] for j, b in enumerate(names_b)}}
    _check_twist_iso(A, B, T, min(check_degree, bound))
    return T


def _embed(A, T, w, offset):
    return tuple(i + offset for i in w)


def _check_twist_iso(A, B, T, D):
    n = A.ngens
    F = T.free
    for d in range(D + 1):
        images = set()
        for k in range(d + 1):
            for a, b in product(A.graded_basis(k), B.graded_basis(d - k)):
                w = _embed(A, T, a, 0) + _embed(B, T, b, n)
                nf = T.nf_word(w)
                if len(nf) != 1:
                    raise AlgebraError("tensor basis element is not a PBW word")
                images.add(next(iter(nf)))
        if len(images) != T.hilbert_function(d):
            raise AlgebraError(f"twisted tensor basis mismatch in degree {d}")
    # multiplicativity on basis pairs: (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'
    for d1 in range(D + 1):
        for d2 in range(D + 1 - d1):
            for k1 in range(d1 + 1):
                for k2 in range(d2 + 1):
                    for a, b in product(A.graded_basis(k1), B.graded_basis(d1 - k1)):
                        for a2, b2 in product(A.graded_basis(k2), B.graded_basis(d2 - k2)):
                            sign = -1 if (len(b) * len(a2)) % 2 else 1
                            lhs = T.nf(F.word(_embed(A, T, a, 0) + _embed(B, T, b, n))
                                       * F.word(_embed(A, T, a2, 0) + _embed(B, T, b2, n)))
                            aa = A.nf_word(a + a2)
                            bb = B.nf_word(b + b2)
                            rhs = F.zero()
                            for u, cu in aa.items():
                                for v, cv in bb.items():
                                    rhs = rhs + F.word(_embed(A, T, u, 0) + _embed(B, T, v, n)) * (cu * cv * sign)
                            if T.nf(rhs) != lhs:
                                raise AlgebraError("twisted product disagrees with V_{n+m}")


def vn_dimension(n: int, d: int) -> int:
    return comb(n + d - 1, d)
