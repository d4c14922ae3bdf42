"""Skew group algebras A#G, the ideal (f_G) and its intersection with A.

Multiplication is (a#g)(b#h) = a g(b) # gh.  The degree-d piece of the ideal
generated by f_G = sum_g 1#g is tracked from the quotient side: we keep a
projection pi_d of (A#G)_d onto Q_d = (A#G)_d / (f_G)_d, built recursively
from the identity (f_G)_d = A_1 (f_G)_{d-1} + f_G A_d.  An element lies in the
ideal exactly when its projection vanishes, and (f_G) ∩ A in degree d is the
kernel of pi_d on A_d#e.  A direct sandwich-span computation is kept as an
independent cross-check and as the source of explicit certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .action import ActionGroup
from .algebra import QuotientAlgebra
from .freealg import FreePoly
from .rewrite import DegreeBoundError
from .scalar import Echelon, ONE


class SkewError(ValueError):
    pass


def _acc(target: dict, key, value):
    v = target.get(key, 0) + value
    if v:
        target[key] = v
    else:
        target.pop(key, None)


class SkewElement:
    """Finitely supported map (normal word, group index) -> scalar."""

    __slots__ = ("S", "terms")

    def __init__(self, S: "SkewAlgebra", terms: dict | None = None):
        self.S = S
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def _lift(self, other):
        if isinstance(other, SkewElement):
            if other.S is not self.S:
                raise SkewError("elements of different skew algebras")
            return other
        if isinstance(other, FreePoly):
            return self.S.embed(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            o = self.S.embed(self.S.A.free.scalar(other))
        t = dict(self.terms)
        for k, c in o.terms.items():
            _acc(t, k, c)
        return SkewElement(self.S, t)

    __radd__ = __add__

    def __neg__(self):
        return SkewElement(self.S, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, (SkewElement, FreePoly)) else -self.S.A.field(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            c = self.S.A.field(other)
            return SkewElement(self.S, {k: v * c for k, v in self.terms.items()})
        return self.S.mul(self, o)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return self * other
        return self.S.mul(o, self)

    def __truediv__(self, other):
        return self * (1 / self.S.A.field(other))

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, SkewElement) else other
        if o is None:
            if not self.S.A.field(other) and not self.terms:
                return True
            o = self.S.embed(self.S.A.free.scalar(other))
        return self.S is o.S and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def component(self, g: int) -> FreePoly:
        return FreePoly(self.S.A.free, {w: c for (w, h), c in self.terms.items() if h == g})

    def identity_component(self) -> FreePoly:
        return self.component(self.S.G.identity)

    def support_groups(self) -> list[int]:
        return sorted({h for _, h in self.terms})

    def in_A(self) -> bool:
        """True when only the identity component is nonzero."""
        return all(h == self.S.G.identity for _, h in self.terms)

    def degrees(self) -> set[int]:
        return {len(w) for w, _ in self.terms}

    def degree(self) -> int:
        return max((len(w) for w, _ in self.terms), default=-1)

    def homogeneous_parts(self) -> dict:
        out: dict = {}
        for (w, g), c in self.terms.items():
            out.setdefault(len(w), {})[(w, g)] = c
        return {d: SkewElement(self.S, t) for d, t in sorted(out.items())}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for g in self.S.order_for_display():
            comp = self.component(g)
            if comp:
                parts.append(f"({comp})#{self.S.G[g].label}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SkewElement({self})"

    def to_json(self) -> dict:
        return {self.S.G[g].label: str(self.component(g)) for g in self.S.order_for_display()
                if self.component(g)}


class SkewAlgebra:
    """A#G for a quotient algebra A and a finite group of graded automorphisms."""

    def __init__(self, A: QuotientAlgebra, G: ActionGroup):
        if G.A is not A:
            raise SkewError("group does not act on this algebra")
        self.A = A
        self.G = G
        self._slices: "IdealSlices | None" = None

    def __repr__(self):
        return f"SkewAlgebra({self.A.tag}, |G|={len(self.G)})"

    def order_for_display(self) -> list[int]:
        e = self.G.identity
        return [e] + [g for g in range(len(self.G)) if g != e]

    # -- construction
    def embed(self, a: FreePoly, g: int | None = None) -> SkewElement:
        """nf(a) # g (identity by default)."""
        a = self.A.free(a)
        g = self.G.identity if g is None else g
        return SkewElement(self, {(w, g): c for w, c in self.A.nf(a).terms.items()})

    def group_element(self, g: int) -> SkewElement:
        return SkewElement(self, {((), g): self.A.field.one})

    def fG(self) -> SkewElement:
        one = self.A.field.one
        return SkewElement(self, {((), g): one for g in range(len(self.G))})

    def zero(self) -> SkewElement:
        return SkewElement(self, {})

    def parse(self, text: str) -> SkewElement:
        return self.embed(self.A.free.parse(text))

    # -- arithmetic
    def mul(self, u: SkewElement, v: SkewElement) -> SkewElement:
        A, G = self.A, self.G
        bound = A.bound
        if u.degree() + v.degree() > bound:
            raise DegreeBoundError(f"product degree exceeds completion bound {bound}")
        out: dict = {}
        for (a, g), c in u.terms.items():
            act = G[g]
            for (b, h), d in v.terms.items():
                gh = G.table[g][h]
                cd = c * d
                for u2, e in act.image_word(b).items():
                    for w, k in A.nf_word(a + u2).items():
                        _acc(out, (w, gh), cd * e * k)
        return SkewElement(self, out)

    def sandwich(self, a, b) -> SkewElement:
        """(a#e) f_G (b#e) = sum_g a g(b) # g."""
        a, b = self.A.nf(self.A.free(a)), self.A.nf(self.A.free(b))
        out: dict = {}
        for g, act in enumerate(self.G):
            for bw, bc in b.terms.items():
                for u2, e in act.image_word(bw).items():
                    for aw, ac in a.terms.items():
                        for w, k in self.A.nf_word(aw + u2).items():
                            _acc(out, (w, g), ac * bc * e * k)
        return SkewElement(self, out)

    # -- the ideal (f_G)
    @property
    def slices(self) -> "IdealSlices":
        if self._slices is None:
            self._slices = IdealSlices(self)
        return self._slices


def skew_mul(u: SkewElement, v: SkewElement) -> SkewElement:
    return u.S.mul(u, v)


def make_fG(S: SkewAlgebra) -> SkewElement:
    return S.fG()


# ---------------------------------------------------------------------------
# quotient-side recursion


@dataclass
class _Level:
    dim: int                       # dim Q_d
    proj: dict                     # (word, g) -> sparse vector over Q_d
    A_rank: int = -1               # dim of image of A_d#e


@dataclass
class IdealSlice:
    """Degree-d data of (f_G) and (f_G) ∩ A."""

    degree: int
    dim_A: int
    group_order: int
    ideal_dim: int                 # dim (f_G)_d
    quotient_dim: int              # dim (A/((f_G) ∩ A))_d
    intersection: list = field(default_factory=list)  # basis of ((f_G) ∩ A)_d as FreePolys

    @property
    def intersection_dim(self) -> int:
        return self.dim_A - self.quotient_dim


class IdealSlices:
    """Per-degree projections onto (A#G)/(f_G), computed on demand."""

    def __init__(self, S: SkewAlgebra):
        A = S.A
        if not A.graded:
            raise SkewError("ideal slices need a graded algebra; filtered presentations are rejected")
        self.S = S
        self.A = A
        self.G = S.G
        self.levels: dict[int, _Level] = {}
        self._kernels: dict[int, list] = {}

    def _lift(self, w: tuple, g: int) -> dict:
        """Coordinates of x_{w0} (x) pi_{d-1}(w[1:]#g) in A_1 (x) Q_{d-1}."""
        if not w:
            return {g: ONE}
        prev = self.level(len(w) - 1)
        q = prev.dim
        base = w[0] * q
        return {base + j: c for j, c in prev.proj.get((w[1:], g), {}).items()}

    def _lift_poly(self, terms: dict, g: int, out: dict, scale=ONE):
        for w, c in terms.items():
            for k, v in self._lift(w, g).items():
                _acc(out, k, scale * c * v)

    def level(self, d: int) -> _Level:
        if d in self.levels:
            return self.levels[d]
        if d > self.A.bound:
            raise DegreeBoundError(f"degree {d} exceeds completion bound {self.A.bound}")
        for k in range(d):
            if k not in self.levels:
                self.level(k)
        if d > 0 and self.levels[d - 1].dim == 0:
            lev = _Level(0, {})
            self.levels[d] = lev
            return lev
        A, G = self.A, self.G
        basis = A.graded_basis(d)
        E = Echelon()
        if d == 0:
            E.add({g: ONE for g in range(len(G))})
        else:
            prev = self.level(d - 1)
            q = prev.dim
            # kernel of A_1 (x) (A#G)_{d-1} -> (A#G)_d, pushed through pi_{d-1}
            for v in A.graded_basis(d - 1):
                for i in range(A.ngens):
                    nf = A.nf_word((i,) + v)
                    if len(nf) == 1 and nf.get((i,) + v) == 1:
                        continue
                    for g in range(len(G)):
                        vec: dict = {}
                        for j, c in prev.proj.get((v, g), {}).items():
                            _acc(vec, i * q + j, c)
                        self._lift_poly(nf, g, vec, -ONE)
                        if vec:
                            E.add(vec)
            # f_G A_d
            for b in basis:
                vec = {}
                for g, act in enumerate(G):
                    self._lift_poly(act.image_word(b), g, vec)
                if vec:
                    E.add(vec)
        free_cols = self._free_columns(E, d)
        pos = {c: k for k, c in enumerate(free_cols)}
        proj = {}
        for w in basis:
            for g in range(len(G)):
                rem, _ = E.reduce(self._lift(w, g))
                if rem:
                    proj[(w, g)] = {pos[c]: v for c, v in rem.items()}
        lev = _Level(len(free_cols), proj)
        self.levels[d] = lev
        return lev

    def _free_columns(self, E: Echelon, d: int) -> list[int]:
        ncols = len(self.G) if d == 0 else self.A.ngens * self.levels[d - 1].dim
        return [c for c in range(ncols) if c not in E.pivots]

    def project(self, u: SkewElement) -> dict:
        """pi(u) for a homogeneous u."""
        ds = u.degrees()
        if len(ds) > 1:
            raise SkewError("project needs a homogeneous element")
        if not ds:
            return {}
        lev = self.level(ds.pop())
        out: dict = {}
        for k, c in u.terms.items():
            for j, v in lev.proj.get(k, {}).items():
                _acc(out, j, c * v)
        return out

    def contains(self, u: SkewElement) -> bool:
        return all(not self.project(p) for p in u.homogeneous_parts().values())

    def _kernel_on_A(self, d: int) -> list:
        if d in self._kernels:
            return self._kernels[d]
        lev = self.level(d)
        e = self.G.identity
        E = Echelon(track=True)
        kernel = []
        for k, w in enumerate(self.A.graded_basis(d)):
            vec = lev.proj.get((w, e), {})
            row, combo = E.reduce(vec, {k: ONE})
            if row:
                E.add(vec, k)
            else:
                kernel.append(combo)
        basis = self.A.graded_basis(d)
        polys = [FreePoly(self.A.free, {basis[k]: c for k, c in combo.items()}) for combo in kernel]
        lev.A_rank = len(basis) - len(polys)
        self._kernels[d] = polys
        return polys

    def quotient_dim(self, d: int) -> int:
        """dim (A/((f_G) ∩ A))_d."""
        lev = self.level(d)
        if lev.dim == 0:
            return 0
        if lev.A_rank < 0:
            self._kernel_on_A(d)
        return lev.A_rank

    def slice(self, d: int, with_basis: bool = True) -> IdealSlice:
        lev = self.level(d)
        dimA = self.A.hilbert_function(d)
        inter = []
        if lev.dim == 0:
            inter = [self.A.free.word(w) for w in self.A.graded_basis(d)] if with_basis else []
            qd = 0
        else:
            inter = self._kernel_on_A(d) if with_basis else []
            qd = self.quotient_dim(d)
        total = dimA * len(self.G)
        return IdealSlice(d, dimA, len(self.G), total - lev.dim, qd, inter)


def ideal_slice(S: SkewAlgebra, d: int) -> IdealSlice:
    return S.slices.slice(d)


def quotient_dims(S: SkewAlgebra, D: int) -> list[int]:
    return [S.slices.quotient_dim(d) for d in range(D + 1)]


def quotient_skew_dims(S: SkewAlgebra, D: int) -> list[int]:
    """dim ((A#G)/(f_G))_d for d = 0..D."""
    return [S.slices.level(d).dim for d in range(D + 1)]


# ---------------------------------------------------------------------------
# membership


@dataclass
class Membership:
    member: bool
    degrees: list
    certificate: list | None = None   # [(coeff, left word, right word)]
    note: str = ""

    def to_json(self, S: SkewAlgebra | None = None) -> dict:
        out = {"member": self.member, "degrees": self.degrees, "note": self.note}
        if self.certificate is not None and S is not None:
            F = S.A.field
            ws = S.A.free.word_str
            out["certificate"] = [{"coeff": F.format(c), "left": ws(a), "right": ws(b)}
                                  for c, a, b in self.certificate]
        return out


def _as_skew(S: SkewAlgebra, target) -> SkewElement:
    if isinstance(target, SkewElement):
        return target
    if isinstance(target, str):
        return S.parse(target)
    return S.embed(target)


def is_member(target, S: SkewAlgebra, certificate: bool = False, cert_limit: int = 2500) -> Membership:
    """Decide target ∈ (f_G) degree by degree.

    With ``certificate`` the target is also written explicitly as a sum of
    sandwiches c (a#e) f_G (b#e); this enumerates all word pairs, so it is
    refused when a degree has more than ``cert_limit`` pairs.
    """
    u = _as_skew(S, target)
    if u.degree() > S.A.bound:
        raise DegreeBoundError(f"degree {u.degree()} exceeds completion bound {S.A.bound}")
    parts = u.homogeneous_parts()
    ok = all(not S.slices.project(p) for p in parts.values())
    res = Membership(ok, sorted(parts))
    if ok and certificate:
        cert = []
        for d, p in parts.items():
            c = sandwich_certificate(S, p, cert_limit)
            if c is None:
                raise SkewError("direct sandwich span disagrees with the quotient projection")
            cert.extend(c)
        res.certificate = cert
    if not ok:
        res.note = "not in the degree slice of the ideal (exact for this degree)"
    return res


def _sandwich_pairs(S: SkewAlgebra, d: int):
    A = S.A
    for k in range(d + 1):
        for a in A.graded_basis(k):
            for b in A.graded_basis(d - k):
                yield a, b


def _coords(S: SkewAlgebra, u: SkewElement, d: int) -> dict:
    """Coordinates in (A#G)_d with the identity block last."""
    idx = S.A.basis_index(d)
    n = len(idx)
    order = [g for g in range(len(S.G)) if g != S.G.identity] + [S.G.identity]
    block = {g: k for k, g in enumerate(order)}
    return {block[g] * n + idx[w]: c for (w, g), c in u.terms.items()}


def sandwich_certificate(S: SkewAlgebra, u: SkewElement, limit: int = 2500):
    """Express homogeneous u as sum c (a#e) f (b#e); None if not in the span."""
    ds = u.degrees()
    if not ds:
        return []
    d = ds.pop()
    pairs = list(_sandwich_pairs(S, d))
    if len(pairs) > limit:
        raise SkewError(f"{len(pairs)} sandwich pairs in degree {d} exceed the certificate limit {limit}")
    F = S.A.free
    E = Echelon(track=True)
    for k, (a, b) in enumerate(pairs):
        E.add(_coords(S, S.sandwich(F.word(a), F.word(b)), d), k)
    combo = E.express(_coords(S, u, d))
    if combo is None:
        return None
    cert = [(c, pairs[k][0], pairs[k][1]) for k, c in sorted(combo.items())]
    # replay
    acc = S.zero()
    for c, a, b in cert:
        acc = acc + S.sandwich(F.word(a), F.word(b)) * c
    if acc != u:
        raise SkewError("certificate replay failed")
    return cert


def direct_slice_dims(S: SkewAlgebra, d: int) -> tuple[int, int]:
    """(dim (f_G)_d, dim ((f_G) ∩ A)_d) from the sandwich span itself.

    Rows are eliminated with the identity block last, so rows whose pivot
    lands in that block span the intersection with A.  Independent of the
    quotient recursion; used to cross-check it on small cases.
    """
    F = S.A.free
    E = Echelon()
    for a, b in _sandwich_pairs(S, d):
        E.add(_coords(S, S.sandwich(F.word(a), F.word(b)), d))
    n = S.A.hilbert_function(d)
    start = (len(S.G) - 1) * n
    return len(E), sum(1 for c in E.pivots if c >= start)
