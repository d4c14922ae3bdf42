"""Graded automorphisms given by matrices on degree-one generators, and the
finite groups they generate.

Matrix convention: row i lists the image of generator i, so
``g(x_i) = sum_j M[i][j] x_j``.  Composition ``g*h`` means "apply h, then g".
"""

from __future__ import annotations

import re
from collections import deque

from .algebra import QuotientAlgebra
from .freealg import FreePoly
from .scalar import Matrix, ZERO, ONE

DEFAULT_CAP = 10000


class ActionError(ValueError):
    pass


class GradedAutomorphism:
    def __init__(self, matrix, A: QuotientAlgebra, label: str | None = None, check: bool = True):
        F = A.field
        rows = matrix.rows if isinstance(matrix, Matrix) else matrix
        n = A.ngens
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ActionError(f"matrix must be {n}x{n}")
        self.A = A
        self.rows = tuple(tuple(F(x) for x in r) for r in rows)
        self.label = label or _auto_label(self.rows)
        self._img = {}
        self._monomial = all(sum(1 for x in r if x) == 1 for r in self.rows)
        self._perm = [next(j for j, x in enumerate(r) if x) for r in self.rows] if self._monomial else None
        self._scale = [r[p] for r, p in zip(self.rows, self._perm)] if self._monomial else None
        self._gen_images = [FreePoly(A.free, {(j,): x for j, x in enumerate(r) if x}) for r in self.rows]
        if check:
            self.validate()

    @property
    def matrix(self) -> Matrix:
        return Matrix([list(r) for r in self.rows])

    def key(self):
        return self.rows

    def __eq__(self, other):
        return isinstance(other, GradedAutomorphism) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"GradedAutomorphism({self.label})"

    def validate(self):
        if self.matrix.rank() != len(self.rows):
            raise ActionError(f"{self.label}: singular matrix")
        for r in self.A.relations():
            img = self.A.nf(self.apply_free(r))
            if img:
                raise ActionError(f"{self.label}: relation {r} maps to {img}, not 0")

    def apply_free(self, p: FreePoly) -> FreePoly:
        """Substitute generator images without reducing."""
        out = p.alg.zero()
        for w, c in p.terms.items():
            t = p.alg.scalar(c)
            for i in w:
                t = t * self._gen_images[i]
            out = out + t
        return out

    def image_word(self, w) -> dict:
        """Normal form of g(w) for a word w, as a dict."""
        w = tuple(w)
        hit = self._img.get(w)
        if hit is not None:
            return hit
        if self._monomial:
            c = ONE if self.A.field.rational else self.A.field.one
            for i in w:
                c = c * self._scale[i]
            u = tuple(self._perm[i] for i in w)
            out = {k: v * c for k, v in self.A.nf_word(u).items()}
        else:
            out = self.A.nf(self.apply_free(self.A.free.word(w))).terms
        self._img[w] = out
        return out

    def act(self, p: FreePoly) -> FreePoly:
        acc: dict = {}
        for w, c in p.terms.items():
            for u, d in self.image_word(w).items():
                v = acc.get(u, 0) + c * d
                if v:
                    acc[u] = v
                else:
                    acc.pop(u, None)
        return FreePoly(p.alg, acc)

    def compose(self, other: "GradedAutomorphism") -> "GradedAutomorphism":
        """self * other: apply other first."""
        prod = other.matrix * self.matrix
        return GradedAutomorphism(prod, self.A, check=False)

    def trace(self):
        acc = self.A.field.zero
        for i, r in enumerate(self.rows):
            acc = acc + r[i]
        return acc


def _auto_label(rows) -> str:
    n = len(rows)
    if all(rows[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n)):
        return "e"
    support = [[j for j, x in enumerate(r) if x] for r in rows]
    if all(len(s) == 1 for s in support):
        perm = [s[0] for s in support]
        if all(rows[i][perm[i]] == 1 for i in range(n)):
            return cycle_string(perm)
        if perm == list(range(n)):
            return "diag(" + ", ".join(str(rows[i][i]) for i in range(n)) + ")"
    return "[" + "; ".join(" ".join(str(x) for x in r) for r in rows) + "]"


def cycle_string(perm) -> str:
    """Cycle notation (1-based) for a 0-based image list."""
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen or perm[s] == s:
            continue
        cyc, k = [], s
        while k not in seen:
            seen.add(k)
            cyc.append(str(k + 1))
            k = perm[k]
        out.append("(" + " ".join(cyc) + ")")
    return "".join(out) or "e"


def automorphism_from_matrix(M, A: QuotientAlgebra, label: str | None = None) -> GradedAutomorphism:
    return GradedAutomorphism(M, A, label)


def identity(A: QuotientAlgebra) -> GradedAutomorphism:
    n = A.ngens
    return GradedAutomorphism([[1 if i == j else 0 for j in range(n)] for i in range(n)], A, "e", check=False)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> list[int]:
    """Parse cycle notation like ``(1 2)(3 4)`` into a 0-based image list."""
    perm = list(range(n))
    text = text.strip()
    if text in ("", "()", "e", "id"):
        return perm
    pos = 0
    for m in _CYCLE.finditer(text):
        if text[pos:m.start()].strip():
            raise ActionError(f"malformed cycle notation at column {pos + 1}")
        pos = m.end()
        pts = [int(t) for t in m.group(1).replace(",", " ").split()]
        if len(set(pts)) != len(pts) or any(p < 1 or p > n for p in pts):
            raise ActionError(f"bad cycle ({m.group(1)}) for n={n}")
        cyc = [p - 1 for p in pts]
        new = list(range(n))
        for k, p in enumerate(cyc):
            new[p] = cyc[(k + 1) % len(cyc)]
        # cycles written left to right compose right to left
        perm = [perm[new[i]] for i in range(n)]
    if text[pos:].strip():
        raise ActionError(f"malformed cycle notation at column {pos + 1}")
    return perm


def permutation(spec, A: QuotientAlgebra, label: str | None = None) -> GradedAutomorphism:
    """sigma(x_i) = x_sigma(i); spec is cycle notation or a 0-based image list."""
    n = A.ngens
    if isinstance(spec, str):
        perm = parse_cycles(spec, n)
        label = label or spec
    else:
        perm = list(spec)
    rows = [[ONE if j == perm[i] else ZERO for j in range(n)] for i in range(n)]
    return GradedAutomorphism(rows, A, label)


def weighted_permutation(spec: str, weights, A: QuotientAlgebra, label: str | None = None):
    """x_i -> w_i x_sigma(i)."""
    n = A.ngens
    perm = parse_cycles(spec, n)
    F = A.field
    rows = [[F(weights[i]) if j == perm[i] else ZERO for j in range(n)] for i in range(n)]
    return GradedAutomorphism(rows, A, label)


def diagonal(entries, A: QuotientAlgebra, label: str | None = None):
    n = A.ngens
    rows = [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return GradedAutomorphism(rows, A, label)


class ActionGroup:
    """A finite group of graded automorphisms with its multiplication table."""

    def __init__(self, elements: list, A: QuotientAlgebra, name: str = "G"):
        self.A = A
        self.elements = list(elements)
        self.name = name
        self.index = {g.key(): k for k, g in enumerate(self.elements)}
        n = len(self.elements)
        self.table = [[self.index[self.elements[a].compose(self.elements[b]).key()] for b in range(n)]
                      for a in range(n)]
        self.identity = next(k for k, g in enumerate(self.elements) if g.label == "e" or _is_id(g))
        self.inverse = [next(b for b in range(n) if self.table[a][b] == self.identity) for a in range(n)]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k) -> GradedAutomorphism:
        return self.elements[k]

    def __repr__(self):
        return f"ActionGroup({self.name}, order={len(self)})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def find(self, g: GradedAutomorphism) -> int | None:
        return self.index.get(g.key())

    def contains_group(self, H: "ActionGroup") -> bool:
        return all(self.find(h) is not None for h in H)

    def labels(self) -> list[str]:
        return [g.label for g in self.elements]


def _is_id(g: GradedAutomorphism) -> bool:
    return _auto_label(g.rows) == "e"


def group_closure(gens: list, A: QuotientAlgebra | None = None, cap: int = DEFAULT_CAP,
                  name: str = "G") -> ActionGroup:
    """Close a list of automorphisms under composition (identity first, BFS order)."""
    if not gens:
        raise ActionError("need at least one generator")
    A = A or gens[0].A
    if any(g.A is not A for g in gens):
        raise ActionError("generators act on different algebras")
    e = identity(A)
    elems = [e]
    seen = {e.key(): e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g.compose(s)
            k = h.key()
            if k not in seen:
                if s.label != _auto_label(s.rows) and g is e:
                    h.label = s.label
                seen[k] = h
                elems.append(h)
                queue.append(h)
                if len(elems) > cap:
                    raise ActionError(f"group closure exceeded cap {cap}; group is likely infinite")
    return ActionGroup(elems, A, name)


def act(g: GradedAutomorphism, p: FreePoly) -> FreePoly:
    return g.act(p)


def product_action(G: ActionGroup, H: ActionGroup, T: QuotientAlgebra, name: str | None = None) -> ActionGroup:
    """G x H acting block-diagonally on the sign-twisted tensor T = A (x)_tau B.

    Each block-diagonal matrix is validated against the relations of T.
    """
    n, m = G.A.ngens, H.A.ngens
    if T.ngens != n + m:
        raise ActionError("tensor algebra has the wrong number of generators")
    elems = []
    for g in G:
        for h in H:
            rows = [[ZERO] * (n + m) for _ in range(n + m)]
            for i in range(n):
                for j in range(n):
                    rows[i][j] = g.rows[i][j]
            for i in range(m):
                for j in range(m):
                    rows[n + i][n + j] = h.rows[i][j]
            lab = "e" if g.label == "e" and h.label == "e" else f"({g.label},{h.label})"
            elems.append(GradedAutomorphism(rows, T, lab))
    return ActionGroup(elems, T, name or f"{G.name}x{H.name}")

