"""Degree-truncated noncommutative Groebner completion (diamond lemma) and
normal forms.

Words are ordered degree-lexicographically; a generator precedence list
fixes which letter is biggest (default: declaration order, first biggest).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

from .freealg import FreeAlgebra, FreePoly
from .scalar import inv


class RewriteError(Exception):
    pass


class DegreeBoundError(RewriteError):
    pass


class Presentation:
    """Generators, relations and a monomial order."""

    def __init__(self, alg: FreeAlgebra, relations: Sequence, order: Sequence[str] | None = None):
        self.alg = alg
        self.relations = [alg(r) if not isinstance(r, FreePoly) else r for r in relations]
        for r in self.relations:
            if r.alg != alg:
                raise ValueError("relation over a different free algebra")
        names = list(order) if order is not None else list(alg.names)
        if sorted(names) != sorted(alg.names):
            raise ValueError("order must list every generator exactly once")
        self.order = tuple(names)
        self.rank = {alg.index[n]: k for k, n in enumerate(names)}
        self.graded = all(r.homogeneous_degree() is not None for r in self.relations if r)

    def key(self, w):
        return (len(w), tuple(-self.rank[i] for i in w))

    def lead(self, p: FreePoly):
        if not p:
            raise ValueError("zero polynomial has no lead word")
        return max(p.terms, key=self.key)

    def __repr__(self):
        rel = ", ".join(str(r) for r in self.relations)
        return f"Presentation({list(self.alg.names)}; {rel}; order {' > '.join(self.order)})"


@dataclass
class Overlap:
    word: tuple
    left: tuple   # lead word reduced first on the left path
    right: tuple
    spoly: str
    outcome: str  # "resolved" or "new rule <lead>"


@dataclass
class RewriteSystem:
    presentation: Presentation
    rules: dict
    bound: int
    certificate: list = field(default_factory=list)
    _memo: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._lengths = sorted({len(l) for l in self.rules})

    @property
    def alg(self) -> FreeAlgebra:
        return self.presentation.alg

    def leads(self) -> list[tuple]:
        return sorted(self.rules, key=self.presentation.key)

    def is_reducible(self, w) -> bool:
        return self._find(w) is not None

    def _find(self, w):
        rules = self.rules
        n = len(w)
        for s in range(n):
            for L in self._lengths:
                if s + L > n:
                    break
                if w[s:s + L] in rules:
                    return s, L
        return None

    def nf_word(self, w) -> dict:
        """Normal form of a single word as a dict word -> coefficient."""
        w = tuple(w)
        if len(w) > self.bound:
            raise DegreeBoundError(f"degree {len(w)} exceeds completion bound {self.bound}")
        memo = self._memo
        hit = memo.get(w)
        if hit is not None:
            return hit
        # iterative stack to avoid deep recursion
        stack = [w]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            loc = self._find(cur)
            if loc is None:
                memo[cur] = {cur: self.alg.field.one}
                stack.pop()
                continue
            s, L = loc
            tail = self.rules[cur[s:s + L]]
            pre, post = cur[:s], cur[s + L:]
            pending = []
            for t in tail.terms:
                nw = pre + t + post
                if nw not in memo:
                    pending.append(nw)
            if pending:
                if len(stack) > 100000:
                    raise RewriteError("reduction does not terminate (cycle?)")
                stack.extend(pending)
                continue
            acc: dict = {}
            for t, c in tail.terms.items():
                for u, d in memo[pre + t + post].items():
                    v = acc.get(u, 0) + c * d
                    if v:
                        acc[u] = v
                    else:
                        acc.pop(u, None)
            memo[cur] = acc
            stack.pop()
        return memo[w]

    def normal_form(self, p: FreePoly) -> FreePoly:
        if p.alg != self.alg:
            raise ValueError("polynomial over a different free algebra")
        acc: dict = {}
        for w, c in p.terms.items():
            for u, d in self.nf_word(w).items():
                v = acc.get(u, 0) + c * d
                if v:
                    acc[u] = v
                else:
                    acc.pop(u, None)
        return FreePoly(self.alg, acc)

    def irreducible_words(self, d: int) -> list[tuple]:
        """Irreducible words of length d, in decreasing monomial order."""
        if d > self.bound:
            raise DegreeBoundError(f"degree {d} exceeds completion bound {self.bound}")
        layer = [()]
        for k in range(d):
            nxt = []
            for w in layer:
                for i in range(self.alg.ngens):
                    u = w + (i,)
                    # only suffixes can newly match
                    if not any(u[len(u) - L:] in self.rules for L in self._lengths if L <= len(u)):
                        nxt.append(u)
            layer = nxt
        return sorted(layer, key=self.presentation.key, reverse=True)

    def step_log(self) -> list[str]:
        out = []
        ws = self.alg.word_str
        for o in self.certificate:
            out.append(f"overlap {ws(o.word)} [{ws(o.left)} | {ws(o.right)}]: {o.spoly} -> {o.outcome}")
        return out

    def audit(self) -> bool:
        """Recheck every recorded overlap by reducing along both rules."""
        for o in self.certificate:
            w = o.word
            a = _apply_at(self, w, o.left, first=True)
            b = _apply_at(self, w, o.right, first=False)
            if self.normal_form(a) != self.normal_form(b):
                return False
        return True


def _apply_at(R: RewriteSystem, w, lead, first: bool) -> FreePoly:
    # rewrite one occurrence of lead in w (leftmost if first else rightmost)
    L = len(lead)
    spots = [s for s in range(len(w) - L + 1) if w[s:s + L] == lead]
    s = spots[0] if first else spots[-1]
    tail = R.rules[lead]
    return FreePoly(R.alg, {w[:s] + t + w[s + L:]: c for t, c in tail.terms.items()})


def _monic(pres: Presentation, p: FreePoly):
    lw = pres.lead(p)
    c = p.terms[lw]
    ic = inv(c)
    tail = FreePoly(p.alg, {w: -v * ic for w, v in p.terms.items() if w != lw})
    return lw, tail


def _overlaps(a: tuple, b: tuple):
    """Proper overlaps where a suffix of a equals a prefix of b."""
    out = []
    for k in range(1, min(len(a), len(b))):
        if a[len(a) - k:] == b[:k]:
            out.append(k)
    return out


def complete(pres: Presentation, bound: int, max_steps: int = 200000) -> RewriteSystem:
    """Buchberger completion restricted to overlaps of degree <= bound."""
    if not pres.graded:
        for r in pres.relations:
            lw = pres.lead(r)
            if any(len(w) > len(lw) for w in r.terms):
                raise RewriteError("tail degree exceeds lead degree")
    R = RewriteSystem(pres, {}, bound)
    queue: list = []  # (degree, counter, kind, payload)
    counter = 0

    def push_pair(a, b):
        nonlocal counter
        for k in _overlaps(a, b):
            w = a + b[k:]
            if len(w) <= bound:
                heapq.heappush(queue, (len(w), counter, "pair", (a, b, k)))
                counter += 1

    def insert(p: FreePoly, origin: Overlap | None = None):
        p = R.normal_form(p)
        if not p:
            return None
        lw, tail = _monic(pres, p)
        if pres.graded and p.homogeneous_degree() is None:
            raise RewriteError("inhomogeneous element in graded mode")
        # interreduce: drop rules whose lead contains lw
        removed = [l for l in R.rules if _contains(l, lw)]
        for l in removed:
            t = R.rules.pop(l)
            heapq.heappush(queue, (len(l), counter_next(), "poly", R.alg.word(l) - t))
        R.rules[lw] = tail
        R._lengths = sorted({len(l) for l in R.rules})
        R._memo.clear()
        for l in list(R.rules):
            push_pair(l, lw)
            if l != lw:
                push_pair(lw, l)
        return lw

    def counter_next():
        nonlocal counter
        counter += 1
        return counter

    for r in pres.relations:
        if r:
            heapq.heappush(queue, (r.degree(), counter_next(), "poly", r))

    steps = 0
    while queue:
        steps += 1
        if steps > max_steps:
            raise RewriteError("completion did not stabilise within the step budget")
        deg, _, kind, payload = heapq.heappop(queue)
        if kind == "poly":
            insert(payload)
            continue
        a, b, k = payload
        if a not in R.rules or b not in R.rules:
            continue
        w = a + b[k:]
        left = R.rules[a] * R.alg.word(b[k:])
        right = R.alg.word(a[:len(a) - k]) * R.rules[b]
        s = left - right
        red = R.normal_form(s)
        rec = Overlap(w, a, b, str(s), "resolved")
        R.certificate.append(rec)
        if red:
            lw = insert(red)
            rec.outcome = f"new rule {R.alg.word_str(lw)}"
    # tidy tails
    R._memo.clear()
    for l in list(R.rules):
        R.rules[l] = R.normal_form(R.rules[l])
    R._memo.clear()
    return R


def _contains(big: tuple, small: tuple) -> bool:
    L = len(small)
    return any(big[s:s + L] == small for s in range(len(big) - L + 1))


def normal_form(p: FreePoly, R: RewriteSystem) -> FreePoly:
    return R.normal_form(p)


def parse_presentation(text: str) -> Presentation:
    """Read the plain-text presentation format::

        field: 3
        generators: X Y Z
        params: a = 1, b = 2
        order: X > Y > Z
        relations:
          a*X*Y + b*Y*X
          ...
    """
    from .scalar import CyclotomicField

    m = 1
    gens: list[str] = []
    params: dict = {}
    order = None
    rel_lines: list[tuple[int, str]] = []
    in_rel = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        head, sep, rest = line.partition(":")
        key = head.strip().lower()
        if sep and key in {"field", "generators", "params", "order", "relations"} and not raw[:1].isspace():
            in_rel = key == "relations"
            if key == "field":
                m = int(rest)
            elif key == "generators":
                gens = rest.replace(",", " ").split()
            elif key == "params":
                for item in filter(None, (s.strip() for s in rest.split(","))):
                    k, _, v = item.partition("=")
                    params[k.strip()] = v.strip()
            elif key == "order":
                order = [s.strip() for s in rest.split(">")]
            elif key == "relations" and rest.strip():
                rel_lines.append((lineno, rest.strip()))
            continue
        if in_rel:
            rel_lines.append((lineno, line.strip()))
        else:
            raise ValueError(f"{lineno}:1: unexpected line {line.strip()!r}")
    F = CyclotomicField(m)
    alg = FreeAlgebra(gens, F, {k: F.parse(v) for k, v in params.items()})
    rels = []
    from .expr import ParseError
    for lineno, src in rel_lines:
        try:
            rels.append(alg.parse(src))
        except ParseError as exc:
            raise ParseError(f"relation on line {lineno}: {exc}") from None
    return Presentation(alg, rels, order)
