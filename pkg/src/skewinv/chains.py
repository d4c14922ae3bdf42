"""Built-in derivation scripts.

Each function returns script text (session header plus steps) that
:func:`skewinv.derivation.run_derivation` replays.  Identities are asserted in
the form they actually hold; where a step differs from the commonly quoted
display, the script uses the correct element or coefficient.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .action import ActionGroup
from .derivation import DerivationError
from .scalar import CyclotomicField, inv


def _prod(factors: list[str]) -> str:
    return "*".join(f"({t})" for t in factors) if factors else "1"


def _pairs(n: int):
    return list(combinations(range(1, n + 1), 2))


# ---------------------------------------------------------------------------
# products of central squares


def squares_chain(n: int, i: int, j: int, group: str | None = None, sklyanin: bool = False,
                  bound: int | None = None) -> str:
    """f_{i,j} = x_i p_m - p_m x_j, p_k = x_a^2 p_{k-1} - p_{k-1} x_b^2, then h_{i,j}.

    ``sklyanin`` selects S(1,1,-1) (n = 3), where x_i x_j + x_j x_i is the
    square of the third generator.
    """
    if not 1 <= i < j <= n:
        raise DerivationError("need 1 <= i < j <= n")
    if sklyanin and n != 3:
        raise DerivationError("the Sklyanin variant needs n = 3")
    U = [(a, b) for a, b in _pairs(n) if (a, b) != (i, j)]
    bound = bound if bound is not None else 2 * comb(n, 2)
    alg = "sklyanin a=1 b=1 c=-1" if sklyanin else f"V n={n}"
    lines = [f"algebra: {alg}", f"bound: {bound}", f"group: {group or f'S{n}'}", "p0 = f"]
    for k, (a, b) in enumerate(U, 1):
        lines.append(f"p{k} = x{a}^2*p{k - 1} - p{k - 1}*x{b}^2")
    m = len(U)
    sq = [f"x{a}^2 - x{b}^2" for a, b in U]
    lines += [f"fij = x{i}*p{m} - p{m}*x{j}",
              f"assert fij == {_prod([f'x{i} - x{j}'] + sq)}",
              "assert fij in A",
              "assert fij in ideal",
              f"h = (x{i}*fij + fij*x{i})/2"]
    if sklyanin:
        k3 = ({1, 2, 3} - {i, j}).pop()
        lead = f"x{i}^2 - x{k3}^2/2"
    else:
        lead = f"x{i}^2"
    lines += [f"assert h == {_prod([lead] + sq)}", "assert h in A", "assert h in ideal"]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Klein four-group on V_4


def klein_chain(bound: int = 8) -> str:
    """r, the six (x_i - x_j)(x_i^2 + x_j^2), x_i^4 - x_j^4, x_a^2 x_b^2 + x_1^4 and x_i^4."""
    L = ["algebra: V n=4", f"bound: {bound}", "group: s = (1 2)(3 4); t = (1 3)(2 4)"]
    sumsq = "x1^2 + x2^2 + x3^2 + x4^2"
    for nm, u, g in (("qs", "x1 + x2 - x3 - x4", "s"), ("qt", "x1 + x3 - x2 - x4", "t"),
                     ("qst", "x1 + x4 - x2 - x3", "s*t")):
        L.append(f"{nm} = ({u})*(({u})*f + f*({u}))/2")
        L.append(f"assert {nm} == ({sumsq}) + ({sumsq})*{g}")
    L += [f"rf = ({sumsq})*f",
          "r = -(rf - qs - qt - qst)/2",
          f"assert r == {sumsq}",
          "assert r in A"]
    for i, j in _pairs(4):
        k, l = sorted(set(range(1, 5)) - {i, j})
        u = f"x{i}^2 + x{j}^2 - x{k}^2 - x{l}^2"
        L += [f"s{i}{j} = ({u})*f + f*({u})",
              f"f{i}{j} = ((x{i} - x{j})*r + (x{i}*s{i}{j} - s{i}{j}*x{j})/2)/2",
              f"assert f{i}{j} == (x{i} - x{j})*(x{i}^2 + x{j}^2)",
              f"a{i}{j} = x{i}*f{i}{j} + f{i}{j}*x{i}",
              f"assert a{i}{j} == 2*(x{i}^4 + x{i}^2*x{j}^2)",
              f"b{i}{j} = (x{i} - x{j})*f{i}{j}",
              f"assert b{i}{j} == x{i}^4 + 2*x{i}^2*x{j}^2 + x{j}^4",
              f"d{i}{j} = a{i}{j} - b{i}{j}",
              f"assert d{i}{j} == x{i}^4 - x{j}^4"]
    # e_ab = x_a^2 x_b^2 + x_1^4 = a_ab/2 - (x_a^4 - x_1^4)
    for a, b in _pairs(4):
        shift = "" if a == 1 else f" + d1{a}"
        L += [f"e{a}{b} = a{a}{b}/2{shift}", f"assert e{a}{b} == x{a}^2*x{b}^2 + x1^4"]
    es = " + ".join(f"e{a}{b}" for a, b in _pairs(4))
    L += ["rr = r*r",
          f"w = rr + d12 + d13 + d14 - 2*({es})",
          "assert w == -8*x1^4",
          "y1 = -w/8",
          "assert y1 == x1^4"]
    for a in (2, 3, 4):
        L += [f"y{a} = y1 - d1{a}", f"assert y{a} == x{a}^4", f"assert y{a} in ideal"]
    return "\n".join(L) + "\n"


# ---------------------------------------------------------------------------
# the involution (1 2)(3 4)...(2n-1 2n)


def pair_swap_chain(n: int) -> str:
    """x_i - x_{i+1} (i odd), then x_i^2 and x_{i+1}^2, on V_{2n}."""
    cyc = "".join(f"({2 * k + 1} {2 * k + 2})" for k in range(n))
    L = [f"algebra: V n={2 * n}", "bound: 4", f"group: s = {cyc}"]
    for i in range(1, 2 * n, 2):
        j = i + 1
        L += [f"d{i} = x{i}*f - f*x{j}",
              f"assert d{i} == x{i} - x{j}",
              f"assert d{i} in A",
              f"sq{i} = (x{i}*d{i} + d{i}*x{i})/2",
              f"assert sq{i} == x{i}^2",
              f"sq{j} = -(x{j}*d{i} + d{i}*x{j})/2",
              f"assert sq{j} == x{j}^2"]
    return "\n".join(L) + "\n"


# ---------------------------------------------------------------------------
# finite groups of V_3 automorphisms of shapes diag(a, b, ab) and
# [[0, c, 0], [d, 0, 0], [0, 0, cd]]


def _classify(G: ActionGroup):
    diag, twist = [], []
    for g in G:
        r = g.rows
        if all(r[i][j] == 0 for i in range(3) for j in range(3) if i != j):
            if r[2][2] != r[0][0] * r[1][1]:
                raise DerivationError(f"{g.label} is not of the form diag(a, b, ab)")
            diag.append(g)
        elif (r[0][0] == r[1][1] == r[0][2] == r[1][2] == r[2][0] == r[2][1] == 0
              and r[2][2] == r[0][1] * r[1][0]):
            twist.append(g)
        else:
            raise DerivationError(f"{g.label} is neither diagonal nor of twisted shape")
    return diag, twist


def _uniq(xs):
    out = []
    for x in xs:
        if x not in out:
            out.append(x)
    return out


def swap_sets(G: ActionGroup) -> dict:
    """S_t as distinct values d^{-2} (d = h_{2,1}), S_d and S_d' for the diagonal part."""
    diag, twist = _classify(G)
    return {
        "St": _uniq([inv(g.rows[1][0] * g.rows[1][0]) for g in twist]),
        "Sd": _uniq([g.rows[0][0] for g in diag if g.rows[0][0] != 1]),
        "Sd2": _uniq([g.rows[1][1] for g in diag if g.rows[0][0] == 1 and g.rows[1][1] != 1]),
    }


def _header(F: CyclotomicField, group: str, bound: int) -> list[str]:
    return [f"field: {F.m}", "algebra: V n=3", f"bound: {bound}", f"group: {group}"]


def _kill_twisted(F, St, prefix="p"):
    L = [f"{prefix}0 = f"]
    for k, c in enumerate(St, 1):
        L.append(f"{prefix}{k} = x1^2*{prefix}{k - 1} - ({F.format(c)})*{prefix}{k - 1}*x2^2")
    return L, f"{prefix}{len(St)}"


def _kill_diag(F, start, steps, prefix="q"):
    """steps: [(generator index, eigenvalue)]; q_k = x(x q - a^{-1} q x)."""
    L, cur = [], start
    for k, (gi, a) in enumerate(steps, 1):
        x = f"x{gi}"
        L.append(f"{prefix}{k} = {x}*({x}*{cur} - ({F.format(inv(a))})*{cur}*{x})")
        cur = f"{prefix}{k}"
    return L, cur


def vandermonde_chain(G: ActionGroup, group: str, bound: int = 10) -> str:
    """V = kappa x1^{2|S_d|} x2^{2|S_d'|} prod_{c in S_t} (x1^2 - c x2^2) in (f) ∩ T."""
    F = G.A.field
    sets = swap_sets(G)
    L = _header(F, group, bound)
    body, vhat = _kill_twisted(F, sets["St"])
    L += body
    steps = [(1, a) for a in sets["Sd"]] + [(2, b) for b in sets["Sd2"]]
    body, last = _kill_diag(F, vhat, steps)
    L += body
    kappa = F.one
    for _, a in steps:
        kappa = kappa * (1 - inv(a))
    factors = [f"x1^2 - ({F.format(c)})*x2^2" for c in sets["St"]]
    if sets["Sd"]:
        factors.insert(0, f"x1^{2 * len(sets['Sd'])}")
    if sets["Sd2"]:
        factors.insert(1 if sets["Sd"] else 0, f"x2^{2 * len(sets['Sd2'])}")
    L += [f"V = {last}", "assert V in A", "assert V in ideal",
          f"assert V == ({F.format(kappa)})*{_prod(factors)}"]
    return "\n".join(L) + "\n"


def coprime_chain(G: ActionGroup, group: str, bound: int = 10) -> str:
    """mu = sum over the factors v of V of elements mu_v of (f) ∩ T, v not dividing mu_v.

    Power-of-x_1 and power-of-x_2 factors reuse the twisted-killing chain with
    the diagonal parts read off from other coordinates.  For a factor
    x1^2 - c x2^2 with c = d^{-2}: kill the other twisted classes, then the
    elements with h_{3,3} != 1, then q = x1 q_m - d^{-1} q_m x2 and
    r_0 = x2 q - d q x1.  The surviving diagonal components must be
    M(1,1) and M(-1,-1); they are merged with the absorption identity
    (1#M) f = f, giving an element of A.
    """
    F = G.A.field
    diag, twist = _classify(G)
    sets = swap_sets(G)
    L = _header(F, group, bound)
    named = {}
    for g in G:
        if g.label and g.label[0].isalpha() and g.label != "e":
            named[g.key()] = g.label
    parts = []
    body, vhat = _kill_twisted(F, sets["St"])
    L += body
    if sets["Sd"]:
        hat = _uniq([g.rows[1][1] for g in diag if g.rows[1][1] != 1])
        hat2 = _uniq([g.rows[2][2] for g in diag if g.rows[1][1] == 1 and g.rows[2][2] != 1])
        body, last = _kill_diag(F, vhat, [(2, a) for a in hat] + [(3, b) for b in hat2], prefix="m")
        L += body + [f"mu1 = {last}", "assert mu1 in A"]
        parts.append("mu1")
    if sets["Sd2"]:
        hat = _uniq([g.rows[0][0] for g in diag if g.rows[0][0] != 1])
        hat2 = _uniq([g.rows[2][2] for g in diag if g.rows[0][0] == 1 and g.rows[2][2] != 1])
        body, last = _kill_diag(F, vhat, [(1, a) for a in hat] + [(3, b) for b in hat2], prefix="n")
        L += body + [f"mu2 = {last}", "assert mu2 in A"]
        parts.append("mu2")
    for idx, c in enumerate(sets["St"], 1):
        tag = f"t{idx}"
        others = [e for e in sets["St"] if e != c]
        body, pm = _kill_twisted(F, others, prefix=f"{tag}p")
        L += body
        cls = [g for g in twist if inv(g.rows[1][0] ** 2) == c]
        tilde = _uniq([g.rows[2][2] for g in diag + cls if g.rows[2][2] != 1])
        body, qm = _kill_diag(F, pm, [(3, b) for b in tilde], prefix=f"{tag}q")
        L += body
        d = cls[0].rows[1][0]
        L += [f"{tag}u = x1*{qm} - ({F.format(inv(d))})*{qm}*x2",
              f"{tag}r = x2*{tag}u - ({F.format(d)})*{tag}u*x1"]
        left = [g for g in diag if g.rows[2][2] == 1 and g.rows[0][0] != 1]
        if any(g.rows[0][0] != -1 for g in left):
            raise DerivationError("only the diagonal elements M(1,1) and M(-1,-1) can be merged here")
        L += [f"{tag}a = x1*{tag}r + {tag}r*x1", f"{tag}b = x1*{tag}r - {tag}r*x1"]
        if left:
            mname = named.get(left[0].key())
            if mname is None:
                raise DerivationError("name the element diag(-1, -1, 1) in the group line")
            L.append(f"{tag}w = {tag}a + {mname}*{tag}b")
        else:
            L.append(f"{tag}w = {tag}a")
        L += [f"assert {tag}w in A", f"mu{tag} = x1*{tag}w", f"assert mu{tag} in A"]
        parts.append(f"mu{tag}")
    L += [f"mu = {' + '.join(parts)}", "assert mu in A", "assert mu in ideal"]
    return "\n".join(L) + "\n"


# ---------------------------------------------------------------------------
# Sklyanin algebra in diagonalising generators


def sklyanin_squares_chain(a=1, b=2, c=3, bound: int = 6) -> str:
    """Y^2 and X^2 in (f) for the cyclic permutation acting as diag(z^2, z, 1) on X, Y, Z."""
    L = ["field: 3", f"algebra: sklyanin-xyz a={a} b={b} c={c}", f"bound: {bound}",
         "group: s = diag(z^2, z, 1)",
         "g1 = Y*f - z*f*Y",
         "assert g1 == (1 - z)*Y + (1 - z^2)*Y*s",
         "g = g1/(1 - z)",
         "assert g == Y + (1 + z)*Y*s",
         "y2 = Y*g - z^2*g*Y",
         "assert y2 == (1 - z^2)*Y^2",
         "ysq = y2/(1 - z^2)",
         "assert ysq == Y^2",
         "assert ysq in ideal",
         "h1 = X*f - z^2*f*X",
         "assert h1 == (1 - z^2)*X + (1 - z)*X*s",
         "h = h1/(1 - z^2)",
         "assert h == X + X*s/(1 + z)",
         "xx = X*h - z*h*X",
         "assert xx == (1 - z)*X^2",
         "xsq = xx/(1 - z)",
         "assert xsq == X^2",
         "assert xsq in ideal"]
    return "\n".join(L) + "\n"


# ---------------------------------------------------------------------------
# weighted Klein four-group <-I, (1 3)(2 4)> on V_4


def weighted_klein_chain(bound: int = 6) -> str:
    L = ["algebra: V n=4", f"bound: {bound}", "group: a = -I; b = (1 3)(2 4)",
         "p1 = (x1 + x3)*f + f*(x1 + x3)",
         "assert p1 == 2*(x1 + x3) + 2*(x1 + x3)*b",
         "u1 = x2*p1 + p1*x4",
         "assert u1 == 2*(x2 - x4)*(x1 + x3)",
         "p2 = x1*f - f*x3",
         "assert p2 == (x1 - x3) + (x1 + x3)*a + 2*x1*a*b",
         "u2 = (x2 + x4)*p2 - p2*(x2 + x4)",
         "assert u2 == 2*(x2 + x4)*(x1 - x3)",
         "v1 = (u1 + u2)/4",
         "assert v1 == x2*x1 - x4*x3",
         "v2 = (u1 - u2)/4",
         "assert v2 == x2*x3 - x4*x1",
         "p3 = x1*x3*f + f*x1*x3",
         "assert p3 == 2*x1*x3 + 2*x1*x3*a",
         "c1 = (x1*p3 - p3*x1)/4",
         "assert c1 == x1^2*x3",
         "c2 = -(x3*p3 - p3*x3)/4",
         "assert c2 == x1*x3^2",
         "p3b = x2*x4*f + f*x2*x4",
         "assert p3b == 2*x2*x4 + 2*x2*x4*a",
         "c3 = (x2*p3b - p3b*x2)/4",
         "assert c3 == x2^2*x4",
         "c4 = -(x4*p3b - p3b*x4)/4",
         "assert c4 == x2*x4^2",
         "p4 = x1^2*f - f*x3^2",
         "assert p4 == (x1^2 - x3^2) + (x1^2 - x3^2)*a",
         "w1 = x1*p4 + p4*x1",
         "assert w1 == 2*x1*(x1^2 - x3^2)",
         "cube1 = w1/2 + c2",
         "assert cube1 == x1^3",
         "w3 = x3*p4 + p4*x3",
         "cube3 = c1 - w3/2",
         "assert cube3 == x3^3",
         "p4b = x2^2*f - f*x4^2",
         "assert p4b == (x2^2 - x4^2) + (x2^2 - x4^2)*a",
         "w2 = x2*p4b + p4b*x2",
         "cube2 = w2/2 + c4",
         "assert cube2 == x2^3",
         "w4 = x4*p4b + p4b*x4",
         "cube4 = c3 - w4/2",
         "assert cube4 == x4^3"]
    L += [f"assert {nm} in ideal" for nm in ("v1", "v2", "c1", "c2", "c3", "c4",
                                             "cube1", "cube2", "cube3", "cube4")]
    return "\n".join(L) + "\n"


LEMMA41_GROUP = "M = diag(-1, -1, 1); N = [0 1 0; 1 0 0; 0 0 1]"
