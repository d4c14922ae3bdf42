"""Pertinency bounds: p(A,G) = GKdim A - GKdim (A#G)/(f_G).

Two certified routes are offered.  ``finite_dim_check`` looks for a degree
where A/((f_G) ∩ A) vanishes; the quotient is generated in degree one, so it
then vanishes from there on and p = GKdim A.  ``certify_p_geq_2`` replays the
square-product chains for every pair i < j, reads the resulting elements of
(f_G) ∩ T with T = k[x_1^2, ..., x_n^2], and checks by substitution that
their sum is coprime to the Vandermonde product; two coprime elements of
(f_G) ∩ T cut GKdim A/((f_G) ∩ A) down to at most n - 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from . import chains
from .action import ActionGroup
from .algebra import QuotientAlgebra
from .commutative import CommPoly, hhat, rel_prime_by_substitution, vdm
from .derivation import run_derivation
from .freealg import FreePoly
from .scalar import Echelon
from .skew import SkewAlgebra, quotient_dims


class PertinencyError(ValueError):
    pass


# ---------------------------------------------------------------------------
# central squares


def square_monomials(A: QuotientAlgebra, k: int) -> list[tuple]:
    """Exponent vectors of y-degree k (x-degree 2k)."""
    n = A.ngens
    out = []
    for combo in combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def to_square_poly(p: FreePoly, A: QuotientAlgebra) -> CommPoly | None:
    """Write p as a polynomial in y_i = x_i^2, or None if p is not in that subalgebra."""
    n = A.ngens
    parts: dict = {}
    for w, c in A.nf(p).terms.items():
        parts.setdefault(len(w), {})[w] = c
    out = CommPoly(n)
    for d, terms in parts.items():
        if d % 2:
            return None
        idx = A.basis_index(d)
        E = Echelon(track=True)
        monos = square_monomials(A, d // 2)
        for k, e in enumerate(monos):
            word = tuple(i for i in range(n) for _ in range(2 * e[i]))
            vec = {idx[u]: c for u, c in A.nf_word(word).items()}
            E.add(vec, k)
        combo = E.express({idx[w]: c for w, c in terms.items()})
        if combo is None:
            return None
        out = out + CommPoly(n, {monos[k]: c for k, c in combo.items()})
    return out


# ---------------------------------------------------------------------------
# p >= 2


@dataclass
class LowerBoundCertificate:
    ok: bool
    variant: str
    pairs: list = field(default_factory=list)        # [(i, j, h as CommPoly, chain ok)]
    hsum: CommPoly | None = None
    substitutions: list = field(default_factory=list)  # [(a, b, image)]
    vdm_member: bool = False
    message: str = ""

    def to_json(self) -> dict:
        return {"ok": self.ok, "variant": self.variant,
                "h": {f"{i},{j}": str(h) for i, j, h, _ in self.pairs},
                "h_sum": str(self.hsum) if self.hsum is not None else None,
                "substitutions": [{"pair": [a, b], "image": str(img)} for a, b, img in self.substitutions],
                "vandermonde_in_ideal": self.vdm_member, "message": self.message}


def _variant(A: QuotientAlgebra) -> str:
    if A.tag in ("V", "twisted-tensor"):
        return "Vn"
    if A.tag == "sklyanin" and A.ngens == 3 and [A.params.get(k) for k in "abc"] == [1, 1, -1]:
        return "Sklyanin"
    raise PertinencyError("the square-product certificate needs V_n or S(1,1,-1)")


def _is_permutation_group(G: ActionGroup) -> bool:
    return all(g._monomial and all(s == 1 for s in g._scale) for g in G)


def certify_p_geq_2(A: QuotientAlgebra, G: ActionGroup, oracle: bool = False) -> LowerBoundCertificate:
    variant = _variant(A)
    if not _is_permutation_group(G):
        raise PertinencyError("the square-product certificate needs a permutation action")
    n = A.ngens
    if A.bound < 2 * (n * (n - 1) // 2):
        raise PertinencyError(f"completion bound {A.bound} is below the needed degree {n * (n - 1)}")
    for i in range(n):
        y = A.free.gen(i) * A.free.gen(i)
        if not A.is_central(y):
            raise PertinencyError(f"x{i + 1}^2 is not central")
    S = SkewAlgebra(A, G)
    cert = LowerBoundCertificate(False, variant)
    hsum = CommPoly(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            script = chains.squares_chain(n, i, j, sklyanin=(variant == "Sklyanin"), bound=A.bound)
            rep = run_derivation(script, S, oracle=oracle)
            h = to_square_poly(rep.value("h").identity_component(), A) if rep.ok else None
            expect = hhat(n, variant, i, j)
            good = rep.ok and h == expect
            cert.pairs.append((i, j, h, good))
            if not good:
                bad = rep.first_failure
                cert.message = f"pair ({i},{j}): " + (bad.message if bad else "h does not match the expected product")
                return cert
            if (i, j) == (1, 2):
                fij = rep.value("fij")
                vd = A.free.gen(0) * fij.identity_component() + fij.identity_component() * A.free.gen(1)
                cert.vdm_member = to_square_poly(vd, A) == vdm(n) if n >= 2 else False
            hsum = hsum + h
    cert.hsum = hsum
    ok, wit = rel_prime_by_substitution(hsum, n)
    cert.substitutions = wit
    cert.ok = ok and cert.vdm_member
    if not ok:
        cert.message = "h is not coprime to the Vandermonde product"
    return cert


# ---------------------------------------------------------------------------
# finite dimensionality


@dataclass
class FiniteDimResult:
    finite: bool
    dims: list
    cutoff: int | None = None      # first degree with a zero slice
    total: int | None = None

    def to_json(self) -> dict:
        return {"finite": self.finite, "dims": self.dims, "cutoff": self.cutoff, "total": self.total}


def finite_dim_check(S: SkewAlgebra, D: int) -> FiniteDimResult:
    dims = []
    for d in range(D + 1):
        q = S.slices.quotient_dim(d)
        dims.append(q)
        if q == 0 and d > 0:
            return FiniteDimResult(True, dims, d, sum(dims))
    return FiniteDimResult(False, dims)


# ---------------------------------------------------------------------------
# subgroups


@dataclass
class MonotonicityResult:
    ok: bool
    dims_G: list
    dims_H: list
    inclusion: list            # per degree: (f_G) ∩ A_d contained in (f_H) ∩ A_d
    equal: bool

    def to_json(self) -> dict:
        return {"ok": self.ok, "dims_G": self.dims_G, "dims_H": self.dims_H,
                "inclusion": self.inclusion, "equal": self.equal}


def restrict(G: ActionGroup, gens: list) -> ActionGroup:
    from .action import group_closure
    return group_closure(gens, G.A, name="H")


def monotonicity_check(A: QuotientAlgebra, H: ActionGroup, G: ActionGroup, D: int) -> MonotonicityResult:
    """dim (A/((f_G) ∩ A))_d >= dim (A/((f_H) ∩ A))_d, with the underlying inclusion."""
    if not G.contains_group(H):
        raise PertinencyError("H is not contained in G")
    SG, SH = SkewAlgebra(A, G), SkewAlgebra(A, H)
    dG, dH, inc = [], [], []
    for d in range(D + 1):
        dG.append(SG.slices.quotient_dim(d))
        dH.append(SH.slices.quotient_dim(d))
        basis = SG.slices.slice(d).intersection
        inc.append(all(SH.slices.contains(SH.embed(p)) for p in basis))
    ok = all(a >= b for a, b in zip(dG, dH)) and all(inc)
    return MonotonicityResult(ok, dG, dH, inc, dG == dH)


# ---------------------------------------------------------------------------
# growth


def gk_growth_estimate(dims: list, window: int = 4) -> str:
    """Classify the trailing ``window`` entries of a dimension sequence.

    "gk0" when they are all zero, "bounded" when constant, "degree-k" when
    the (k+1)-th finite difference vanishes on the window (GK dimension
    k + 1), and "undetermined" when the window is too short to tell.
    """
    if window < 2 or window > len(dims):
        raise PertinencyError(f"window {window} does not fit {len(dims)} terms")
    seq = list(dims[-window:])
    if not any(seq):
        return "gk0"
    for k in range(1, window):
        seq = [b - a for a, b in zip(seq, seq[1:])]
        if not any(seq):
            return "bounded" if k == 1 else f"degree-{k - 1}"
    return "undetermined"


# ---------------------------------------------------------------------------
# reports


def support_upper_bound(G: ActionGroup) -> tuple[int, str] | None:
    """Smallest number k of generators moved by a non-identity permutation in G.

    A permutation moving k generators splits V_n as the sign-twisted tensor
    V_k ⊗ V_{n-k} with the cyclic group acting on the first factor only, so
    p(V_n, <g>) = p(V_k, <g>) <= k, and p(V_n, G) <= p(V_n, <g>).
    """
    best = None
    for k, g in enumerate(G):
        if k == G.identity or not (g._monomial and all(s == 1 for s in g._scale)):
            continue
        moved = sum(1 for i, j in enumerate(g._perm) if i != j)
        if best is None or moved < best[0]:
            best = (moved, g.label)
    return best


@dataclass
class PertinencyReport:
    algebra: str
    group: list
    gkdim: int | None
    dims: list
    lower_bound: int | None
    certificate: dict | None
    conclusion: str
    isolated_singularity: bool
    upper_bound: int | None = None
    upper_reason: str = ""
    growth: str = ""

    def to_json(self) -> dict:
        return {"algebra": self.algebra, "group": self.group, "gkdim": self.gkdim, "dims": self.dims,
                "lower_bound": self.lower_bound, "upper_bound": self.upper_bound,
                "upper_reason": self.upper_reason, "certificate": self.certificate,
                "conclusion": self.conclusion, "isolated_singularity": self.isolated_singularity,
                "growth": self.growth}


def default_evidence_bound(A: QuotientAlgebra) -> int:
    return 12 if A.ngens <= 4 else 8


def algebra_label(A: QuotientAlgebra) -> str:
    if A.tag in ("V", "W"):
        return f"{A.tag}_{A.ngens}"
    if A.params:
        ps = ",".join(f"{k}={v if isinstance(v, int) else A.field.format(v)}"
                      for k, v in A.params.items() if k in ("a", "b", "c", "alpha", "beta", "n"))
        return f"{A.tag}({ps})"
    return A.tag


def pertinency_report(A: QuotientAlgebra, G: ActionGroup, D: int | None = None,
                      certify: bool = True) -> PertinencyReport:
    """Combine the finite-dimensionality test, the p >= 2 certificate and cycle upper bounds.

    Exact values are claimed only when the bounds meet; otherwise the
    report states the bracket (for instance "2 or 3") with the dims attached.
    """
    D = default_evidence_bound(A) if D is None else min(D, A.bound)
    S = SkewAlgebra(A, G)
    fin = finite_dim_check(S, D)
    dims = fin.dims if fin.finite else quotient_dims(S, D)
    gk = A.gkdim
    cert, lower, upper, why = None, None, gk, "GKdim A"
    if fin.finite:
        lower = gk
        cert = {"kind": "finite-dimensional quotient", "cutoff": fin.cutoff, "total": fin.total}
    else:
        if A.tag == "V":
            sup = support_upper_bound(G)
            if sup is not None and (upper is None or sup[0] < upper):
                upper, why = sup[0], f"{sup[1]} moves only {sup[0]} generators"
        if certify:
            try:
                lb = certify_p_geq_2(A, G)
                cert = {"kind": "square-product", **lb.to_json()}
                lower = 2 if lb.ok else None
            except PertinencyError as exc:
                cert = {"kind": "none", "message": str(exc)}
    conclusion = _conclude(lower, upper, gk)
    window = min(4, len(dims))
    growth = "gk0" if fin.finite else (gk_growth_estimate(dims, window) if window >= 2 else "")
    return PertinencyReport(algebra_label(A), G.labels(), gk, dims, lower, cert, conclusion, fin.finite,
                            upper, why, growth)


def _conclude(lower, upper, gk) -> str:
    if lower is None:
        return "evidence-only"
    if upper is not None and lower == upper:
        return f"p = {lower}"
    if upper is not None and upper == lower + 1:
        return f"{lower} or {upper}"
    if upper is not None:
        return f"{lower} <= p <= {upper}"
    return f"p >= {lower}"
