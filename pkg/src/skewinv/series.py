"""Trace series, Molien averages, rational reconstruction, reflection numbers
and homological determinants.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import ActionGroup, GradedAutomorphism
from .algebra import QuotientAlgebra
from .rewrite import DegreeBoundError
from .scalar import CyclotomicField, Echelon, Matrix, cyclotomic_poly, inv


class SeriesError(ValueError):
    pass


# ---------------------------------------------------------------------------
# univariate polynomials, coefficient lists in ascending powers of t


def _trim(c: list) -> list:
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return _trim(out)


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    ib = inv(b[-1])
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        c = r[-1] * ib
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] = r[k + j] - c * y
        r = _trim(r)
    return _trim(q), r


def _pgcd(a: list, b: list) -> list:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return []
    il = inv(a[-1])
    return [x * il for x in a]


def _peval(a: list, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _fmt_scalar(F: CyclotomicField, c) -> str:
    return F.format(c)


def _poly_str(F: CyclotomicField, c: list) -> str:
    """Ascending-power text such as 1-3t+5t^2."""
    c = _trim(c)
    if not c:
        return "0"
    out = ""
    for k, x in enumerate(c):
        if not x:
            continue
        s = _fmt_scalar(F, x)
        compound = " + " in s or " - " in s.lstrip("-")
        neg = s.startswith("-") and not compound
        mag = s[1:] if neg else s
        if compound:
            mag = f"({s})"
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        body = mag if not mono else (mono if mag == "1" else f"{mag}*{mono}")
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += ("-" if neg else "+") + body
    return out


# ---------------------------------------------------------------------------


class TruncatedSeries:
    """c_0 + c_1 t + ... + c_N t^N with exact coefficients."""

    def __init__(self, coeffs, field: CyclotomicField | None = None):
        self.field = field or CyclotomicField(1)
        F = self.field
        self.coeffs = [F(c) for c in coeffs]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def _n(self, other) -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries"):
        n = self._n(other)
        return TruncatedSeries([self[k] + other[k] for k in range(n + 1)], self.field)

    def __sub__(self, other):
        n = self._n(other)
        return TruncatedSeries([self[k] - other[k] for k in range(n + 1)], self.field)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._n(other)
            out = [self.field.zero] * (n + 1)
            for i in range(n + 1):
                if self[i]:
                    for j in range(n + 1 - i):
                        out[i + j] = out[i + j] + self[i] * other[j]
            return TruncatedSeries(out, self.field)
        c = self.field(other)
        return TruncatedSeries([x * c for x in self.coeffs], self.field)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def truncate(self, n: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[:n + 1], self.field)

    def to_json(self) -> list[str]:
        return [self.field.format(c) for c in self.coeffs]

    def __repr__(self):
        return f"TruncatedSeries({', '.join(self.to_json())})"


def expand(num: list, den: list, N: int, field: CyclotomicField | None = None) -> TruncatedSeries:
    """Power series of num/den to order N (den(0) != 0)."""
    F = field or CyclotomicField(1)
    if not den or not den[0]:
        raise SeriesError("denominator vanishes at t = 0")
    i0 = inv(den[0])
    out = []
    for k in range(N + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(F(acc * i0))
    return TruncatedSeries(out, F)


@dataclass
class RationalForm:
    """num/den with den(0) = 1, reduced; den = (1-t)^k q(t), q(1) != 0."""

    num: list
    den: list
    field: CyclotomicField
    k: int
    q: list

    @classmethod
    def build(cls, num, den, field: CyclotomicField) -> "RationalForm":
        num, den = _trim(num), _trim(den)
        g = _pgcd(num, den)
        if len(g) > 1:
            num, den = _pdivmod(num, g)[0], _pdivmod(den, g)[0]
        c = inv(den[0])
        num = [field(x * c) for x in num]
        den = [field(x * c) for x in den]
        k, q = 0, list(den)
        while _peval(q, 1) == 0:
            q, r = _pdivmod(q, [1, -1])
            if r:
                raise SeriesError("inexact division by 1-t")
            k += 1
        return cls(num, den, field, k, [field(x) for x in q])

    def expand(self, N: int) -> TruncatedSeries:
        return expand(self.num, self.den, N, self.field)

    @property
    def pole_order(self) -> int:
        """Order of the pole at t = 1."""
        return self.k

    @property
    def reciprocal(self) -> bool:
        """True when the numerator is the constant 1."""
        return len(self.num) == 1 and self.num[0] == 1

    def factors(self) -> list[tuple[list, int]]:
        """Cyclotomic factorisation of q over Q (leftover factor last)."""
        rest = list(self.q)
        out = []
        m = 2
        deg = len(rest) - 1
        while deg > 0 and m <= 4 * deg * deg + 8:
            phi = list(cyclotomic_poly(m))
            e = 0
            while len(rest) - 1 >= len(phi) - 1:
                quo, r = _pdivmod(rest, phi)
                if r:
                    break
                rest, e = quo, e + 1
            if e:
                out.append((phi, e))
            deg = len(rest) - 1
            m += 1
        if len(rest) > 1:
            out.append((rest, 1))
        return out

    def __str__(self):
        # q(0) = 1 and every cyclotomic factor has constant term 1
        F = self.field
        parts = []
        for poly, e in self.factors():
            s = f"({_poly_str(F, poly)})"
            parts.append(s if e == 1 else f"{s}^{e}")
        if self.k:
            parts.append("(1-t)" if self.k == 1 else f"(1-t)^{self.k}")
        ns = _poly_str(F, self.num)
        if len(_trim(self.num)) > 1 or ns.startswith("-") or " " in ns:
            ns = f"({ns})"
        if not parts:
            return ns
        den = parts[0] if len(parts) == 1 else "(" + "*".join(parts) + ")"
        return f"{ns}/{den}"

    def to_json(self) -> dict:
        F = self.field
        return {"text": str(self), "numerator": [F.format(x) for x in self.num],
                "denominator": [F.format(x) for x in self.den], "pole_order_at_1": self.k}


def pade_reconstruct(s: TruncatedSeries, p: int, q: int) -> RationalForm:
    """Rational function with deg num <= p, deg den <= q matching s to its order."""
    N = s.order
    if N < p + q + 1:
        raise SeriesError(f"need at least {p + q + 2} coefficients, have {N + 1}")
    F = s.field
    c = s.coeffs
    # den = 1 + d_1 t + ... + d_q t^q; coefficients p+1..p+q of den*s vanish
    if q:
        rows = [[c[k - j] if k - j >= 0 else F.zero for j in range(1, q + 1)] for k in range(p + 1, p + q + 1)]
        rhs = [-c[k] for k in range(p + 1, p + q + 1)]
        try:
            d = Matrix(rows, q).solve(rhs)
        except ValueError:
            raise SeriesError(f"no rational function with degrees ({p}, {q})") from None
        den = [F.one] + list(d)
    else:
        den = [F.one]
    num = [sum((den[j] * c[k - j] for j in range(min(k, q) + 1)), F.zero) for k in range(p + 1)]
    form = RationalForm.build(num, den, F)
    if form.expand(N) != s:
        raise SeriesError(f"no rational function with degrees ({p}, {q}) matches to order {N}")
    return form


def reconstruct(s: TruncatedSeries, max_num: int | None = None, max_den: int | None = None) -> RationalForm:
    """Smallest-degree Padé form that re-expands to s exactly."""
    N = s.order
    last = None
    for total in range(0, N):
        for q in range(total + 1):
            p = total - q
            if (max_num is not None and p > max_num) or (max_den is not None and q > max_den):
                continue
            if p + q + 1 > N:
                continue
            try:
                return pade_reconstruct(s, p, q)
            except SeriesError as exc:
                last = exc
    raise SeriesError(f"no rational reconstruction found: {last}")


# ---------------------------------------------------------------------------


def trace_series(g: GradedAutomorphism, A: QuotientAlgebra, N: int) -> TruncatedSeries:
    if N > A.bound:
        raise DegreeBoundError(f"order {N} exceeds completion bound {A.bound}")
    F = A.field
    out = []
    for d in range(N + 1):
        acc = F.zero
        for w in A.graded_basis(d):
            c = g.image_word(w).get(w)
            if c:
                acc = acc + c
        out.append(acc)
    return TruncatedSeries(out, F)


def hilbert_series(A: QuotientAlgebra, N: int) -> TruncatedSeries:
    return TruncatedSeries(A.hilbert_series(N), A.field)


def invariant_dims(G: ActionGroup, A: QuotientAlgebra, N: int) -> list[int]:
    """dim (A_d)^G: rank of the averaging operator, from orbit sums."""
    out = []
    for d in range(N + 1):
        idx = A.basis_index(d)
        E = Echelon()
        for w in A.graded_basis(d):
            vec: dict = {}
            for g in G:
                for u, c in g.image_word(w).items():
                    k = idx[u]
                    v = vec.get(k, 0) + c
                    if v:
                        vec[k] = v
                    else:
                        vec.pop(k, None)
            if vec:
                E.add(vec)
        out.append(len(E))
    return out


@dataclass
class MolienResult:
    series: TruncatedSeries
    direct: list
    form: RationalForm | None

    @property
    def agrees(self) -> bool:
        return [c for c in self.series.coeffs] == [self.series.field(x) for x in self.direct]


def molien_hilbert(G: ActionGroup, A: QuotientAlgebra, N: int, rational: bool = True) -> MolienResult:
    """(1/|G|) sum_g Tr(g, t), cross-checked against invariant dimensions."""
    F = A.field
    acc = TruncatedSeries([0] * (N + 1), F)
    for g in G:
        acc = acc + trace_series(g, A, N)
    avg = acc * F(1) * inv(F(len(G)))
    direct = invariant_dims(G, A, N)
    res = MolienResult(avg, direct, None)
    if not res.agrees:
        raise SeriesError(f"Molien average {avg.to_json()} disagrees with invariant dimensions {direct}")
    if rational:
        try:
            res.form = reconstruct(avg)
        except SeriesError:
            res.form = None
    return res


def _gk(A: QuotientAlgebra) -> int:
    if A.gkdim is None:
        raise SeriesError("GK dimension unknown for this algebra")
    return A.gkdim


def trace_form(g: GradedAutomorphism, A: QuotientAlgebra, N: int | None = None) -> RationalForm:
    N = A.bound if N is None else N
    return reconstruct(trace_series(g, A, N))


def reflection_number(g: GradedAutomorphism, A: QuotientAlgebra, N: int | None = None) -> int:
    """GKdim A - k where Tr_A(g, t) = 1/((1-t)^k q(t)), q(1) != 0."""
    form = trace_form(g, A, N)
    if not form.reciprocal:
        raise SeriesError(f"trace {form} is not of the form 1/((1-t)^k q(t))")
    return _gk(A) - form.k


def is_reflection(g: GradedAutomorphism, A: QuotientAlgebra, N: int | None = None) -> bool:
    return reflection_number(g, A, N) == 1


def reflection_number_group(G: ActionGroup, A: QuotientAlgebra, N: int | None = None) -> int:
    others = [g for k, g in enumerate(G) if k != G.identity]
    if not others:
        raise SeriesError("trivial group has no reflection number")
    return min(reflection_number(g, A, N) for g in others)


@dataclass
class HdetResult:
    hdet: object
    shift: int          # the exponent ell
    sign_exponent: int  # GKdim n in (-1)^n

    def to_json(self, F: CyclotomicField) -> dict:
        return {"hdet": F.format(self.hdet), "ell": self.shift, "n": self.sign_exponent}


def hdet(g: GradedAutomorphism, A: QuotientAlgebra, N: int | None = None) -> HdetResult:
    """Read hdet and ell from Tr = (-1)^n hdet^{-1} t^{-ell} + lower terms at t -> infinity."""
    form = trace_form(g, A, N)
    n = _gk(A)
    num, den = _trim(form.num), _trim(form.den)
    lead = num[-1] * inv(den[-1])
    ell = (len(den) - 1) - (len(num) - 1)
    sign = 1 if n % 2 == 0 else -1
    h = inv(lead * sign)
    return HdetResult(A.field(h), ell, n)
