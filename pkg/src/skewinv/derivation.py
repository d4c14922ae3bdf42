"""Derivation scripts: named chains of skew-algebra computations whose results
are certified to lie in the ideal (f_G) by construction.

Script text is a session header (see :mod:`skewinv.config`) followed by steps::

    p1 = x1^2*f - f*x2^2          # define a value
    assert p1 == (x1^2 - x2^2)*(1 + s)
    assert p1 in ideal            # certified by the derivation itself
    assert q in A                 # only the identity component is nonzero
    oracle p1                     # re-check with the degree-slice oracle

Names available in expressions: the algebra generators (as a#e), ``f``,
named group elements (as 1#g), ``z`` and ``zK`` roots of unity, scalar
parameters of the algebra (``a``, ``b``, ``c``, ``alpha``, ...), and every
value defined earlier.  A value is certified when it is ``f`` or built from
certified values by sums, scalar multiples, and products with anything.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import expr
from .config import ConfigError, Session, parse_session
from .expr import ParseError
from .rewrite import DegreeBoundError
from .scalar import inv
from .skew import SkewAlgebra, SkewElement, is_member


class DerivationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# tracked values


class Tracked:
    """A skew element together with the flag "certified to lie in (f_G)"."""

    __slots__ = ("elem", "ideal")

    def __init__(self, elem: SkewElement, ideal: bool):
        self.elem = elem
        self.ideal = ideal

    def _o(self, other) -> "Tracked":
        if isinstance(other, Tracked):
            return other
        S = self.elem.S
        return Tracked(S.embed(S.A.free.scalar(other)), False)

    def __add__(self, other):
        o = self._o(other)
        ok = (self.ideal or not self.elem) and (o.ideal or not o.elem)
        return Tracked(self.elem + o.elem, ok)

    __radd__ = __add__

    def __neg__(self):
        return Tracked(-self.elem, self.ideal)

    def __sub__(self, other):
        return self + (-self._o(other))

    def __rsub__(self, other):
        return self._o(other) - self

    def __mul__(self, other):
        o = self._o(other)
        return Tracked(self.elem * o.elem, self.ideal or o.ideal)

    def __rmul__(self, other):
        return self._o(other) * self

    def scalar(self):
        """The value as a field scalar, or None if it is not a constant multiple of 1#e."""
        S = self.elem.S
        terms = self.elem.terms
        if not terms:
            return S.A.field.zero
        if len(terms) == 1:
            (w, g), c = next(iter(terms.items()))
            if w == () and g == S.G.identity:
                return c
        return None


def _divide(a: Tracked, b: Tracked) -> Tracked:
    c = b.scalar()
    if c is None:
        raise ValueError("can only divide by a nonzero scalar")
    if not c:
        raise ZeroDivisionError
    return Tracked(a.elem * inv(c), a.ideal)


# ---------------------------------------------------------------------------
# scripts


@dataclass
class Step:
    kind: str          # "let", "equal", "ideal", "inA", "oracle"
    line: int
    text: str
    name: str | None = None
    lhs: str = ""
    rhs: str = ""


_LET = re.compile(r"\s*([A-Za-z][A-Za-z0-9_]*)\s*=(?!=)\s*(.+)$")
_EQ = re.compile(r"\s*assert\s+(.+?)\s*==\s*(.+)$")
_IN = re.compile(r"\s*assert\s+([A-Za-z][A-Za-z0-9_]*)\s+in\s+(ideal|A)\s*$")
_ORACLE = re.compile(r"\s*oracle\s+(.+)$")


@dataclass
class DerivationScript:
    name: str
    text: str
    steps: list = field(default_factory=list)
    header_text: str = ""

    @classmethod
    def parse(cls, text: str, name: str = "script") -> "DerivationScript":
        head_lines, steps = [], []
        for no, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                head_lines.append("")
                continue
            if re.match(r"\s*[A-Za-z_]+\s*:", line):
                head_lines.append(line)
                continue
            head_lines.append("")
            m = _EQ.match(line)
            if m:
                steps.append(Step("equal", no, line.strip(), lhs=m.group(1), rhs=m.group(2)))
                continue
            m = _IN.match(line)
            if m:
                steps.append(Step("ideal" if m.group(2) == "ideal" else "inA", no, line.strip(), name=m.group(1)))
                continue
            m = _ORACLE.match(line)
            if m:
                for nm in m.group(1).replace(",", " ").split():
                    steps.append(Step("oracle", no, line.strip(), name=nm))
                continue
            m = _LET.match(line)
            if m:
                steps.append(Step("let", no, line.strip(), name=m.group(1), lhs=m.group(2)))
                continue
            raise DerivationError(f"{no}:1: cannot read step {line.strip()!r}")
        return cls(name, text, steps, "\n".join(head_lines))


@dataclass
class StepResult:
    step: Step
    ok: bool
    value: SkewElement | None = None
    certified: bool | None = None
    oracle: bool | None = None
    message: str = ""

    def to_json(self) -> dict:
        out = {"line": self.step.line, "kind": self.step.kind, "step": self.step.text, "ok": self.ok}
        if self.step.name:
            out["name"] = self.step.name
        if self.value is not None:
            out["value"] = str(self.value)
            out["degree"] = self.value.degree() if self.value else None
        if self.certified is not None:
            out["certified"] = self.certified
        if self.oracle is not None:
            out["oracle"] = self.oracle
        if self.message:
            out["message"] = self.message
        return out


@dataclass
class DerivationReport:
    name: str
    results: list
    values: dict

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def first_failure(self) -> StepResult | None:
        return next((r for r in self.results if not r.ok), None)

    def value(self, name: str) -> SkewElement:
        return self.values[name].elem

    def certified(self, name: str) -> bool:
        return self.values[name].ideal

    def to_json(self) -> dict:
        bad = self.first_failure
        return {"script": self.name, "ok": self.ok,
                "first_failure": bad.step.line if bad else None,
                "steps": [r.to_json() for r in self.results]}

    def to_text(self) -> str:
        lines = [f"derivation {self.name}: {'ok' if self.ok else 'FAILED'}"]
        for r in self.results:
            mark = "ok  " if r.ok else "FAIL"
            lines.append(f"  [{mark}] {r.step.line:>3}  {r.step.text}")
            if r.step.kind == "let" and r.value is not None:
                tag = " (in ideal)" if r.certified else ""
                lines.append(f"          = {r.value}{tag}")
            if r.message:
                lines.append(f"          {r.message}")
        return "\n".join(lines)


RESERVED = {"f", "z"}


def _resolver(S: SkewAlgebra, names: dict, values: dict):
    A = S.A
    F = A.field
    gens = {nm: i for i, nm in enumerate(A.names)}
    params = {k: v for k, v in A.params.items() if not isinstance(v, (int, tuple, str))}
    one = F.one

    def scalar(c):
        return Tracked(S.embed(A.free.scalar(c)), False)

    def name(n):
        if n in values:
            return values[n]
        if n == "f":
            return Tracked(S.fG(), True)
        if n in gens:
            return Tracked(S.embed(A.free.gen(gens[n])), False)
        if n in names:
            return Tracked(S.group_element(names[n]), False)
        if n == "z" or (n[:1] == "z" and n[1:].isdigit()):
            return scalar(F.parse(n))
        if n in params:
            return scalar(params[n] * one)
        raise KeyError(f"unknown name {n!r}")

    return name


def evaluate(text: str, S: SkewAlgebra, names: dict | None = None, values: dict | None = None) -> Tracked:
    """Evaluate an expression over A#G with certification tracking."""
    ev = expr.Evaluator(integer=lambda k: Tracked(S.embed(S.A.free.scalar(k)), False),
                        name=_resolver(S, names or {}, values or {}), divide=_divide)
    return expr.parse(text, ev)


def run_derivation(script: DerivationScript | str, S: SkewAlgebra | None = None, names: dict | None = None,
                   oracle: bool = False, stop_on_failure: bool = False) -> DerivationReport:
    """Replay a script.  With ``oracle`` every certified value is also checked
    by the degree-slice membership oracle, in addition to explicit ``oracle`` steps."""
    if isinstance(script, str):
        script = DerivationScript.parse(script)
    if S is None:
        sess, _ = parse_session(script.header_text, require_group=True)
        S = sess.skew()
        names = sess.names
    names = names or {}
    values: dict = {}
    reserved = RESERVED | set(S.A.names) | set(names)
    results = []
    for st in script.steps:
        try:
            res = _run_step(st, S, names, values, reserved, oracle)
        except (ParseError, KeyError, ValueError, DegreeBoundError, ZeroDivisionError) as exc:
            msg = str(exc)
            if isinstance(exc, ParseError):
                msg = f"{st.line}: {msg}"
            res = StepResult(st, False, message=msg)
        results.append(res)
        if stop_on_failure and not res.ok:
            break
    return DerivationReport(script.name, results, values)


def _oracle(S, u: SkewElement) -> bool:
    return is_member(u, S).member


def _run_step(st: Step, S, names, values, reserved, oracle) -> StepResult:
    if st.kind == "let":
        if st.name in reserved:
            raise DerivationError(f"{st.line}:1: {st.name!r} is reserved")
        val = evaluate(st.lhs, S, names, values)
        values[st.name] = val
        res = StepResult(st, True, val.elem, val.ideal)
        if oracle and val.ideal:
            res.oracle = _oracle(S, val.elem)
            if not res.oracle:
                res.ok = False
                res.message = "certified value rejected by the membership oracle"
        return res
    if st.kind == "equal":
        lhs = evaluate(st.lhs, S, names, values).elem
        rhs = evaluate(st.rhs, S, names, values).elem
        if lhs == rhs:
            return StepResult(st, True)
        return StepResult(st, False, lhs - rhs, message=f"difference {lhs - rhs}")
    val = values.get(st.name)
    if val is None:
        raise DerivationError(f"{st.line}:1: unknown value {st.name!r}")
    if st.kind == "ideal":
        return StepResult(st, val.ideal, certified=val.ideal,
                          message="" if val.ideal else "not certified by the derivation")
    if st.kind == "inA":
        ok = val.elem.in_A()
        return StepResult(st, ok, message="" if ok else "has non-identity components")
    if st.kind == "oracle":
        got = _oracle(S, val.elem)
        ok = got or not val.ideal
        msg = "" if got else ("certified value rejected by the membership oracle" if val.ideal
                              else "not in the ideal")
        return StepResult(st, got and ok, oracle=got, message=msg)
    raise DerivationError(f"unknown step kind {st.kind}")


def load_script(path: str, name: str | None = None) -> DerivationScript:
    with open(path, encoding="utf-8") as fh:
        return DerivationScript.parse(fh.read(), name or path)


__all__ = ["ConfigError", "DerivationError", "DerivationReport", "DerivationScript", "Session", "Step",
           "StepResult", "Tracked", "evaluate", "load_script", "run_derivation"]
