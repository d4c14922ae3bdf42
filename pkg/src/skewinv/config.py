"""Plain-text session descriptions shared by config files and derivation scripts.

A session is a block of ``key: value`` lines::

    field: 3                      # optional; inferred from zK names otherwise
    algebra: V n=4
    bound: 10
    group: a = -I; b = (1 3)(2 4)
    scenario: prop3.5             # config files only

Algebra forms: ``V n=..``, ``W n=..``, ``sklyanin a=.. b=.. c=..``,
``sklyanin-xyz a=.. b=.. c=..``, ``downup alpha=.. beta=..``.  Group items are
separated by ``;`` and are cycle notation, ``-I``, ``I``, ``-(cycles)``,
``diag(d1, .., dn)``, a matrix ``[r11 r12; r21 r22]`` (rows separated by
``;`` inside the brackets), or ``S<n>`` for the full symmetric group.  An item
may be named with ``name = item``.  Scalars may use ``zK`` for a primitive
K-th root of unity; the field order is then the lcm of all such K.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .action import ActionError, ActionGroup, GradedAutomorphism, group_closure, parse_cycles
from .algebra import AlgebraError, DEFAULT_BOUND, QuotientAlgebra, preset
from .expr import ParseError
from .scalar import CyclotomicField, lcm


class ConfigError(ValueError):
    def __init__(self, msg: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f"{line}:{column or 1}: " if line is not None else ""
        super().__init__(where + msg)


KEYS = ("field", "algebra", "bound", "group", "scenario")
_ROOT = re.compile(r"\bz(\d+)\b")


@dataclass
class Session:
    field: CyclotomicField
    algebra: QuotientAlgebra
    group: ActionGroup | None
    names: dict = dc_field(default_factory=dict)   # group element name -> index
    bound: int = DEFAULT_BOUND
    scenario: str | None = None
    raw: dict = dc_field(default_factory=dict)
    _skew: object = dc_field(default=None, init=False, repr=False, compare=False)

    def skew(self):
        """The skew group algebra A#G, built once per session."""
        from .skew import SkewAlgebra
        if self.group is None:
            raise ConfigError("no group given")
        if self._skew is None:
            self._skew = SkewAlgebra(self.algebra, self.group)
        return self._skew


def split_header(text: str) -> tuple[dict, list]:
    """Separate ``key: value`` header lines from the rest.

    Returns ({key: (value, line number, column of value)}, [(line number, body line)]).
    Comments start with ``#``; blank lines are dropped.
    """
    head: dict = {}
    body = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        m = re.match(r"\s*([A-Za-z_]+)\s*:\s*", line)
        if m:
            key = m.group(1)
            if key not in KEYS:
                raise ConfigError(f"unknown section {key!r}", no, 1)
            if key in head:
                raise ConfigError(f"duplicate section {key!r}", no, 1)
            head[key] = (line[m.end():].strip(), no, m.end() + 1)
        else:
            body.append((no, line))
    return head, body


def infer_field_order(*texts: str) -> int:
    return lcm(*(int(k) for t in texts for k in _ROOT.findall(t))) if texts else 1


def _params(spec: str, no: int, col: int) -> tuple[str, dict]:
    parts = spec.split()
    if not parts:
        raise ConfigError("empty algebra description", no, col)
    tag, params = parts[0], {}
    for p in parts[1:]:
        if "=" not in p:
            raise ConfigError(f"expected key=value, got {p!r}", no, col + spec.index(p))
        k, v = p.split("=", 1)
        params[k] = v
    return tag, params


def build_algebra(spec: str, F: CyclotomicField, bound: int, no: int = 1, col: int = 1) -> QuotientAlgebra:
    tag, params = _params(spec, no, col)
    vals = {}
    for k, v in params.items():
        if k == "n":
            if not v.isdigit():
                raise ConfigError(f"n must be a positive integer, got {v!r}", no, col + spec.index(v))
            vals[k] = int(v)
        elif k in ("names", "order"):
            vals[k] = tuple(x for x in re.split(r"[,>]", v) if x)
        else:
            try:
                vals[k] = F.parse(v)
            except (ParseError, KeyError) as exc:
                raise ConfigError(f"bad scalar {v!r}: {exc}", no, col + spec.index(v)) from None
    try:
        return preset(tag, bound, field=F, **vals)
    except KeyError as exc:
        raise ConfigError(f"algebra {tag!r} needs parameter {exc.args[0]!r}", no, col) from None
    except AlgebraError as exc:
        raise ConfigError(str(exc), no, col) from None


def _split_items(spec: str) -> list[tuple[str, int]]:
    """Split on ';' outside brackets, keeping offsets."""
    out, depth, start = [], 0, 0
    for k, ch in enumerate(spec):
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        elif ch == ";" and depth == 0:
            out.append((spec[start:k], start))
            start = k + 1
    out.append((spec[start:], start))
    return [(s.strip(), off + len(s) - len(s.lstrip())) for s, off in out if s.strip()]


def _scalar(F, text, no, col):
    try:
        return F.parse(text)
    except (ParseError, KeyError) as exc:
        raise ConfigError(f"bad scalar {text!r}: {exc}", no, col) from None


def parse_group_item(item: str, A: QuotientAlgebra, no: int = 1, col: int = 1) -> list[GradedAutomorphism]:
    """One group item to one or more generating automorphisms."""
    n, F = A.ngens, A.field
    it = item.strip()
    try:
        m = re.fullmatch(r"S(\d+)", it)
        if m:
            k = int(m.group(1))
            if k > n or k < 2:
                raise ConfigError(f"S{k} does not act on {n} generators", no, col)
            gens = ["(1 2)"] + ([f"({' '.join(str(i) for i in range(1, k + 1))})"] if k > 2 else [])
            return [_perm(g, A) for g in gens]
        if it in ("I", "e", "id"):
            return [_diag([1] * n, A, "e")]
        if it == "-I":
            return [_diag([-1] * n, A, "-I")]
        if it.startswith("diag(") and it.endswith(")"):
            ents = [e.strip() for e in it[5:-1].split(",")]
            if len(ents) != n:
                raise ConfigError(f"diag needs {n} entries", no, col)
            return [_diag([_scalar(F, e, no, col) for e in ents], A, None)]
        if it.startswith("[") and it.endswith("]"):
            rows = [r.replace(",", " ").split() for r in it[1:-1].split(";")]
            mat = [[_scalar(F, e, no, col) for e in r] for r in rows]
            return [GradedAutomorphism(mat, A)]
        if it.startswith("-(") or it.startswith("("):
            neg = it.startswith("-")
            perm = parse_cycles(it[1:] if neg else it, n)
            rows = [[(-1 if neg else 1) if j == perm[i] else 0 for j in range(n)] for i in range(n)]
            return [GradedAutomorphism(rows, A, it)]
    except ActionError as exc:
        raise ConfigError(str(exc), no, col) from None
    raise ConfigError(f"cannot read group element {item!r}", no, col)


def _perm(spec, A):
    n = A.ngens
    perm = parse_cycles(spec, n)
    return GradedAutomorphism([[1 if j == perm[i] else 0 for j in range(n)] for i in range(n)], A, spec)


def _diag(ents, A, label):
    n = A.ngens
    return GradedAutomorphism([[ents[i] if i == j else 0 for j in range(n)] for i in range(n)], A, label)


def build_group(spec: str, A: QuotientAlgebra, no: int = 1, col: int = 1) -> tuple[ActionGroup, dict]:
    gens, named = [], {}
    for item, off in _split_items(spec):
        name = None
        m = re.match(r"([A-Za-z][A-Za-z0-9_]*)\s*=\s*(.+)$", item)
        if m and not item.startswith("diag("):
            name, item = m.group(1), m.group(2)
        got = parse_group_item(item, A, no, col + off)
        if name:
            if len(got) != 1:
                raise ConfigError(f"{name!r} must name a single element", no, col + off)
            got[0].label = name
            named[name] = got[0]
        gens.extend(got)
    if not gens:
        raise ConfigError("empty group", no, col)
    try:
        G = group_closure(gens, A)
    except ActionError as exc:
        raise ConfigError(str(exc), no, col) from None
    if named and len(named) == len(gens):
        _word_labels(G, named)
    return G, {k: G.find(g) for k, g in named.items()}


def _word_labels(G: ActionGroup, named: dict):
    """Label matrix-labelled elements by a shortest word in the named generators."""
    gen_idx = [(k, G.find(g)) for k, g in named.items()]
    words = {G.identity: ""}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for k, b in gen_idx:
                c = G.table[a][b]
                if c not in words:
                    words[c] = words[a] + k
                    nxt.append(c)
        frontier = nxt
    for i, g in enumerate(G.elements):
        if g.label.startswith("[") and words.get(i):
            g.label = words[i]


def parse_session(text: str, field_order: int | None = None, bound: int | None = None,
                  require_group: bool = False) -> tuple[Session, list]:
    """Parse the header; return (session, remaining body lines)."""
    head, body = split_header(text)
    if "algebra" not in head:
        raise ConfigError("missing 'algebra:' section", 1, 1)
    alg, ano, acol = head["algebra"]
    m = field_order
    if m is None and "field" in head:
        v, no, col = head["field"]
        if not v.isdigit() or int(v) < 1:
            raise ConfigError(f"field order must be a positive integer, got {v!r}", no, col)
        m = int(v)
    needed = infer_field_order(alg, head.get("group", ("",))[0])
    if alg.split()[:1] and alg.split()[0].lower() in ("sklyanin-xyz", "sklyanin_xyz"):
        needed = lcm(needed, 3)
    if m is None:
        m = needed
    elif m % needed:
        raise ConfigError(f"field order {m} lacks roots of order {needed}",
                          head.get("field", (None, ano))[1], 1)
    F = CyclotomicField(m)
    if bound is None:
        bound = DEFAULT_BOUND
        if "bound" in head:
            v, no, col = head["bound"]
            if not v.isdigit():
                raise ConfigError(f"bound must be a nonnegative integer, got {v!r}", no, col)
            bound = int(v)
    A = build_algebra(alg, F, bound, ano, acol)
    G, names = None, {}
    if "group" in head:
        G, names = build_group(head["group"][0], A, head["group"][1], head["group"][2])
    elif require_group:
        raise ConfigError("missing 'group:' section", 1, 1)
    sess = Session(F, A, G, names, bound, head.get("scenario", (None,))[0],
                   {k: v[0] for k, v in head.items()})
    return sess, body


def load_config(path: str, field_order: int | None = None, bound: int | None = None) -> Session:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    sess, body = parse_session(text, field_order, bound)
    if body:
        no, line = body[0]
        raise ConfigError(f"unexpected line {line.strip()!r}", no, 1)
    return sess
