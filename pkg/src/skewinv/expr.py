"""Recursive-descent parser for the shared expression grammar.

Grammar (frozen)::

    expr   := [sign] term { ("+" | "-") term }
    term   := factor { ("*" | "/") factor }
    factor := atom [ "^" INTEGER ]
    atom   := INTEGER | NAME | "(" expr ")" | sign atom
    sign   := "+" | "-"
    NAME   := letter { letter | digit | "_" }

Juxtaposition is not multiplication: ``x1 x2`` and ``2x`` are syntax errors.
Division is only defined when the right operand is a scalar; that check is
left to the evaluator.  Errors carry ``line:column``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


class ParseError(ValueError):
    def __init__(self, msg: str, text: str = "", pos: int = 0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.column = line, col
        super().__init__(f"{line}:{col}: {msg}")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            out.append(Token("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(Token("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, m.start(3))
            out.append(Token("op", ch, m.start(3)))
        pos = m.end()
    out.append(Token("end", "", len(text.rstrip())))
    return out


class Evaluator:
    """Callbacks used while parsing; ``name`` resolves identifiers."""

    def __init__(self, integer: Callable, name: Callable, divide: Callable | None = None):
        self.integer = integer
        self.name = name
        self.divide = divide


class _Parser:
    def __init__(self, text: str, ev: Evaluator):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.ev = ev

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok.pos)

    def parse(self):
        if self.peek().kind == "end":
            self.error("empty expression")
        v = self.expr()
        t = self.peek()
        if t.kind != "end":
            if t.kind in ("int", "name") or t.value == "(":
                self.error("juxtaposition is not multiplication; use '*'", t)
            self.error(f"unexpected {t.value!r}", t)
        return v

    def expr(self):
        t = self.peek()
        if t.kind == "op" and t.value in "+-":
            self.take()
            v = self.term()
            if t.value == "-":
                v = -v
        else:
            v = self.term()
        while True:
            t = self.peek()
            if t.kind == "op" and t.value in "+-":
                self.take()
                w = self.term()
                v = v + w if t.value == "+" else v - w
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            t = self.peek()
            if t.kind == "op" and t.value in "*/":
                self.take()
                w = self.factor()
                if t.value == "*":
                    v = v * w
                else:
                    if self.ev.divide is None:
                        self.error("division not supported here", t)
                    try:
                        v = self.ev.divide(v, w)
                    except ZeroDivisionError:
                        self.error("division by zero", t)
                    except ValueError as exc:
                        self.error(str(exc), t)
            else:
                return v

    def factor(self):
        v = self.atom()
        t = self.peek()
        if t.kind == "op" and t.value == "^":
            self.take()
            e = self.take()
            if e.kind != "int":
                self.error("exponent must be a nonnegative integer", e)
            k = int(e.value)
            acc = None
            for _ in range(k):
                acc = v if acc is None else acc * v
            v = acc if acc is not None else self.ev.integer(1)
        return v

    def atom(self):
        t = self.take()
        if t.kind == "int":
            return self.ev.integer(int(t.value))
        if t.kind == "name":
            try:
                return self.ev.name(t.value)
            except KeyError as exc:
                self.i -= 1
                self.error(exc.args[0] if exc.args else f"unknown name {t.value!r}", t)
        if t.kind == "op" and t.value == "(":
            v = self.expr()
            c = self.take()
            if c.kind != "op" or c.value != ")":
                self.i -= 1
                self.error("expected ')'")
            return v
        if t.kind == "op" and t.value in "+-":
            v = self.atom()
            return -v if t.value == "-" else v
        self.i -= 1
        self.error("unexpected end of input" if t.kind == "end" else f"unexpected {t.value!r}")


def parse(text: str, ev: Evaluator):
    """Parse ``text`` and fold it through ``ev``."""
    return _Parser(text, ev).parse()
