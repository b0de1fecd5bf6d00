"""Reader and printer for ``.ideal`` files.

::

    # comment
    vars T1,T2,T3,T4
    char 7                  (optional)
    torus T1,T2,T3          (optional, restricts the torus)
    (T3-T1)*(T3-T2)*T2
    (T1+T2-T3)*T4

Each polynomial line follows::

    expr   := term (('+'|'-') term)*
    term   := ('-')? factor ('*' factor)*
    factor := base ('^' uint)?
    base   := uint | name | '(' expr ')'
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .polyring import PolyRing, format_poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_DIRECTIVE = re.compile(r"\s*(vars|char|torus)(\s+|\Z)")
_OPS = set("+-*^()")


@dataclass
class IdealFile:
    ring: PolyRing
    polynomials: list
    torus: tuple = None  # 1-based variable indices, None for all

    @property
    def names(self):
        return self.ring.names

    @property
    def characteristic(self):
        return self.ring.characteristic


def _tokens(text, lineno):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == m.start() or (m.group(0).strip() == "" and m.end() == len(text)):
            break
        col = m.start(m.lastindex) + 1
        if m.group(1) is not None:
            out.append(("int", m.group(1), col))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in _OPS:
                raise ParseError(f"malformed token {ch!r}", lineno, col)
            out.append(("op", ch, col))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, ring, index, tokens, lineno):
        self.ring = ring
        self.index = index
        self.toks = tokens
        self.pos = 0
        self.line = lineno

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[0] != "op" or tok[1] != value:
            self.fail(f"expected {value!r}", tok)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty polynomial")
        f = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return f

    def expr(self):
        f = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term(signed=False)
            f = f + t if op == "+" else f - t
        return f

    def term(self, signed=True):
        neg = False
        if signed and self.peek()[:2] == ("op", "-"):
            self.take()
            neg = True
        f = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            f = f * self.factor()
        return -f if neg else f

    def factor(self):
        f = self.base()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be an unsigned integer", tok)
            f = f ** int(tok[1])
        return f

    def base(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return self.ring.const(int(val))
        if kind == "name":
            if val not in self.index:
                self.fail(f"unknown variable {val}", tok)
            return self.ring.var(self.index[val])
        if kind == "op" and val == "(":
            f = self.expr()
            self.expect(")")
            return f
        if kind == "end":
            self.fail("unexpected end of line", tok)
        self.fail(f"unexpected {val!r}", tok)


def _name_list(rest, lineno, offset):
    names = [n.strip() for n in rest.split(",")]
    for n in names:
        if not _NAME.match(n):
            raise ParseError(f"bad variable name {n!r}", lineno, offset + 1)
    return names


def parse_polynomial(text, ring, lineno=1):
    index = {name: i + 1 for i, name in enumerate(ring.names)}
    return _Parser(ring, index, _tokens(text, lineno), lineno).parse()


def parse_ideal_file(text):
    ring = None
    names = None
    char = 0
    torus_names = None
    polys = []
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        m = _DIRECTIVE.match(body)
        if m and not (m.group(2) and body[m.end():].lstrip()[:1] in _OPS):
            word = m.group(1)
            rest = body[m.end():].strip()
            col = m.start(1) + 1
            if word == "vars":
                if names is not None:
                    raise ParseError("duplicate vars directive", lineno, col)
                names = _name_list(rest, lineno, m.end())
                if len(set(names)) != len(names):
                    raise ParseError("duplicate variable names", lineno, col)
                continue
            if names is None:
                raise ParseError("missing vars directive", lineno, col)
            if raw:
                raise ParseError(f"{word} directive after the first polynomial", lineno, col)
            if word == "char":
                if not rest.isdigit():
                    raise ParseError("char expects a prime", lineno, m.end() + 1)
                char = int(rest)
            else:
                torus_names = _name_list(rest, lineno, m.end())
            continue
        if names is None:
            raise ParseError("missing vars directive", lineno, 1)
        raw.append((lineno, body))
    if names is None:
        raise ParseError("missing vars directive", 1, 1)
    try:
        ring = PolyRing(tuple(names), char)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None
    for lineno, body in raw:
        polys.append(parse_polynomial(body, ring, lineno))
    torus = None
    if torus_names is not None:
        unknown = [n for n in torus_names if n not in names]
        if unknown:
            raise ParseError(f"unknown variable {unknown[0]}", 1, 1)
        torus = tuple(sorted(names.index(n) + 1 for n in set(torus_names)))
    return IdealFile(ring, polys, torus)


def print_ideal_file(ideal):
    lines = ["vars " + ",".join(ideal.ring.names)]
    if ideal.ring.characteristic:
        lines.append(f"char {ideal.ring.characteristic}")
    if ideal.torus is not None:
        lines.append("torus " + ",".join(ideal.ring.names[i - 1] for i in ideal.torus))
    lines.extend(format_poly(f) for f in ideal.polynomials)
    return "\n".join(lines) + "\n"


def read_ideal_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse_ideal_file(fh.read())
