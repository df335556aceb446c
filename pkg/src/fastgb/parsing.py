"""Reading and writing polynomial system files.

Format::

    # comment
    vars: x, y, z          # declaration order is variable precedence
    order: grevlex         # lex | grlex | grevlex   (default grevlex)
    field: gf 32003        # q | gf <p>              (default q)
    x^2*y - 3*z + 1        # one polynomial per line
    (x + y)^2 - 1/2*z

Polynomials use ``+ - * ^``, parentheses, integer literals and division by
non-zero constants.
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple

from .fields import field_from_descriptor
from .monomials import ORDER_KINDS
from .polynomial import Polynomial, PolyRing


class ParseError(ValueError):
    def __init__(self, message: str, line: int = None, column: int = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str, line: int):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            j = pos
            while text[j].isspace():
                j += 1
            raise ParseError(f"unexpected character {text[j]!r}", line, j + 1)
        col = m.start(m.lastindex) + 1
        if m.group(1):
            tokens.append(("num", int(m.group(1)), col))
        elif m.group(2):
            tokens.append(("name", m.group(2), col))
        else:
            tokens.append(("op", "^" if m.group(3) == "**" else m.group(3), col))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _PolyParser:
    def __init__(self, ring: PolyRing, text: str, line: int):
        self.ring = ring
        self.line = line
        self.tokens = _tokenize(text, line)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()
            rhs = self.factor()
            if op[1] == "*":
                acc = acc * rhs
            else:
                if not rhs or any(any(m) for m, _ in rhs.terms):
                    self.error("division only by non-zero constants", op)
                acc = acc.scale(self.ring.field.inv(rhs.hc))
        return acc

    def factor(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a non-negative integer", tok)
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.ring.constant(val)
        if kind == "name":
            if val not in self.ring.variables:
                self.error(f"unknown variable {val!r}", tok)
            return self.ring.var(val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.error("expected ')'")
            self.take()
            return inner
        if kind == "end":
            self.error("unexpected end of line", tok)
        self.error(f"unexpected {val!r}", tok)


def parse_polynomial(ring: PolyRing, text: str, line: int = 1) -> Polynomial:
    return _PolyParser(ring, text, line).parse()


_HEADER = re.compile(r"^\s*(vars|order|field)\s*:(.*)$", re.IGNORECASE)


def parse_system(text: str, order: Optional[str] = None, field: Optional[str] = None
                 ) -> Tuple[PolyRing, List[Polynomial]]:
    """Parse a system file into its ring and generators.

    ``order`` / ``field`` override the values declared in the file.
    """
    variables = None
    file_order, file_field = "grevlex", "q"
    body: List[Tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if m:
            if body:
                raise ParseError(f"'{m.group(1)}:' header after the first polynomial", lineno, 1)
            key, val = m.group(1).lower(), m.group(2).strip()
            if key == "vars":
                names = [v.strip() for v in val.split(",")]
                for v in names:
                    if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                        raise ParseError(f"bad variable name {v!r}", lineno)
                if len(set(names)) != len(names):
                    raise ParseError("duplicate variable name", lineno)
                variables = names
            elif key == "order":
                file_order = val.lower()
                if file_order not in ORDER_KINDS:
                    raise ParseError(f"unknown order {val!r}; expected one of {', '.join(ORDER_KINDS)}", lineno)
            else:
                file_field = val
                try:
                    field_from_descriptor(val)
                except ValueError as e:
                    raise ParseError(str(e), lineno) from None
            continue
        body.append((lineno, line))
    if variables is None:
        raise ParseError("missing 'vars:' declaration")
    chosen_order = (order or file_order).lower()
    if chosen_order not in ORDER_KINDS:
        raise ParseError(f"unknown order {chosen_order!r}")
    try:
        fld = field_from_descriptor(field or file_field)
    except ValueError as e:
        raise ParseError(str(e)) from None
    ring = PolyRing(variables, chosen_order, fld)
    polys = []
    for lineno, line in body:
        p = parse_polynomial(ring, line, lineno)
        if not p:
            raise ParseError("polynomial is zero", lineno)
        polys.append(p)
    if not polys:
        raise ParseError("no polynomials in system")
    return ring, polys


def format_system(ring: PolyRing, polys: List[Polynomial]) -> str:
    lines = [
        f"vars: {', '.join(ring.variables)}",
        f"order: {ring.order.kind}",
        f"field: {ring.field.descriptor()}",
    ]
    lines.extend(str(p) for p in polys)
    return "\n".join(lines) + "\n"
