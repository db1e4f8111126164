"""Line-oriented problem files and the element literal grammar.

A problem file looks like::

    # comment
    ring ZZ/2 x ZZ/4 x ZZ/8
    vars X Y
    order lex
    rank 2
    module_order pot
    gen (0,2,1)*X*Y^2*e2 + (0,1,0)*e2

Element literals are ``+``/``-`` separated terms
``<coeff>[*<var>[^<exp>]]...[*e<k>]``.  A coefficient is an integer (applied
to every ring component) or a parenthesized tuple with one entry per
component; it may be omitted when a variable or basis marker follows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .coeff import RingSpec
from .exceptions import PRGroebnerError, StructuralError
from .order import BASE_ORDERS, MODULE_RULES, TermOrder
from .poly import FreeModule, ModuleElement
from .render import format_element

E_SYNTAX = "E_SYNTAX"
E_HEADER = "E_HEADER"
E_RING = "E_RING"
E_UNKNOWN_VARIABLE = "E_UNKNOWN_VARIABLE"
E_BASIS_RANGE = "E_BASIS_RANGE"
E_ARITY = "E_ARITY"
E_ZERO_GENERATOR = "E_ZERO_GENERATOR"

_BASIS_RE = re.compile(r"e(\d+)$")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class ParseError(PRGroebnerError, ValueError):
    """Malformed input, with a 1-based position and an error code."""

    def __init__(self, code: str, message: str, line: int = 0, column: int = 0,
                 expected: Optional[str] = None):
        self.code = code
        self.line = line
        self.column = column
        self.expected = expected
        where = f"line {line}, column {column}: " if line else (
            f"column {column}: " if column else "")
        tail = f" (expected {expected})" if expected else ""
        super().__init__(f"{code}: {where}{message}{tail}")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            tokens.append(("INT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("NAME", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            tokens.append((m.group(3), m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _ElementParser:
    def __init__(self, text: str, module: FreeModule, line: int = 0, offset: int = 0):
        self.text = text
        self.module = module
        self.line = line
        self.offset = offset
        self.tokens = _tokenize(text)
        self.i = 0
        self.var_index = {name: k for k, name in enumerate(module.variables)}

    def error(self, code, message, tok=None, expected=None):
        tok = tok or self.tokens[self.i]
        raise ParseError(code, message, self.line, self.offset + tok[2] + 1, expected)

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, expected=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            shown = tok[1] or "end of input"
            self.error(E_SYNTAX, f"unexpected {shown!r}", tok, expected or kind)
        self.i += 1
        return tok

    def parse(self) -> ModuleElement:
        terms = []
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        terms.append(self.term(sign))
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            terms.append(self.term(sign))
        if self.peek()[0] != "EOF":
            self.error(E_SYNTAX, f"unexpected {self.peek()[1]!r}", expected="'+', '-' or end")
        return self.module.from_terms(terms)

    def coefficient(self):
        ring = self.module.ring
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            return ring.from_int(int(tok[1]))
        if tok[0] == "(":
            start = self.take()
            values = [self.signed_int()]
            while self.peek()[0] == ",":
                self.take()
                values.append(self.signed_int())
            self.take(")", "')'")
            if len(values) != len(ring):
                self.error(
                    E_ARITY,
                    f"coefficient has {len(values)} components, ring {ring} has {len(ring)}",
                    start,
                )
            return ring.normalize(values)
        return None

    def signed_int(self) -> int:
        neg = False
        if self.peek()[0] == "-":
            self.take()
            neg = True
        tok = self.take("INT", "integer")
        return -int(tok[1]) if neg else int(tok[1])

    def factor(self, exps: list, state: dict):
        tok = self.take("NAME", "variable or basis marker")
        name = tok[1]
        if name in self.var_index:
            power = 1
            if self.peek()[0] == "^":
                self.take()
                power = int(self.take("INT", "exponent")[1])
            exps[self.var_index[name]] += power
            return
        m = _BASIS_RE.match(name)
        if m:
            k = int(m.group(1))
            if not 1 <= k <= self.module.rank:
                self.error(E_BASIS_RANGE, f"basis index {k} outside 1..{self.module.rank}", tok)
            if state.get("basis") is not None:
                self.error(E_SYNTAX, "a term carries at most one basis marker", tok)
            state["basis"] = k
            return
        self.error(E_UNKNOWN_VARIABLE, f"unknown variable {name!r}", tok)

    def term(self, sign: int):
        ring = self.module.ring
        exps = [0] * self.module.nvars
        state: dict = {"basis": None}
        coeff = self.coefficient()
        if coeff is None:
            if self.peek()[0] != "NAME":
                self.error(E_SYNTAX, f"unexpected {self.peek()[1] or 'end of input'!r}",
                           expected="coefficient, variable or basis marker")
            coeff = ring.one
            self.factor(exps, state)
        while self.peek()[0] == "*":
            self.take()
            self.factor(exps, state)
        basis = state["basis"]
        if basis is None:
            if self.module.rank > 1:
                self.error(E_BASIS_RANGE, "basis marker e<k> required when rank > 1",
                           expected="'*e<k>'")
            basis = 1
        if sign < 0:
            coeff = ring.neg(coeff)
        return (coeff, tuple(exps), basis)


def parse_element(text: str, module: FreeModule, line: int = 0, offset: int = 0) -> ModuleElement:
    """Parse one element literal against ``module``."""
    return _ElementParser(text, module, line, offset).parse()


def parse_coefficient(text: str, ring: RingSpec):
    """Parse a ring element literal: an integer or ``(a,b,...)``."""
    module = FreeModule(ring, (), 1)
    f = parse_element(text, module)
    if len(f.terms) > 1:
        raise ParseError(E_SYNTAX, "expected a single coefficient")
    return f.lc


@dataclass
class ProblemFile:
    ring: RingSpec
    variables: tuple
    order: str = "lex"
    rank: int = 1
    module_order: str = "pot"
    generators: list = field(default_factory=list)

    @property
    def module(self) -> FreeModule:
        return FreeModule(self.ring, self.variables, self.rank,
                          TermOrder(self.order, self.module_order))

    def __eq__(self, other):
        if not isinstance(other, ProblemFile):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.variables == other.variables
            and self.order == other.order
            and self.rank == other.rank
            and self.module_order == other.module_order
            and list(self.generators) == list(other.generators)
        )


def parse(text: str) -> ProblemFile:
    """Parse a problem file; raises :class:`ParseError` with a position."""
    header: dict = {}
    gen_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip())
        word, _, rest = stripped.partition(" ")
        rest_offset = indent + len(word) + 1 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if word == "gen":
            gen_lines.append((lineno, rest, rest_offset))
            continue
        if word not in ("ring", "vars", "order", "rank", "module_order"):
            raise ParseError(E_HEADER, f"unknown directive {word!r}", lineno, indent + 1,
                             "ring, vars, order, rank, module_order or gen")
        if word in header:
            raise ParseError(E_HEADER, f"duplicate directive {word!r}", lineno, indent + 1)
        if gen_lines:
            raise ParseError(E_HEADER, f"{word!r} must precede the generators", lineno,
                             indent + 1)
        header[word] = (lineno, rest, rest_offset)

    def need(word):
        if word not in header:
            raise ParseError(E_HEADER, f"missing {word!r} directive", 1, 1, word)
        return header[word]

    lineno, rest, col = need("ring")
    try:
        ring = RingSpec.parse(rest)
    except StructuralError as exc:
        raise ParseError(E_RING, str(exc), lineno, col + 1, "ZZ or ZZ/<N> joined by 'x'")

    lineno, rest, col = need("vars")
    variables = tuple(rest.split())
    for name in variables:
        if not _NAME_RE.match(name) or _BASIS_RE.match(name):
            raise ParseError(E_HEADER, f"invalid variable name {name!r}", lineno,
                             col + rest.index(name) + 1)
    if len(set(variables)) != len(variables):
        raise ParseError(E_HEADER, "duplicate variable name", lineno, col + 1)

    order = "lex"
    if "order" in header:
        lineno, rest, col = header["order"]
        if rest not in BASE_ORDERS:
            raise ParseError(E_HEADER, f"unknown order {rest!r}", lineno, col + 1,
                             " | ".join(BASE_ORDERS))
        order = rest

    rank = 1
    if "rank" in header:
        lineno, rest, col = header["rank"]
        if not rest.isdigit() or int(rest) < 1:
            raise ParseError(E_HEADER, f"invalid rank {rest!r}", lineno, col + 1,
                             "positive integer")
        rank = int(rest)

    module_order = "pot"
    if "module_order" in header:
        lineno, rest, col = header["module_order"]
        if rest not in MODULE_RULES:
            raise ParseError(E_HEADER, f"unknown module order {rest!r}", lineno, col + 1,
                             " | ".join(MODULE_RULES))
        module_order = rest

    problem = ProblemFile(ring, variables, order, rank, module_order, [])
    module = problem.module
    for lineno, rest, col in gen_lines:
        f = parse_element(rest, module, lineno, col)
        if f.is_zero():
            raise ParseError(E_ZERO_GENERATOR, "generator is zero", lineno, col + 1,
                             "a nonzero element")
        problem.generators.append(f)
    return problem


def render(problem: ProblemFile) -> str:
    lines = [
        f"ring {problem.ring}",
        "vars " + " ".join(problem.variables),
        f"order {problem.order}",
        f"rank {problem.rank}",
        f"module_order {problem.module_order}",
    ]
    lines += [f"gen {format_element(g)}" for g in problem.generators]
    return "\n".join(lines) + "\n"
