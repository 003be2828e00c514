"""The ring/ideal DSL and its polynomial grammar.

Session files look like::

    # quadric cone
    char 5
    vars x y z
    order grevlex
    mod x*y - z^2
    ideal m = x, y, z
    prime P = y, z height 2
    param f = x

Polynomials use integer coefficients, ``+ - * ^`` and parentheses, are
whitespace-insensitive, and are reduced mod p on the spot.  Errors carry
line and column positions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .errors import InputError
from .field import PrimeField
from .ideals import Ideal
from .orders import ORDER_KINDS, MonomialOrder
from .poly import Polynomial
from .ring import MAX_VARS, PresentedRing

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()]))")


class _PolyParser:
    """Recursive-descent parser for the polynomial grammar."""

    def __init__(self, text: str, line: int, col0: int, ring_ctx):
        self.text = text
        self.line = line
        self.col0 = col0
        self.field, self.order, self.names = ring_ctx
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None or m.end() == pos:
                rest = text[pos:].lstrip()
                if not rest:
                    break
                self._fail(pos + (len(text[pos:]) - len(rest)), "unexpected character %r" % rest[0])
            kind = "int" if m.group(1) else ("name" if m.group(2) else "op")
            value = m.group(1) or m.group(2) or m.group(3)
            self.tokens.append((kind, value, m.end() - len(value)))
            pos = m.end()
        self.i = 0

    def _fail(self, col, msg):
        raise InputError("line %d, column %d: %s" % (self.line, self.col0 + col + 1, msg))

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            self._fail(0, "empty polynomial")
        poly = self._expr()
        kind, value, col = self._peek()
        if kind is not None:
            self._fail(col, "unexpected token %r" % value)
        return poly

    def _expr(self) -> Polynomial:
        poly = self._term()
        while True:
            kind, value, _ = self._peek()
            if kind == "op" and value in "+-":
                self._next()
                rhs = self._term()
                poly = poly + rhs if value == "+" else poly - rhs
            else:
                return poly

    def _term(self) -> Polynomial:
        sign = 1
        while True:
            kind, value, _ = self._peek()
            if kind == "op" and value in "+-":
                self._next()
                if value == "-":
                    sign = -sign
            else:
                break
        poly = self._factor()
        while True:
            kind, value, _ = self._peek()
            if kind == "op" and value == "*":
                self._next()
                poly = poly * self._factor()
            else:
                break
        return poly if sign == 1 else -poly

    def _factor(self) -> Polynomial:
        poly = self._atom()
        kind, value, _ = self._peek()
        if kind == "op" and value == "^":
            self._next()
            kind, value, col = self._next()
            if kind != "int":
                self._fail(col, "exponent must be a nonnegative integer")
            poly = poly ** int(value)
        return poly

    def _atom(self) -> Polynomial:
        kind, value, col = self._next()
        nvars = len(self.names)
        if kind == "int":
            return Polynomial.constant(self.field, self.order, nvars, int(value))
        if kind == "name":
            try:
                idx = self.names.index(value)
            except ValueError:
                self._fail(col, "unknown variable %r" % value)
            return Polynomial.variable(self.field, self.order, nvars, idx)
        if kind == "op" and value == "(":
            poly = self._expr()
            kind, value, col = self._next()
            if value != ")":
                self._fail(col, "expected ')'")
            return poly
        if kind is None:
            self._fail(col, "unexpected end of polynomial")
        self._fail(col, "unexpected token %r" % value)


def parse_polynomial(text, line, col0, field, order, names) -> Polynomial:
    return _PolyParser(text, line, col0, (field, order, tuple(names))).parse()


@dataclass
class SessionInput:
    """A parsed session: ring presentation plus named ideals, primes, params."""

    p: int
    variables: tuple
    order_kind: str
    relations: tuple  # of Polynomial
    ideals: dict = dc_field(default_factory=dict)  # name -> tuple of Polynomial
    primes: dict = dc_field(default_factory=dict)  # name -> (gens tuple, declared height)
    params: dict = dc_field(default_factory=dict)  # name -> Polynomial

    def build_ring(self, order_kind=None) -> PresentedRing:
        kind = order_kind or self.order_kind
        field = PrimeField(self.p)
        order = MonomialOrder(kind, len(self.variables))
        rels = [Polynomial(field, order, len(self.variables), r.terms) for r in self.relations]
        return PresentedRing(field, self.variables, order, rels)

    def _rebuild(self, polys, ring):
        return [ring.poly(g.terms) for g in polys]

    def ideal(self, name, ring=None) -> Ideal:
        ring = ring or self.build_ring()
        if name in self.ideals:
            return Ideal(ring, self._rebuild(self.ideals[name], ring))
        if name in self.primes:
            return Ideal(ring, self._rebuild(self.primes[name][0], ring))
        raise InputError("unknown ideal %r" % name)

    def prime(self, name, ring=None):
        if name not in self.primes:
            raise InputError("unknown prime %r" % name)
        ring = ring or self.build_ring()
        gens, height = self.primes[name]
        return Ideal(ring, self._rebuild(gens, ring)), height

    def param(self, name, ring=None) -> Polynomial:
        if name not in self.params:
            raise InputError("unknown parameter %r" % name)
        ring = ring or self.build_ring()
        return ring.poly(self.params[name].terms)

    def to_text(self) -> str:
        """Canonical DSL rendering; reparsing yields an identical session."""
        names = self.variables
        out = ["char %d" % self.p, "vars %s" % " ".join(names), "order %s" % self.order_kind]
        for r in self.relations:
            out.append("mod %s" % r.render(names))
        for name, gens in self.ideals.items():
            out.append("ideal %s = %s" % (name, ", ".join(g.render(names) for g in gens)))
        for name, (gens, h) in self.primes.items():
            out.append(
                "prime %s = %s height %d" % (name, ", ".join(g.render(names) for g in gens), h)
            )
        for name, g in self.params.items():
            out.append("param %s = %s" % (name, g.render(names)))
        return "\n".join(out) + "\n"


def _strip_comment(line: str) -> str:
    idx = line.find("#")
    return line if idx < 0 else line[:idx]


def parse_session(text: str) -> SessionInput:
    p = None
    variables = None
    order_kind = "grevlex"
    field = None
    relations = []
    ideals = {}
    primes = {}
    params = {}
    seen_names = set()

    def ring_ready(lineno):
        if p is None:
            raise InputError("line %d: 'char' must be declared first" % lineno)
        if variables is None:
            raise InputError("line %d: 'vars' must be declared before polynomials" % lineno)

    def order():
        return MonomialOrder(order_kind, len(variables))

    def parse_poly(chunk, lineno, col0):
        return parse_polynomial(chunk, lineno, col0, field, order(), variables)

    def parse_gen_list(rhs, lineno, col0):
        gens = []
        offset = 0
        for part in rhs.split(","):
            stripped = part.strip()
            if not stripped:
                raise InputError("line %d: empty generator in list" % lineno)
            gens.append(parse_poly(stripped, lineno, col0 + offset + part.index(stripped[0])))
            offset += len(part) + 1
        return tuple(gens)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        col0 = raw.index(keyword) + len(keyword) + 1
        if keyword == "char":
            if p is not None:
                raise InputError("line %d: duplicate 'char'" % lineno)
            try:
                p = int(rest)
            except ValueError:
                raise InputError("line %d: characteristic must be an integer" % lineno) from None
            try:
                field = PrimeField(p)
            except InputError as exc:
                raise InputError("line %d: %s" % (lineno, exc)) from None
        elif keyword == "vars":
            if variables is not None:
                raise InputError("line %d: duplicate 'vars'" % lineno)
            names = rest.split()
            if not names:
                raise InputError("line %d: 'vars' needs at least one name" % lineno)
            for name in names:
                if not _NAME_RE.fullmatch(name):
                    raise InputError("line %d: invalid variable name %r" % (lineno, name))
            if len(set(names)) != len(names):
                raise InputError("line %d: variable names must be unique" % lineno)
            if len(names) > MAX_VARS:
                raise InputError("line %d: at most %d variables" % (lineno, MAX_VARS))
            variables = tuple(names)
        elif keyword == "order":
            if rest not in ORDER_KINDS:
                raise InputError(
                    "line %d: order must be one of %s" % (lineno, ", ".join(ORDER_KINDS))
                )
            if relations or ideals or primes or params:
                raise InputError("line %d: 'order' must precede polynomials" % lineno)
            order_kind = rest
        elif keyword == "mod":
            ring_ready(lineno)
            rel = parse_poly(rest, lineno, col0)
            if rel.is_zero():
                raise InputError("line %d: relation is zero" % lineno)
            if rel.constant_term() != 0:
                raise InputError("line %d: relation has nonzero constant term" % lineno)
            relations.append(rel)
        elif keyword in ("ideal", "prime", "param"):
            ring_ready(lineno)
            name, eq, rhs = rest.partition("=")
            name = name.strip()
            if not eq or not _NAME_RE.fullmatch(name):
                raise InputError("line %d: expected '%s <name> = ...'" % (lineno, keyword))
            if name in seen_names or name in variables:
                raise InputError("line %d: name %r already in use" % (lineno, name))
            seen_names.add(name)
            rhs_col = col0 + rest.index("=") + 1
            if keyword == "ideal":
                ideals[name] = parse_gen_list(rhs, lineno, rhs_col)
            elif keyword == "param":
                params[name] = parse_poly(rhs.strip(), lineno, rhs_col)
            else:
                m = re.search(r"\bheight\s+(\d+)\s*$", rhs)
                if not m:
                    raise InputError("line %d: prime declaration needs 'height <h>'" % lineno)
                gens = parse_gen_list(rhs[: m.start()].rstrip().rstrip(","), lineno, rhs_col)
                primes[name] = (gens, int(m.group(1)))
        else:
            raise InputError("line %d: unknown directive %r" % (lineno, keyword))

    if p is None:
        raise InputError("missing 'char' directive")
    if variables is None:
        raise InputError("missing 'vars' directive")
    session = SessionInput(
        p=p,
        variables=variables,
        order_kind=order_kind,
        relations=tuple(relations),
        ideals=ideals,
        primes=primes,
        params=params,
    )
    # Validate the presentation eagerly so errors surface at parse time.
    session.build_ring()
    return session
