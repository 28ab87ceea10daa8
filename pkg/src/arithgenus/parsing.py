"""Text forms: a recursive-descent polynomial parser and the matching printer.

Grammar (no implicit multiplication)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('+' | '-') factor
            | INT ('/' INT)?
            | NAME ('^' INT)?
            | '(' expr ')'

Variables are ``x0 .. x{n-1}`` unless aliases are supplied.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .errors import PolynomialSyntaxError
from .polyring import GREVLEX, MonomialOrder, Polynomial

MAX_EXPONENT = 1000

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))", re.S)


class Token(NamedTuple):
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(Token("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(Token("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append(Token("op", ch, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Dict[str, int], nvars: int, line_offset: int = 0):
        self.text = text
        self.names = names
        self.nvars = nvars
        self.tokens = tokenize_safe(text, line_offset)
        self.i = 0
        self.line_offset = line_offset

    def error(self, msg: str, tok: Optional[Token] = None) -> PolynomialSyntaxError:
        tok = tok or self.peek()
        where = "end of input" if tok.kind == "end" else repr(tok.text)
        return PolynomialSyntaxError(f"{msg} (found {where})", self.text, tok.pos, self.line_offset)

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op: str) -> bool:
        tok = self.peek()
        if tok.kind == "op" and tok.text == op:
            self.i += 1
            return True
        return False

    def parse(self) -> Polynomial:
        if self.peek().kind == "end":
            raise self.error("empty expression")
        p = self.expr()
        if self.peek().kind != "end":
            raise self.error("expected an operator")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            if self.accept("+"):
                p = p + self.term()
            elif self.accept("-"):
                p = p - self.term()
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.accept("*"):
            p = p * self.factor()
        return p

    def integer(self) -> int:
        tok = self.peek()
        if tok.kind != "int":
            raise self.error("expected an integer")
        self.i += 1
        return int(tok.text)

    def factor(self) -> Polynomial:
        tok = self.peek()
        if self.accept("-"):
            return -self.factor()
        if self.accept("+"):
            return self.factor()
        if tok.kind == "int":
            num = self.integer()
            if self.accept("/"):
                den_tok = self.peek()
                den = self.integer()
                if den == 0:
                    raise self.error("zero denominator", den_tok)
                return Polynomial.constant(Fraction(num, den), self.nvars)
            return Polynomial.constant(num, self.nvars)
        if tok.kind == "name":
            self.i += 1
            idx = self.names.get(tok.text)
            if idx is None:
                raise PolynomialSyntaxError(
                    f"unknown variable {tok.text!r}", self.text, tok.pos, self.line_offset
                )
            exps = [0] * self.nvars
            if self.accept("^"):
                exp_tok = self.peek()
                e = self.integer()
                if e > MAX_EXPONENT:
                    raise self.error(f"exponent exceeds {MAX_EXPONENT}", exp_tok)
                exps[idx] = e
            else:
                exps[idx] = 1
            return Polynomial.monomial(exps)
        if self.accept("("):
            p = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return p
        raise self.error("expected a coefficient, variable or '('")


def tokenize_safe(text: str, line_offset: int = 0) -> List[Token]:
    try:
        return tokenize(text)
    except PolynomialSyntaxError as exc:
        raise PolynomialSyntaxError(exc.reason, text, exc.pos, line_offset) from None


def default_names(nvars: int) -> List[str]:
    return [f"x{i}" for i in range(nvars)]


def _name_table(nvars: int, aliases: Optional[Sequence[str]]) -> Dict[str, int]:
    table = {name: i for i, name in enumerate(default_names(nvars))}
    if aliases:
        if len(aliases) != nvars:
            raise ValueError(f"{len(aliases)} aliases declared for {nvars} variables")
        for i, name in enumerate(aliases):
            table[name] = i
    return table


def parse_polynomial(
    text: str, nvars: int, aliases: Optional[Sequence[str]] = None, line_offset: int = 0
) -> Polynomial:
    """Parse ``text`` into a polynomial in ``nvars`` variables."""
    return _Parser(text, _name_table(nvars, aliases), nvars, line_offset).parse()


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(
    p: Polynomial, names: Optional[Sequence[str]] = None, order: MonomialOrder = GREVLEX
) -> str:
    """Canonical text for ``p``: terms in descending ``order``, reparseable."""
    names = list(names) if names else default_names(p.nvars)
    if p.is_zero():
        return "0"
    out = []
    for m, c in p.sorted_terms(order):
        factors = [
            names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(m) if a
        ]
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


# -- generator files --------------------------------------------------------


class GeneratorFile(NamedTuple):
    nvars: int
    generators: Tuple[Polynomial, ...]
    names: Tuple[str, ...]


_AMBIENT = re.compile(r"^\s*ambient\s*:\s*(\d+)\s*$")
_VARS = re.compile(r"^\s*vars\s*:(.*)$")


def parse_generator_file(text: str) -> GeneratorFile:
    """Read ``ambient: N`` / optional ``vars: ...`` / one polynomial per line.

    ``#`` starts a comment.  ``N`` is the projective index, so the ring has
    ``N + 1`` variables.
    """
    lines = text.splitlines()
    nvars = None
    aliases = None
    gens = []
    for lineno, raw in enumerate(lines):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if nvars is None:
            m = _AMBIENT.match(line)
            if not m:
                raise PolynomialSyntaxError(
                    "first line must be 'ambient: N'", line, len(line) - len(line.lstrip()), lineno
                )
            nvars = int(m.group(1)) + 1
            continue
        m = _VARS.match(line)
        if m and not gens and aliases is None:
            aliases = m.group(1).split()
            if len(aliases) != nvars:
                raise PolynomialSyntaxError(
                    f"declared {len(aliases)} variable names for {nvars} variables", line, 0, lineno
                )
            continue
        gens.append(parse_polynomial(line, nvars, aliases, line_offset=lineno))
    if nvars is None:
        raise PolynomialSyntaxError("missing 'ambient: N' header", text, len(text))
    names = tuple(aliases) if aliases else tuple(default_names(nvars))
    return GeneratorFile(nvars, tuple(gens), names)


def format_generator_file(nvars: int, generators: Sequence[Polynomial], names=None) -> str:
    lines = [f"ambient: {nvars - 1}"]
    if names and list(names) != default_names(nvars):
        lines.append("vars: " + " ".join(names))
    lines.extend(format_polynomial(g, names) for g in generators)
    return "\n".join(lines) + "\n"
