"""Text notation for symbols: recursive-descent parser and pretty-printer.

Grammar (whitespace insignificant):

    expr   := ["-"] term {("+"|"-") term}
    term   := factor {"*" factor}
    factor := base ["^" nat]
    base   := number | "z" nat | "conj" "(" expr ")" | "exp" "(" expr ")"
            | "K" "(" const {"," const} ")" | "(" expr ")"
    number := float | float "i"

Complex literals are written (a+bi) and rendered with 14 significant
digits; "conj" is the only conjugation operator.  exp arguments must be affine in z_1..z_n and conj(z_1)..
conj(z_n) once constants are folded (the constant part folds into the
coefficient).  K(w_1,..,w_n) lowers to exp(z . conj(w)), the reproducing
kernel at w.

Every diagnostic is a SymbolSyntaxError carrying the character position;
parsing never raises anything else on bad input.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass

from .symbols import Symbol, SymbolTerm, constant, coordinate, kernel


class SymbolSyntaxError(ValueError):
    """Parse failure with a character position into the source text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?i?)
      | (?P<coord>z\d+)
      | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
      | (?P<op>[-+*^(),])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"conj", "exp", "K"}


@dataclass(frozen=True)
class _Token:
    kind: str  # number | coord | name | op | end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise SymbolSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append(_Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(_Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, n: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.n = n

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise SymbolSyntaxError(f"expected {op!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return self.advance()

    # expr := ["-"] term {("+"|"-") term}
    def expr(self) -> Symbol:
        negate = False
        if self.peek().kind == "op" and self.peek().text == "-":
            self.advance()
            negate = True
        out = self.term()
        if negate:
            out = -out
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    # term := factor {"*" factor}
    def term(self) -> Symbol:
        out = self.factor()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.advance()
            out = out * self.factor()
        return out

    # factor := base ["^" nat]
    def factor(self) -> Symbol:
        out = self.base()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.advance()
            out = out ** self.nat()
        return out

    def nat(self) -> int:
        tok = self.peek()
        if tok.kind != "number" or not tok.text.isdigit():
            raise SymbolSyntaxError("expected a non-negative integer", tok.pos)
        self.advance()
        return int(tok.text)

    def base(self) -> Symbol:
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            if tok.text.endswith("i"):
                return constant(self.n, 1j * float(tok.text[:-1]))
            return constant(self.n, float(tok.text))
        if tok.kind == "coord":
            self.advance()
            k = int(tok.text[1:])
            if not 1 <= k <= self.n:
                raise SymbolSyntaxError(
                    f"coordinate z{k} out of range 1..{self.n}", tok.pos
                )
            return coordinate(self.n, k)
        if tok.kind == "name":
            if tok.text == "conj":
                self.advance()
                self.expect_op("(")
                inner = self.expr()
                self.expect_op(")")
                return inner.conj()
            if tok.text == "exp":
                self.advance()
                self.expect_op("(")
                inner = self.expr()
                self.expect_op(")")
                return self._lower_exp(inner, tok.pos)
            if tok.text == "K":
                self.advance()
                self.expect_op("(")
                args = [self._const_arg()]
                while self.peek().kind == "op" and self.peek().text == ",":
                    self.advance()
                    args.append(self._const_arg())
                self.expect_op(")")
                if len(args) != self.n:
                    raise SymbolSyntaxError(
                        f"K takes {self.n} components here, found {len(args)}", tok.pos
                    )
                return kernel(args)
            raise SymbolSyntaxError(f"unknown identifier {tok.text!r}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise SymbolSyntaxError(
            f"expected a value, found {tok.text or 'end of input'!r}", tok.pos
        )

    def _const_arg(self) -> complex:
        tok = self.peek()
        value = self.expr()
        if not value.is_constant:
            raise SymbolSyntaxError("kernel components must be constants", tok.pos)
        return value.constant_value()

    def _lower_exp(self, arg: Symbol, pos: int) -> Symbol:
        """exp of an affine argument; the constant part folds into the coefficient."""
        const = 0j
        c = [0j] * self.n
        d = [0j] * self.n
        for t in arg.terms:
            if any(x != 0 for x in t.c) or any(x != 0 for x in t.d):
                raise SymbolSyntaxError("exp argument must not contain exp", pos)
            if t.degree == 0:
                const += t.coef
            elif t.degree == 1:
                if sum(t.a) == 1:
                    c[t.a.index(1)] += t.coef
                else:
                    d[t.b.index(1)] += t.coef
            else:
                raise SymbolSyntaxError(
                    "exp argument must be affine in the coordinates", pos
                )
        zeros = (0,) * self.n
        return Symbol(
            self.n,
            [SymbolTerm(cmath.exp(const), zeros, zeros, tuple(c), tuple(d))],
        )


def parse_symbol(text: str, n: int) -> Symbol:
    """Parse the notation above into a canonical symbol on C^n."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if not text.strip():
        raise SymbolSyntaxError("empty input", 0)
    p = _Parser(text, n)
    out = p.expr()
    tok = p.peek()
    if tok.kind != "end":
        raise SymbolSyntaxError(f"unexpected trailing input {tok.text!r}", tok.pos)
    return out


# -- formatting -------------------------------------------------------------


# 12 digits would cap the round trip near 5e-12 relative (0.5 ulp of a
# p-digit decimal is 0.5*10^{1-p}); 14 holds the 1e-12 tolerance with margin
_FMT_DIGITS = 14


def _fmt_float(v: float) -> str:
    return f"{v:.{_FMT_DIGITS}g}"


def _fmt_coef(v: complex) -> str:
    if v.imag == 0:
        return _fmt_float(v.real)
    if v.real == 0:
        return _fmt_float(v.imag) + "i"
    sign = "+" if v.imag >= 0 else "-"
    return f"({_fmt_float(v.real)}{sign}{_fmt_float(abs(v.imag))}i)"


def _join_sum(parts: list[str]) -> str:
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def _fmt_linear(c, d) -> str:
    parts = []
    for k, v in enumerate(c):
        if v != 0:
            parts.append(_fmt_product(v, f"z{k + 1}"))
    for k, v in enumerate(d):
        if v != 0:
            parts.append(_fmt_product(v, f"conj(z{k + 1})"))
    return _join_sum(parts)


def _fmt_product(coef: complex, factors_text: str) -> str:
    if not factors_text:
        return _fmt_coef(coef)
    if coef == 1:
        return factors_text
    if coef == -1:
        return "-" + factors_text
    return _fmt_coef(coef) + "*" + factors_text


def format_symbol(s: Symbol) -> str:
    """Deterministic canonical rendering; parses back to the same symbol."""
    if s.is_zero:
        return "0"
    parts = []
    for t in s.terms:
        factors = []
        for k, e in enumerate(t.a):
            if e == 1:
                factors.append(f"z{k + 1}")
            elif e > 1:
                factors.append(f"z{k + 1}^{e}")
        for k, e in enumerate(t.b):
            if e == 1:
                factors.append(f"conj(z{k + 1})")
            elif e > 1:
                factors.append(f"conj(z{k + 1})^{e}")
        if any(x != 0 for x in t.c) or any(x != 0 for x in t.d):
            factors.append(f"exp({_fmt_linear(t.c, t.d)})")
        parts.append(_fmt_product(t.coef, "*".join(factors)))
    return _join_sum(parts)


def parse_complex(text: str) -> complex:
    """Parse one complex constant in the DSL notation (e.g. "1+2i", "-0.5i")."""
    value = parse_symbol(text, 1)
    if not value.is_constant:
        raise SymbolSyntaxError("expected a constant", 0)
    return value.constant_value()
