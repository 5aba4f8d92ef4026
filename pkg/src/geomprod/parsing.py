"""Text syntax for products and identities, plus the reverse renderers.

The input language::

    identity  := product "=" product
    product   := term { "*" term }
    term      := "a" integer [ "^" exponent ] | "1"
    exponent  := signed_rational | "(" exp_expr ")"
    exp_expr  := exp_atom { ("+"|"-") exp_atom }
    exp_atom  := signed_rational [ "*"? "pi" ] | "pi"
    signed_rational := ["-"] integer [ "/" integer ]

Whitespace between tokens is ignored.  ``pi`` is the only named constant
and is lowercase only.  Examples: ``a4*a3 = a6*a1``,
``a5 * a2^(1/2) = a4^(3/2)``, ``a3^(6pi) * a6^6``.  The literal ``1``
stands for the empty product so that canonical output re-parses.

Parsed products are normalized.  Syntax problems raise :class:`ParseError`
with the offending position; an index below 1 raises
:class:`~geomprod.model.InvalidIndexError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ExactExponent
from .identities import Identity
from .model import InvalidIndexError, StringProduct, normalize

__all__ = ["ParseError", "parse_product", "parse_identity", "render", "render_identity"]

_OPS = set("*^()+-/=")
_WS = set(" \t\r\n\v\f")
_DIGITS = set("0123456789")
_ALPHA = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")


@dataclass(frozen=True)
class ParseError(ValueError):
    """Syntax error with the character offset and what was expected there."""

    position: int
    expected: str
    found: str

    def __str__(self) -> str:
        return f"parse error at position {self.position}: expected {self.expected}, found {self.found}"


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int

    def describe(self) -> str:
        if self.kind == "end":
            return "end of input"
        return f"'{self.text}'"


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in _WS:
            i += 1
            continue
        if c in _DIGITS:
            j = i + 1
            while j < n and text[j] in _DIGITS:
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
        elif c in _ALPHA:
            j = i + 1
            while j < n and text[j] in _ALPHA:
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
        elif c in _OPS:
            tokens.append(_Token("op", c, i))
            i += 1
        else:
            raise ParseError(i, "a token", f"{c!r}")
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.at = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.at + ahead, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.tokens[self.at]
        if tok.kind != "end":
            self.at += 1
        return tok

    def fail(self, expected: str) -> ParseError:
        tok = self.peek()
        return ParseError(tok.pos, expected, tok.describe())

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise self.fail(f"'{op}'")
        return self.advance()

    def at_op(self, op: str, ahead: int = 0) -> bool:
        tok = self.peek(ahead)
        return tok.kind == "op" and tok.text == op

    def integer(self, what: str) -> tuple[int, int]:
        tok = self.peek()
        if tok.kind != "int":
            raise self.fail(what)
        self.advance()
        return int(tok.text), tok.pos

    def signed_rational(self) -> Fraction:
        negative = False
        if self.at_op("-"):
            self.advance()
            negative = True
        num, _ = self.integer("an integer")
        den = 1
        if self.at_op("/"):
            self.advance()
            den, pos = self.integer("a denominator")
            if den == 0:
                raise ParseError(pos, "a nonzero denominator", "'0'")
        value = Fraction(num, den)
        return -value if negative else value

    def exp_atom(self) -> ExactExponent:
        tok = self.peek()
        if tok.kind == "name":
            if tok.text != "pi":
                raise self.fail("'pi' or a rational")
            self.advance()
            return ExactExponent(0, 1)
        # tolerated shorthand: a bare sign directly before "pi"
        if self.at_op("-") and self.peek(1).kind == "name" and self.peek(1).text == "pi":
            self.advance()
            self.advance()
            return ExactExponent(0, -1)
        coeff = self.signed_rational()
        if self.at_op("*") and self.peek(1).kind == "name":
            name = self.peek(1)
            if name.text != "pi":
                raise ParseError(name.pos, "'pi'", name.describe())
            self.advance()
            self.advance()
            return ExactExponent(0, coeff)
        if self.peek().kind == "name" and self.peek().text == "pi":
            self.advance()
            return ExactExponent(0, coeff)
        return ExactExponent(coeff, 0)

    def exp_expr(self) -> ExactExponent:
        value = self.exp_atom()
        while self.at_op("+") or self.at_op("-"):
            op = self.advance().text
            atom = self.exp_atom()
            value = value + atom if op == "+" else value - atom
        return value

    def exponent(self) -> ExactExponent:
        if self.at_op("("):
            self.advance()
            value = self.exp_expr()
            self.expect_op(")")
            return value
        return ExactExponent(self.signed_rational(), 0)

    def term(self) -> list[tuple[int, ExactExponent]]:
        tok = self.peek()
        if tok.kind == "int" and int(tok.text) == 1:
            self.advance()
            return []
        if tok.kind != "name" or tok.text != "a":
            raise self.fail("a term like 'a3' (or the literal '1')")
        self.advance()
        index, pos = self.integer("a term index")
        if index < 1:
            raise InvalidIndexError(
                f"term index must be >= 1, got {index} (at position {pos})"
            )
        if self.at_op("^"):
            self.advance()
            return [(index, self.exponent())]
        return [(index, ExactExponent(1, 0))]

    def product(self) -> list[tuple[int, ExactExponent]]:
        pairs = self.term()
        while self.at_op("*"):
            self.advance()
            pairs += self.term()
        return pairs

    def end(self) -> None:
        if self.peek().kind != "end":
            raise self.fail("end of input")


def parse_product(text: str) -> StringProduct:
    """Parse one product; the result is normalized."""
    parser = _Parser(text)
    pairs = parser.product()
    parser.end()
    return normalize(pairs)


def parse_identity(text: str) -> Identity:
    """Parse ``<product> = <product>``; both sides come back normalized."""
    parser = _Parser(text)
    lhs = parser.product()
    parser.expect_op("=")
    rhs = parser.product()
    parser.end()
    return Identity(normalize(lhs), normalize(rhs))


_ONE = ExactExponent(1, 0)


def _exponent_latex(e: ExactExponent) -> str:
    if e.pi == 0:
        return str(e.rat)
    mag = abs(e.pi)
    pi_part = "\\pi" if mag == 1 else f"{mag}\\pi"
    if e.rat == 0:
        return pi_part if e.pi > 0 else f"-{pi_part}"
    joiner = "+" if e.pi > 0 else "-"
    return f"{e.rat}{joiner}{pi_part}"


def render(p: StringProduct, style: str = "text") -> str:
    """Canonical text ("a3*a4^(1/2)") or LaTeX math for a product.

    Text output re-parses to an equal product; the empty product renders
    as "1".
    """
    if style == "text":
        if p.is_empty():
            return "1"
        parts = []
        for f in p.factors:
            if f.exponent == _ONE:
                parts.append(f"a{f.index}")
            else:
                parts.append(f"a{f.index}^({f.exponent})")
        return "*".join(parts)
    if style == "latex":
        if p.is_empty():
            return "1"
        parts = []
        for f in p.factors:
            if f.exponent == _ONE:
                parts.append(f"a_{{{f.index}}}")
            else:
                parts.append(f"a_{{{f.index}}}^{{{_exponent_latex(f.exponent)}}}")
        return " \\cdot ".join(parts)
    raise ValueError(f"unknown render style {style!r}")


def render_identity(ident: Identity, style: str = "text") -> str:
    return f"{render(ident.lhs, style)} = {render(ident.rhs, style)}"
