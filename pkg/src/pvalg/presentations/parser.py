"""Parser and formatter for algebra presentations ``K[x1,...,xk]/(g1,...,gs)``.

Grammar (whitespace ignored)::

    presentation := ring [ "/" "(" poly { "," poly } ")" ]
    ring         := "K" [ "[" [ ident { "," ident } ] "]" ]
    poly         := [ "+" | "-" ] term { ("+" | "-") term }
    term         := coeff [ "*" ] monom | coeff | monom
    coeff        := integer [ "/" positive-integer ]
    monom        := factor { [ "*" ] factor }
    factor       := ident [ "^" positive-integer ]
    ident        := letter { digit }

Juxtaposed identifiers split at letter boundaries, so ``x1x2`` reads as
``x1*x2``. A bare ``K`` is the ring with no variables.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..core.errors import PresentationError, VariableMismatchError
from ..polyring import DEGREVLEX, Polynomial, TermOrder

_TOKEN_RE = re.compile(r"(?P<ident>[A-Za-z][0-9]*)|(?P<int>[0-9]+)|(?P<sym>[\[\]()/,^*+\-])")


@dataclass(frozen=True)
class Token:
    """A lexeme and its offset in the source text."""

    kind: str  # "ident" | "int" | "sym" | "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split presentation text into tokens, ending with an ``end`` token."""
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise PresentationError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), pos))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


@dataclass(frozen=True)
class Presentation:
    """A quotient ``K[variables]/(generators)`` of a polynomial ring."""

    variables: Tuple[str, ...]
    generators: Tuple[Polynomial, ...] = ()

    def __post_init__(self):
        """Check distinct variables and non-zero generators over those variables."""
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "generators", tuple(self.generators))
        if len(set(self.variables)) != len(self.variables):
            raise PresentationError(f"duplicate variable names in {list(self.variables)}")
        for g in self.generators:
            if g.variables != self.variables:
                raise VariableMismatchError(f"generator {g} is over {g.variables}, expected {self.variables}")
            if g.is_zero():
                raise PresentationError("generators must be non-zero")

    @property
    def order(self) -> TermOrder:
        """Default term order: degrevlex with the written variable order as precedence."""
        return DEGREVLEX

    def __str__(self):
        """Canonical text form."""
        return format_presentation(self)


class _Parser:
    def __init__(self, text: str, variables: Optional[Sequence[str]] = None):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.variables: Tuple[str, ...] = tuple(variables or ())

    # -- token helpers ------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def at(self, text: str) -> bool:
        return self.tok.kind == "sym" and self.tok.text == text

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise PresentationError(f"expected '{text}', found '{found}'", self.tok.position)
        return self.advance()

    def expect_end(self) -> None:
        if self.tok.kind != "end":
            raise PresentationError(f"unexpected '{self.tok.text}' after the end of the expression", self.tok.position)

    # -- grammar ------------------------------------------------------------

    def presentation(self) -> Presentation:
        ring = self.tok
        if ring.kind != "ident" or ring.text != "K":
            raise PresentationError("a presentation starts with the ring symbol 'K'", ring.position)
        self.advance()
        names: List[str] = []
        if self.at("["):
            self.advance()
            if not self.at("]"):
                names.append(self.ident())
                while self.at(","):
                    self.advance()
                    names.append(self.ident())
            self.expect("]")
        if len(set(names)) != len(names):
            raise PresentationError(f"duplicate variable names in {names}", ring.position)
        self.variables = tuple(names)

        generators: List[Polynomial] = []
        if self.at("/"):
            self.advance()
            self.expect("(")
            if self.at(")"):
                raise PresentationError("empty generator list after '/'", self.tok.position)
            generators.append(self.nonzero_poly())
            while self.at(","):
                self.advance()
                generators.append(self.nonzero_poly())
            self.expect(")")
        self.expect_end()
        return Presentation(self.variables, tuple(generators))

    def ident(self) -> str:
        tok = self.tok
        if tok.kind != "ident":
            raise PresentationError(f"expected a variable name, found '{tok.text or 'end of input'}'", tok.position)
        self.advance()
        return tok.text

    def nonzero_poly(self) -> Polynomial:
        start = self.tok.position
        p = self.poly()
        if p.is_zero():
            raise PresentationError("generator simplifies to zero", start)
        return p

    def poly(self) -> Polynomial:
        sign = 1
        if self.at("-") or self.at("+"):
            sign = -1 if self.advance().text == "-" else 1
        total = self.term() * sign
        while self.at("+") or self.at("-"):
            sign = -1 if self.advance().text == "-" else 1
            total = total + self.term() * sign
        return total

    def term(self) -> Polynomial:
        coeff: Optional[Fraction] = None
        if self.tok.kind == "int":
            coeff = self.coeff()
            if self.at("*"):
                self.advance()
                if self.tok.kind != "ident":
                    raise PresentationError("expected a variable after '*'", self.tok.position)
            if self.tok.kind != "ident":
                return Polynomial.constant(self.variables, coeff)
        if self.tok.kind != "ident":
            raise PresentationError(f"expected a term, found '{self.tok.text or 'end of input'}'", self.tok.position)
        mono = self.monom()
        return mono * coeff if coeff is not None else mono

    def coeff(self) -> Fraction:
        numerator = int(self.advance().text)
        if self.at("/") and self.tokens[self.i + 1].kind == "int":
            self.advance()
            tok = self.advance()
            denominator = int(tok.text)
            if denominator == 0:
                raise PresentationError("denominator must be a positive integer", tok.position)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def monom(self) -> Polynomial:
        result = self.factor()
        while True:
            if self.tok.kind == "ident":
                result = result * self.factor()
            elif self.at("*") and self.tokens[self.i + 1].kind == "ident":
                self.advance()
                result = result * self.factor()
            else:
                return result

    def factor(self) -> Polynomial:
        tok = self.advance()
        if tok.text not in self.variables:
            declared = ", ".join(self.variables) or "none"
            raise PresentationError(f"unknown variable '{tok.text}' (declared: {declared})", tok.position)
        base = Polynomial.gen(self.variables, tok.text)
        if self.at("^"):
            caret = self.advance()
            exp_tok = self.tok
            if exp_tok.kind != "int":
                raise PresentationError("malformed exponent: expected a positive integer after '^'", caret.position)
            self.advance()
            exponent = int(exp_tok.text)
            if exponent < 1:
                raise PresentationError("malformed exponent: exponents must be positive", exp_tok.position)
            return base**exponent
        return base


def parse_presentation(text: str) -> Presentation:
    """Parse a presentation such as ``"K[x1,x2]/(x1x2, x1^3-x2^3)"``."""
    return _Parser(text).presentation()


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse a single polynomial over the given variables."""
    parser = _Parser(text, variables)
    p = parser.poly()
    parser.expect_end()
    return p


def format_presentation(p: Presentation, style: str = "starred") -> str:
    """Canonical text of a presentation.

    ``starred`` (the default) writes products as ``x1*x2``; ``compact`` uses
    juxtaposition the way the classification table does.
    """
    ring = "K" if not p.variables else f"K[{','.join(p.variables)}]"
    if not p.generators:
        return ring
    return f"{ring}/({', '.join(g.to_text(style) for g in p.generators)})"
