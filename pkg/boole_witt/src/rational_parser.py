"""
Tokenizer and parser for the exact values accepted on the command line.

Grammar
-------
    rational := SIGN? INT (SLASH INT)?
    grid     := rational (COMMA rational)*

Decimal points are rejected outright so no value is ever silently rounded.
Errors carry the column of the offending character, like the rest of the
parser errors in this package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List

try:  # package import
    from .errors import RationalParseError
except ImportError:  # script import fallback
    from errors import RationalParseError  # type: ignore

__all__ = ["Token", "tokenize", "parse_rational", "parse_grid", "parse_int_grid"]


TOKEN_SPEC = [
    ("DECIMAL", r"\d*\.\d*"),
    ("INT", r"\d+"),
    ("SLASH", r"/"),
    ("COMMA", r","),
    ("MINUS", r"-|−"),
    ("PLUS", r"\+"),
    ("SKIP", r"[ \t]+"),
    ("MISMATCH", r"."),
]

TOK_REGEX = "|".join("(?P<%s>%s)" % pair for pair in TOKEN_SPEC)


@dataclass
class Token:
    type: str
    value: str
    col: int


def tokenize(text: str) -> List[Token]:
    """Split text into tokens; whitespace is dropped."""
    tokens: List[Token] = []
    for mo in re.finditer(TOK_REGEX, text):
        kind = mo.lastgroup
        value = mo.group()
        col = mo.start() + 1
        if kind == "SKIP":
            continue
        if kind == "DECIMAL":
            raise RationalParseError(
                f"Decimal value {value!r} not accepted; write it as a fraction a/b",
                position=mo.start(), line=1, col=col,
            )
        if kind == "MISMATCH":
            raise RationalParseError(f"Unexpected character: {value!r}", position=mo.start(), line=1, col=col)
        tokens.append(Token(kind, value, col))
    return tokens


class _Parser:
    """Recursive descent over the token list."""

    def __init__(self, tokens: List[Token], source_text: str):
        self.tokens = tokens
        self.pos = 0
        self.source_text = source_text

    def peek(self) -> Token | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def expect(self, type_: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise RationalParseError(f"Expected {type_} but got end of input in {self.source_text!r}")
        if tok.type != type_:
            raise RationalParseError(
                f"Expected {type_} but got {tok.type} ({tok.value}) in {self.source_text!r}",
                line=1, col=tok.col,
            )
        self.pos += 1
        return tok

    def parse_rational(self) -> Fraction:
        sign = 1
        tok = self.peek()
        if tok is not None and tok.type in ("MINUS", "PLUS"):
            sign = -1 if tok.type == "MINUS" else 1
            self.pos += 1
        num = int(self.expect("INT").value)
        den = 1
        tok = self.peek()
        if tok is not None and tok.type == "SLASH":
            self.pos += 1
            den_tok = self.expect("INT")
            den = int(den_tok.value)
            if den == 0:
                raise RationalParseError(f"Zero denominator in {self.source_text!r}", line=1, col=den_tok.col)
        return Fraction(sign * num, den)

    def parse_grid(self) -> List[Fraction]:
        values = [self.parse_rational()]
        while self.peek() is not None and self.peek().type == "COMMA":
            self.pos += 1
            values.append(self.parse_rational())
        return values

    def finish(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise RationalParseError(
                f"Extra tokens after value: {tok.value!r} in {self.source_text!r}", line=1, col=tok.col
            )


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or "a" (optionally signed) into a reduced Fraction."""
    parser = _Parser(tokenize(text), text)
    value = parser.parse_rational()
    parser.finish()
    return value


def parse_grid(text: str) -> List[Fraction]:
    """Parse a comma-separated list of rationals, e.g. "1,2,1/2,-1/3"."""
    if not text.strip():
        return []
    parser = _Parser(tokenize(text), text)
    values = parser.parse_grid()
    parser.finish()
    return values


def parse_int_grid(text: str) -> List[int]:
    """Parse a comma-separated list of integers."""
    values = parse_grid(text)
    for v in values:
        if v.denominator != 1:
            raise RationalParseError(f"Expected integers, got {v} in {text!r}")
    return [int(v) for v in values]
