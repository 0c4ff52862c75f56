"""Tokenizer for the mini-Java subset."""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import LexError


KEYWORDS = frozenset(
    {
        "public", "private", "static", "class",
        "int", "boolean", "void",
        "if", "else", "while", "return", "break", "continue",
        "true", "false",
    }
)

# Longest match first.
OPERATORS = (
    "++", "--", "+=", "-=", "==", "!=", "<=", ">=",
    "=", "<", ">", "+", "-", "*", "/", "%", "!",
)
PUNCTUATION = ("(", ")", "{", "}", ";", ",", ":")


@dataclass(frozen=True)
class Token:
    kind: str  # keyword | identifier | integer | operator | punctuation
    lexeme: str
    line: int
    column: int

    def __repr__(self) -> str:
        return f"Token({self.kind} {self.lexeme!r} @{self.line}:{self.column})"


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)

    def advance(text: str) -> None:
        nonlocal i, line, col
        for ch in text:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        i += len(text)

    while i < n:
        ch = source[i]
        if ch in " \t\r\n\f":
            advance(ch)
            continue
        if source.startswith("//", i):
            end = source.find("\n", i)
            advance(source[i:] if end < 0 else source[i:end])
            continue
        if source.startswith("/*", i):
            end = source.find("*/", i + 2)
            if end < 0:
                raise LexError("unterminated block comment", line, col)
            advance(source[i : end + 2])
            continue

        m = _IDENT.match(source, i)
        if m:
            word = m.group()
            kind = "keyword" if word in KEYWORDS else "identifier"
            tokens.append(Token(kind, word, line, col))
            advance(word)
            continue
        m = _INT.match(source, i)
        if m:
            if _IDENT.match(source, m.end()):
                raise LexError(f"malformed number {source[i:m.end() + 1]!r}", line, col)
            tokens.append(Token("integer", m.group(), line, col))
            advance(m.group())
            continue
        for op in OPERATORS:
            if source.startswith(op, i):
                tokens.append(Token("operator", op, line, col))
                advance(op)
                break
        else:
            if ch in PUNCTUATION:
                tokens.append(Token("punctuation", ch, line, col))
                advance(ch)
            else:
                raise LexError(f"unexpected character {ch!r}", line, col)
    return tokens
