"""Tokenizer shared by the polynomial, element, definition and eval parsers."""
from __future__ import annotations

import re
from dataclasses import dataclass

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t]+)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^(),@=:])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op", "eof"
    text: str
    pos: int


class LexError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(message)
        self.pos = pos


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise LexError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class TokenStream:
    """Cursor over a token list with the small helpers recursive descent needs."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def peek_at(self, offset: int) -> Token:
        j = min(self.i + offset, len(self.tokens) - 1)
        return self.tokens[j]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        tok = self.peek
        return tok.kind == "op" and tok.text in ops

    def accept(self, op: str) -> bool:
        if self.at_op(op):
            self.i += 1
            return True
        return False

    def expect(self, op: str) -> Token:
        tok = self.peek
        if not (tok.kind == "op" and tok.text == op):
            raise LexError(f"expected {op!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return self.next()

    def expect_end(self) -> None:
        tok = self.peek
        if tok.kind != "eof":
            raise LexError(f"unexpected {tok.text!r}", tok.pos)
