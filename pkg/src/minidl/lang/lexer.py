"""Tokenizer shared by the fragment parser and the formula parser."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import LangError

KEYWORDS = {
    "params", "int", "boolean", "if", "else", "while", "do", "for",
    "break", "continue", "return", "throw", "try", "catch", "finally",
    "attempt", "continuation", "halt", "true", "false",
}

# Longest-match first.
SYMBOLS = (
    "==", "!=", "<=", ">=", "&&", "||", "->",
    "(", ")", "{", "}", ";", ":", ",", "=",
    "<", ">", "+", "-", "*", "/", "%", "!",
)


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "int", "keyword", "symbol", "eof"
    text: str
    line: int
    col: int


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if source.startswith("//", i):
            j = source.find("\n", i)
            i = n if j < 0 else j
            continue
        if source.startswith("/*", i):
            j = source.find("*/", i + 2)
            if j < 0:
                raise LangError("unterminated block comment", line, col)
            skipped = source[i : j + 2]
            nl = skipped.count("\n")
            if nl:
                line += nl
                col = len(skipped) - skipped.rfind("\n")
            else:
                col += len(skipped)
            i = j + 2
            continue
        if c.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token("int", source[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            text = source[i:j]
            kind = "keyword" if text in KEYWORDS else "ident"
            tokens.append(Token(kind, text, line, col))
            col += j - i
            i = j
            continue
        for sym in SYMBOLS:
            if source.startswith(sym, i):
                tokens.append(Token("symbol", sym, line, col))
                i += len(sym)
                col += len(sym)
                break
        else:
            raise LangError(f"unexpected character {c!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


class TokenStream:
    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._i = 0

    def peek(self, ahead: int = 0) -> Token:
        return self._tokens[min(self._i + ahead, len(self._tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        if tok.kind != "eof":
            self._i += 1
        return tok

    def at_symbol(self, text: str) -> bool:
        t = self.peek()
        return t.kind == "symbol" and t.text == text

    def at_keyword(self, text: str) -> bool:
        t = self.peek()
        return t.kind == "keyword" and t.text == text

    def accept_symbol(self, text: str) -> bool:
        if self.at_symbol(text):
            self.next()
            return True
        return False

    def accept_keyword(self, text: str) -> bool:
        if self.at_keyword(text):
            self.next()
            return True
        return False

    def expect_symbol(self, text: str) -> Token:
        t = self.peek()
        if not self.at_symbol(text):
            raise LangError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.line, t.col)
        return self.next()

    def expect_keyword(self, text: str) -> Token:
        t = self.peek()
        if not self.at_keyword(text):
            raise LangError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.line, t.col)
        return self.next()

    def expect_ident(self) -> Token:
        t = self.peek()
        if t.kind != "ident":
            raise LangError(f"expected identifier, found {t.text or 'end of input'!r}", t.line, t.col)
        return self.next()

    def expect_eof(self) -> None:
        t = self.peek()
        if t.kind != "eof":
            raise LangError(f"unexpected trailing input {t.text!r}", t.line, t.col)
