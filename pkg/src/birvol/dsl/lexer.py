"""Tokenizer for scenario files."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import BirvolError


@dataclass(frozen=True)
class Span:
    line: int
    col: int
    end_line: int
    end_col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


class DslSyntaxError(BirvolError):
    """Lexical or syntactic error, with a 1-based line and column."""

    def __init__(self, message: str, span: Span | None = None, expected: tuple[str, ...] = ()):
        self.span = span
        self.expected = expected
        self.bare = message
        where = f"{span.line}:{span.col}: " if span else ""
        tail = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{where}{message}{tail}")


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, INT, STRING, EOF or the punctuation itself
    text: str
    span: Span


PUNCT = ("->", "~/", "==", "!=", ";", ":", ",", "=", "(", ")", "[", "]", "{", "}",
         "+", "-", "*", "/", "^", "~")

_SPEC = [
    ("WS", r"[ \t\r]+"),
    ("NL", r"\n"),
    ("COMMENT", r"#[^\n]*"),
    ("NAME", r"[A-Za-z_][A-Za-z0-9_']*"),
    ("INT", r"[0-9]+"),
    ("STRING", r'"(?:[^"\\\n]|\\.)*"'),
    ("PUNCT", "|".join(re.escape(p) for p in PUNCT)),
]
_RX = re.compile("|".join(f"(?P<{k}>{v})" for k, v in _SPEC))


def tokenize(source: str) -> list[Token]:
    out: list[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _RX.match(source, pos)
        if m is None:
            col = pos - line_start + 1
            raise DslSyntaxError(f"unexpected character {source[pos]!r}",
                                 Span(line, col, line, col + 1))
        kind, text = m.lastgroup, m.group()
        col = pos - line_start + 1
        if kind == "NL":
            line += 1
            line_start = m.end()
        elif kind not in ("WS", "COMMENT"):
            span = Span(line, col, line, col + len(text))
            if kind == "PUNCT":
                out.append(Token(text, text, span))
            elif kind == "STRING":
                out.append(Token("STRING", re.sub(r"\\(.)", r"\1", text[1:-1]), span))
            else:
                out.append(Token(kind, text, span))
        pos = m.end()
    col = pos - line_start + 1
    out.append(Token("EOF", "", Span(line, col, line, col)))
    return out
