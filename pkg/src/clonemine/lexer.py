"""Tokenizer for the supported Java subset.

Whitespace and comments are dropped. Every remaining lexeme gets one of
five classes: keyword, identifier, literal, operator, separator.

``>`` is never merged with a following ``>``; the parser reassembles shift
operators from adjacent tokens, which keeps nested generic closers like
``List<List<String>>`` trivial to parse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

KEYWORD = "keyword"
IDENTIFIER = "identifier"
LITERAL = "literal"
OPERATOR = "operator"
SEPARATOR = "separator"

JAVA_KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while
    """.split()
)
LITERAL_WORDS = frozenset({"true", "false", "null"})
PRIMITIVE_TYPES = frozenset(
    {"boolean", "byte", "char", "short", "int", "long", "float", "double", "void"}
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>//[^\n]*|/\*.*?\*/)
  | (?P<string>"(?:\\.|[^"\\\n])*")
  | (?P<char>'(?:\\.|[^'\\\n])+')
  | (?P<number>
        0[xX][0-9a-fA-F_]+[lL]?
      | 0[bB][01_]+[lL]?
      | (?:\d[\d_]*(?:\.[\d_]*)?|\.\d[\d_]*)(?:[eE][+-]?\d+)?[fFdDlL]?
    )
  | (?P<word>[A-Za-z_$][\w$]*)
  | (?P<sep>::|\.\.\.|[(){}\[\];,.@])
  | (?P<op><<=|\+\+|--|&&|\|\||->|[-+*/%&|^!=<>]=|<<|[-+*/%&|^!~?:=<>])
    """,
    re.VERBOSE | re.DOTALL,
)


class LexError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Token:
    """One lexeme. Equality ignores the source offsets."""

    text: str
    cls: str
    start: int = field(default=0, compare=False)
    end: int = field(default=0, compare=False)

    def __repr__(self) -> str:
        return f"Token({self.text!r}, {self.cls})"


def tokenize(source: str, offset: int = 0) -> list[Token]:
    """Split ``source`` into tokens; offsets are shifted by ``offset``."""
    tokens: list[Token] = []
    pos = 0
    n = len(source)
    while pos < n:
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            if source.startswith("/*", pos):
                raise LexError("unterminated comment", offset + pos)
            if source[pos] in "\"'":
                raise LexError("unterminated literal", offset + pos)
            raise LexError(f"unexpected character {source[pos]!r}", offset + pos)
        kind = m.lastgroup
        text = m.group()
        if kind == "word":
            if text in LITERAL_WORDS:
                cls = LITERAL
            elif text in JAVA_KEYWORDS:
                cls = KEYWORD
            else:
                cls = IDENTIFIER
        elif kind in ("string", "char", "number"):
            cls = LITERAL
        elif kind == "sep":
            cls = SEPARATOR
        elif kind == "op":
            cls = OPERATOR
        else:
            cls = None
        if cls is not None:
            tokens.append(Token(text, cls, offset + m.start(), offset + m.end()))
        pos = m.end()
    return tokens


def join_tokens(tokens) -> str:
    return " ".join(t.text for t in tokens)
