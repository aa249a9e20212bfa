"""Tokenizer for the supported Java subset.

Comments and whitespace are skipped but never lost: every token keeps its
offsets into the original text, so untouched source can always be copied
through verbatim.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

IDENT = "ident"
KEYWORD = "keyword"
NUMBER = "number"
STRING = "string"
CHAR = "char"
OP = "op"
EOF = "eof"

KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package
    private protected public return short static strictfp super switch
    synchronized this throw throws transient try void volatile while
    true false null
    """.split()
)

PRIMITIVES = frozenset("boolean byte char short int long float double void".split())

# Longest first. '>' is always emitted alone so nested generics close cleanly;
# the parser glues '>' '>' back into shift operators where needed.
_OPERATORS = [
    "...", "<<=", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<",
    "(", ")", "{", "}", "[", "]", ";", ",", ".", "@", "=", ">", "<", "!",
    "~", "?", ":", "+", "-", "*", "/", "&", "|", "^", "%",
]

_NUMBER_RE = re.compile(
    r"""
    0[xX][0-9a-fA-F_]+(?:\.[0-9a-fA-F_]*)?(?:[pP][+-]?\d+)?[lLfFdD]?
  | 0[bB][01_]+[lL]?
  | (?:\d[\d_]*\.?[\d_]*|\.\d[\d_]*)(?:[eE][+-]?\d+)?[lLfFdD]?
    """,
    re.VERBOSE,
)
_IDENT_RE = re.compile(r"[A-Za-z_$\u0080-\uffff][A-Za-z0-9_$\u0080-\uffff]*")
_WS_RE = re.compile(r"\s+")


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    start: int
    end: int

    def is_op(self, *ops: str) -> bool:
        return self.kind == OP and self.text in ops

    def is_kw(self, *words: str) -> bool:
        return self.kind == KEYWORD and self.text in words


def line_col(text: str, offset: int) -> tuple[int, int]:
    """1-based line and column of ``offset``."""
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos = _WS_RE.match(text, pos).end()
            continue
        if text.startswith("//", pos):
            nl = text.find("\n", pos)
            pos = n if nl < 0 else nl
            continue
        if text.startswith("/*", pos):
            close = text.find("*/", pos + 2)
            if close < 0:
                raise ParseError("unterminated comment", *line_col(text, pos))
            pos = close + 2
            continue
        if text.startswith('"""', pos):
            close = text.find('"""', pos + 3)
            while close > 0 and text[close - 1] == "\\":
                close = text.find('"""', close + 1)
            if close < 0:
                raise ParseError("unterminated text block", *line_col(text, pos))
            tokens.append(Token(STRING, text[pos:close + 3], pos, close + 3))
            pos = close + 3
            continue
        if ch == '"' or ch == "'":
            end = _scan_quoted(text, pos, ch)
            tokens.append(Token(STRING if ch == '"' else CHAR, text[pos:end], pos, end))
            pos = end
            continue
        if ch.isdigit() or (ch == "." and pos + 1 < n and text[pos + 1].isdigit()):
            m = _NUMBER_RE.match(text, pos)
            tokens.append(Token(NUMBER, m.group(), pos, m.end()))
            pos = m.end()
            continue
        m = _IDENT_RE.match(text, pos)
        if m:
            word = m.group()
            tokens.append(Token(KEYWORD if word in KEYWORDS else IDENT, word, pos, m.end()))
            pos = m.end()
            continue
        for op in _OPERATORS:
            if text.startswith(op, pos):
                tokens.append(Token(OP, op, pos, pos + len(op)))
                pos += len(op)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", *line_col(text, pos))
    tokens.append(Token(EOF, "", n, n))
    return tokens


def _scan_quoted(text: str, pos: int, quote: str) -> int:
    i = pos + 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\\":
            i += 2
            continue
        if c == quote:
            return i + 1
        if c == "\n":
            break
        i += 1
    raise ParseError("unterminated literal", *line_col(text, pos))


_PAIRS = {"(": ")", "[": "]", "{": "}"}


def check_balance(text: str, tokens: list[Token]) -> None:
    """Raise ParseError at the first unmatched bracket."""
    stack: list[Token] = []
    for tok in tokens:
        if tok.kind != OP:
            continue
        if tok.text in _PAIRS:
            stack.append(tok)
        elif tok.text in (")", "]", "}"):
            if not stack or _PAIRS[stack[-1].text] != tok.text:
                raise ParseError(f"unbalanced {tok.text!r}", *line_col(text, tok.start))
            stack.pop()
    if stack:
        tok = stack[-1]
        raise ParseError(f"unclosed {tok.text!r}", *line_col(text, tok.start))


def token_texts(text: str) -> list[str]:
    """Whitespace- and comment-insensitive token stream, for comparisons."""
    return [t.text for t in tokenize(text) if t.kind != EOF]


_COMMENT_RE = re.compile(r"//[^\n]*|/\*.*?\*/", re.DOTALL)


def comments(text: str) -> list[str]:
    """Comment texts in source order, taken from the gaps between tokens."""
    out, pos = [], 0
    for tok in tokenize(text):
        out.extend(m.group(0) for m in _COMMENT_RE.finditer(text, pos, tok.start))
        pos = tok.end
    return out
