"""Java-subset parsing and span-preserving rewriting."""

from .edits import Edit, EditSet, render_edits
from .errors import NotInUnit, OverlapError, ParseError
from .lexer import line_col, token_texts, tokenize
from .nodes import Span
from .parser import SourceUnit, parse, parse_expression
from .query import enclosing_context, find_invocations

__all__ = [
    "Edit", "EditSet", "NotInUnit", "OverlapError", "ParseError", "SourceUnit", "Span",
    "enclosing_context", "find_invocations", "line_col", "parse", "parse_expression",
    "render_edits", "token_texts", "tokenize",
]
