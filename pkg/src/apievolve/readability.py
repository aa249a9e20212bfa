"""Slicing API usages out of a file and scoring the slice's readability.

The score is a closed-form structural proxy::

    value = 1 / (1 + 0.05 * L + 0.08 * V + 0.02 * T)

with L the logical line count (statements plus ``else`` headers), V the
number of distinct local identifiers and T the mean tokens per logical line.
Only the ordering of scores is meaningful.
"""

from __future__ import annotations

import textwrap
from dataclasses import dataclass
from typing import Optional

from .jsrc import nodes as n
from .jsrc.lexer import EOF, IDENT, tokenize
from .jsrc.parser import SourceUnit, parse
from .jsrc.query import enclosing_method, find_invocations
from .patch.script import mentions_sdk_int

W_LINES = 0.05
W_IDENTS = 0.08
W_TOKENS = 0.02
WRAP_HEAD = "class MainActivity {\n    public static void main() {\n"
WRAP_TAIL = "    }\n}\n"
BODY_INDENT = " " * 8


class NoApiUsage(ValueError):
    pass


@dataclass(frozen=True)
class Slice:
    statements: tuple[str, ...]
    method: str = ""

    @property
    def wrapped_text(self) -> str:
        body = "".join(textwrap.indent(s, BODY_INDENT) + "\n" for s in self.statements)
        return WRAP_HEAD + body + WRAP_TAIL


@dataclass(frozen=True)
class ReadabilityScore:
    lines: int
    identifiers: int
    tokens_per_line: float

    @property
    def value(self) -> float:
        return readability_value(self.lines, self.identifiers, self.tokens_per_line)

    @property
    def features(self) -> tuple[int, int, float]:
        return (self.lines, self.identifiers, self.tokens_per_line)


def readability_value(lines: float, identifiers: float, tokens_per_line: float) -> float:
    return 1.0 / (1.0 + W_LINES * lines + W_IDENTS * identifiers + W_TOKENS * tokens_per_line)


def _statement_text(source: str, stmt: n.Node) -> str:
    line_start = source.rfind("\n", 0, stmt.start) + 1
    head = source[line_start:stmt.start]
    head = " " * len(head) if head.strip() else head
    return textwrap.dedent(head + source[stmt.start:stmt.end]).lstrip()


def _reads(source: str, stmt: n.Node) -> set[str]:
    names = set()
    for node in stmt.walk():
        if isinstance(node, n.NameExpr):
            names.add(node.name)
        elif node.kind in n.OPAQUE_KINDS:
            toks = [t for t in tokenize(source[node.start:node.end]) if t.kind != EOF]
            names.update(
                t.text for i, t in enumerate(toks)
                if t.kind == IDENT and not (i and toks[i - 1].is_op("."))
            )
    return names


def _defines(stmt: n.Node) -> set[str]:
    if isinstance(stmt, n.LocalVarDecl):
        return {d.name for d in stmt.declarators}
    if isinstance(stmt, n.ExprStmt) and isinstance(stmt.expr, n.AssignExpr) \
            and isinstance(stmt.expr.target, n.NameExpr):
        return {stmt.expr.target.name}
    return set()


def _anchor(call: n.MethodInvocation, method: n.MethodDecl, source: str) -> Optional[n.Node]:
    anchor = n.enclosing_statement(call)
    for anc in call.ancestors():
        if anc is method:
            break
        if isinstance(anc, n.IfStmt) and mentions_sdk_int(source[anc.cond.start:anc.cond.end]):
            anchor = anc
    return anchor


def _usages(unit: SourceUnit, mapping) -> list[n.MethodInvocation]:
    seen: dict[int, n.MethodInvocation] = {}
    for sig in (mapping.deprecated, mapping.replacement):
        for call in find_invocations(unit, sig):
            seen.setdefault(call.name_start, call)
    return [seen[k] for k in sorted(seen)]


def _slice_method(unit: SourceUnit, method: n.MethodDecl, calls: list[n.MethodInvocation]) -> Slice:
    source = unit.text
    anchors: list[n.Node] = []
    for call in calls:
        a = _anchor(call, method, source)
        if a is not None and all(a is not b for b in anchors):
            anchors.append(a)
    defs = [
        node for node in method.body.walk()
        if isinstance(node, (n.LocalVarDecl, n.ExprStmt)) and _defines(node)
    ]
    chosen: list[n.Node] = list(anchors)
    pending = list(anchors)
    while pending:
        stmt = pending.pop()
        reads = _reads(source, stmt)
        for d in defs:
            if d.start < stmt.start and _defines(d) & reads and all(d is not c for c in chosen):
                chosen.append(d)
                pending.append(d)
    # drop statements nested inside other chosen statements
    top = [s for s in chosen if not any(o is not s and o.start <= s.start and s.end <= o.end for o in chosen)]
    top.sort(key=lambda s: s.start)
    return Slice(tuple(_statement_text(source, s) for s in top), method.name)


def slice_api_usages(unit: SourceUnit, mapping) -> list[Slice]:
    """One backward slice per method that uses the deprecated or replacement API."""
    by_method: dict[int, tuple[n.MethodDecl, list]] = {}
    for call in _usages(unit, mapping):
        method = enclosing_method(call)
        if method is None or method.body is None:
            continue
        by_method.setdefault(id(method), (method, []))[1].append(call)
    slices = [_slice_method(unit, m, calls) for m, calls in by_method.values()]
    if not slices:
        raise NoApiUsage(
            f"no invocation of {mapping.deprecated.method} or {mapping.replacement.method} inside a method"
        )
    return slices


def slice_api_usage(unit: SourceUnit, mapping) -> Slice:
    """The slice for the first method using the API (see slice_api_usages)."""
    return slice_api_usages(unit, mapping)[0]


def _logical_lines(stmt: n.Node) -> int:
    if isinstance(stmt, n.Block):
        return sum(_logical_lines(s) for s in stmt.stmts)
    if isinstance(stmt, n.IfStmt):
        count = 1 + _logical_lines(stmt.then)
        if stmt.else_ is not None:
            count += _logical_lines(stmt.else_) + (0 if isinstance(stmt.else_, n.IfStmt) else 1)
        return count
    return 1


def _method_bodies(unit: SourceUnit) -> list[n.Block]:
    return [
        node.body for node in unit.root.walk()
        if isinstance(node, n.MethodDecl) and node.body is not None
        and not any(isinstance(a, n.MethodDecl) for a in node.ancestors())
    ]


def score_readability(text: str) -> ReadabilityScore:
    """Score the statements inside the method bodies of ``text``.

    For a wrapped slice this is exactly the slice body; the wrapper class
    and method headers do not count.
    """
    unit = parse(text)
    lines = 0
    idents: set[str] = set()
    tokens = 0
    for body in _method_bodies(unit):
        lines += _logical_lines(body)
        for node in body.walk():
            if isinstance(node, n.LocalVarDecl):
                idents.update(d.name for d in node.declarators)
            elif isinstance(node, n.NameExpr) and node.name[:1].islower():
                idents.add(node.name)
        inner = text[body.start + 1:body.end - 1]
        tokens += sum(1 for t in tokenize(inner) if t.kind != EOF and not t.is_op("{") and not t.is_op("}"))
    mean = tokens / lines if lines else 0.0
    return ReadabilityScore(lines, len(idents), mean)


def score_unit(unit: SourceUnit, mapping) -> tuple[float, list[str]]:
    """Mean slice score over the methods using the API, plus report notes."""
    slices = slice_api_usages(unit, mapping)
    values = [score_readability(s.wrapped_text).value for s in slices]
    notes = []
    if len(slices) > 1:
        notes.append(f"API used in {len(slices)} methods; score is the mean of per-method slices")
    return sum(values) / len(values), notes
