"""Copying carried method and class definitions into a target file."""

from __future__ import annotations

import textwrap
from typing import Iterable, Optional

from ..jsrc import nodes as n
from ..jsrc.edits import EditSet, render_edits
from ..jsrc.lexer import token_texts
from ..jsrc.parser import SourceUnit, parse
from .template import rename_identifiers

ACCESS = ("public", "protected", "private")


def dedent_declaration(source: str, node: n.Node) -> str:
    """Declaration text with the indentation of its first line removed from all lines."""
    line_start = source.rfind("\n", 0, node.start) + 1
    head = source[line_start:node.start]
    body = source[node.start:node.end]
    if head.strip():
        head = " " * len(head)
    return textwrap.dedent(head + body).lstrip()


def _declarations(unit: SourceUnit, kind: str) -> list[n.Node]:
    cls = n.MethodDecl if kind == "method" else n.ClassDecl
    return [node for node in unit.root.walk() if isinstance(node, cls)]


def plan_renames(target: SourceUnit, defs: Iterable) -> tuple[dict[str, str], set[str]]:
    """Collision-free names for ``defs`` in ``target``.

    Returns ``(renames, reused)``: ``renames`` maps a definition name to its
    new name; ``reused`` holds names whose identical declaration is already
    present, so nothing needs copying.
    """
    taken_methods = {m.name for m in _declarations(target, "method")}
    taken_classes = {c.name for c in _declarations(target, "class")}
    renames: dict[str, str] = {}
    reused: set[str] = set()
    for d in defs:
        existing = [x for x in _declarations(target, d.kind) if x.name == d.name]
        wanted = token_texts(make_public(d.text, d.kind))
        if any(token_texts(make_public(target.slice(x), d.kind)) == wanted for x in existing):
            reused.add(d.name)
            continue
        taken = taken_methods if d.kind == "method" else taken_classes
        if d.name in taken:
            k = 1
            while f"{d.name}{k}" in taken:
                k += 1
            renames[d.name] = f"{d.name}{k}"
            taken.add(renames[d.name])
        else:
            taken.add(d.name)
    return renames, reused


def _publicize(text: str, node: n.Node, edits: EditSet) -> None:
    mods = node.modifiers
    for m in mods:
        if m.text in ("private", "protected"):
            end = m.end
            while end < len(text) and text[end] in " \t":
                end += 1
            edits.replace(m.start, end, "")
    if not any(m.text == "public" for m in mods):
        keyword_mods = [m for m in mods if not m.text.startswith("@")]
        anchor = keyword_mods[0].start if keyword_mods else _decl_head(text, node)
        edits.insert(anchor, "public ")


def _decl_head(text: str, node: n.Node) -> int:
    """Offset just after leading annotations of a declaration."""
    annotations = [m for m in node.modifiers if m.text.startswith("@")]
    if not annotations:
        return node.start
    pos = annotations[-1].end
    while pos < len(text) and text[pos] in " \t\r\n":
        pos += 1
    return pos


def make_public(text: str, kind: str) -> str:
    """Rewrite the declaration's access to public; for classes, their methods too."""
    unit = parse(text)
    decl = next(
        (m for m in unit.root.members if isinstance(m, (n.MethodDecl, n.ClassDecl))), None
    )
    if decl is None:
        return text
    edits = EditSet()
    _publicize(text, decl, edits)
    if isinstance(decl, n.ClassDecl):
        for member in decl.members:
            if isinstance(member, n.MethodDecl):
                _publicize(text, member, edits)
    return render_edits(text, edits)


def _member_indent(unit: SourceUnit, cls: n.ClassDecl) -> str:
    text = unit.text
    for member in cls.members:
        line_start = text.rfind("\n", 0, member.start) + 1
        if not text[line_start:member.start].strip():
            return text[line_start:member.start]
    line_start = text.rfind("\n", 0, cls.start) + 1
    base = text[line_start:cls.start]
    base = base if not base.strip() else ""
    return base + "    "


def _innermost_class(unit: SourceUnit, offset: Optional[int]) -> Optional[n.ClassDecl]:
    best = None
    for node in unit.root.walk():
        if isinstance(node, n.ClassDecl) and (offset is None or node.start <= offset < node.end):
            if offset is None:
                return node
            best = node
    return best


def _top_class(unit: SourceUnit) -> Optional[n.ClassDecl]:
    return next((m for m in unit.root.members if isinstance(m, n.ClassDecl)), None)


def copy_definitions(
    target: SourceUnit,
    defs: Iterable,
    *,
    anchor: Optional[int] = None,
    template_spans: Iterable[n.Span] = (),
    renames: Optional[dict[str, str]] = None,
    reused: Optional[set[str]] = None,
) -> SourceUnit:
    """Append ``defs`` to the target, public and collision-free.

    Methods go last in the class enclosing ``anchor`` (an offset of an
    updated site); classes go last in the top-level class. When ``renames``
    is not given it is computed here and also applied to identifiers inside
    ``template_spans``.
    """
    defs = list(defs)
    if not defs:
        return target
    if renames is None:
        renames, reused = plan_renames(target, defs)
    reused = reused or set()
    text = target.text
    edits = EditSet()
    for span in template_spans:
        edits.replace(span.start, span.end, rename_identifiers(text[span.start:span.end], renames))

    top = _top_class(target)
    home = _innermost_class(target, anchor) if anchor is not None else top
    home = home or top
    groups: dict[int, list[str]] = {}
    group_cls: dict[int, Optional[n.ClassDecl]] = {}
    for d in defs:
        if d.name in reused:
            continue
        body = make_public(rename_identifiers(d.text, renames), d.kind)
        cls = home if d.kind == "method" else top
        key = id(cls)
        groups.setdefault(key, []).append(body)
        group_cls[key] = cls

    for key, bodies in groups.items():
        cls = group_cls[key]
        if cls is None:
            insertion = "".join("\n\n" + b for b in bodies) + "\n"
            edits.insert(len(text), insertion if text.endswith("\n") else "\n" + insertion.lstrip("\n"))
            continue
        indent = _member_indent(target, cls)
        closing = cls.end - 1
        line_start = text.rfind("\n", 0, closing) + 1
        blocks = [textwrap.indent(b, indent, lambda line: bool(line.strip())) for b in bodies]
        if not text[line_start:closing].strip() and line_start > cls.body_start:
            edits.insert(line_start, "".join("\n" + b + "\n" for b in blocks))
        else:
            close_indent = indent[:-4] if indent.endswith("    ") else ""
            edits.insert(closing, "".join("\n" + b for b in blocks) + "\n" + close_indent)
    return parse(render_edits(target, edits), target.path)
