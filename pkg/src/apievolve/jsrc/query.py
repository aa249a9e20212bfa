"""Lookups over a parsed unit: invocations and their enclosing declarations."""

from __future__ import annotations

from typing import Optional

from . import nodes as n
from .errors import NotInUnit
from .lexer import EOF, IDENT, tokenize


def _name_arity(signature) -> tuple[str, int]:
    if isinstance(signature, tuple):
        return signature
    return signature.method, signature.arity


def find_invocations(unit, signature) -> list[n.MethodInvocation]:
    """Invocations matching the signature's method name and arity, in source order.

    ``signature`` is anything with ``method`` and ``arity`` attributes, or a
    ``(name, arity)`` tuple. Receiver types are not checked. Calls hidden
    inside opaque constructs are not returned.
    """
    name, arity = _name_arity(signature)
    found = [
        node for node in unit.root.walk()
        if isinstance(node, n.MethodInvocation) and node.name == name and len(node.args) == arity
    ]
    found.sort(key=lambda node: node.name_start)
    return found


def opaque_mentions(unit, signature) -> list[n.Node]:
    """Opaque nodes whose raw tokens contain a call to the signature's method."""
    name, _ = _name_arity(signature)
    hits = []
    for node in unit.root.walk():
        if node.kind not in n.OPAQUE_KINDS:
            continue
        toks = [t for t in tokenize(unit.text[node.start:node.end]) if t.kind != EOF]
        for a, b in zip(toks, toks[1:]):
            if a.kind == IDENT and a.text == name and b.is_op("("):
                hits.append(node)
                break
    return hits


def enclosing_context(unit, node: n.Node) -> tuple[Optional[n.MethodDecl], Optional[n.ClassDecl]]:
    """Nearest enclosing method (None for field initializers) and class."""
    if not unit.owns(node):
        raise NotInUnit("node does not belong to this unit")
    method = None
    for anc in node.ancestors():
        if isinstance(anc, n.MethodDecl) and method is None:
            method = anc
        if isinstance(anc, n.ClassDecl):
            return method, anc
    return method, None


def enclosing_method(node: n.Node) -> Optional[n.MethodDecl]:
    for anc in node.ancestors():
        if isinstance(anc, n.MethodDecl):
            return anc
        if isinstance(anc, n.ClassDecl):
            return None
    return None


def enclosing_class(node: n.Node) -> Optional[n.ClassDecl]:
    for anc in node.ancestors():
        if isinstance(anc, n.ClassDecl):
            return anc
    return None


def top_level_class(unit) -> Optional[n.ClassDecl]:
    for member in unit.root.members:
        if isinstance(member, n.ClassDecl):
            return member
    return None


def inside_opaque(node: n.Node) -> bool:
    return any(a.kind in n.OPAQUE_KINDS for a in node.ancestors())
