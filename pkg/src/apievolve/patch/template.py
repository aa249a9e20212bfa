"""Binding a normalized call site to a script pattern, and instantiating the template."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..jsrc import nodes as n
from ..jsrc.edits import EditSet, render_edits
from ..jsrc.lexer import EOF, IDENT, token_texts, tokenize
from ..jsrc.parser import parse
from .script import BINDING_PREFIX, UpdateScript


class BindFailure(ValueError):
    pass


@dataclass(frozen=True)
class SiteShape:
    """Receiver, argument and result texts of a (normalized) call site."""

    receiver: Optional[str]
    args: tuple[str, ...]
    ret: Optional[str] = None

    @classmethod
    def of(cls, text: str, call: n.MethodInvocation) -> "SiteShape":
        recv = text[call.receiver.start:call.receiver.end] if call.receiver is not None else None
        args = tuple(text[a.start:a.end] for a in call.args)
        ret = None
        parent = call.parent
        if isinstance(parent, n.AssignExpr) and parent.value is call:
            ret = text[parent.target.start:parent.target.end]
        return cls(recv, args, ret)


def _same(a: str, b: str) -> bool:
    return token_texts(a) == token_texts(b)


def _pattern_ret(script: UpdateScript) -> Optional[str]:
    call = script.pattern_call()
    parent = call.parent
    if isinstance(parent, n.AssignExpr) and isinstance(parent.target, n.NameExpr):
        return parent.target.name
    return None


def bind(script: UpdateScript, site: SiteShape) -> dict[str, str]:
    """Metavariable values for ``site``; raises BindFailure on shape mismatch."""
    call = script.pattern_call()
    declared = set(script.metavariable_names())
    out: dict[str, str] = {}

    def put(name: str, value: str) -> None:
        if name in out and not _same(out[name], value):
            raise BindFailure(f"metavariable {name} bound to both {out[name]!r} and {value!r}")
        out[name] = value

    if len(call.args) != len(site.args):
        raise BindFailure(f"pattern takes {len(call.args)} arguments, site has {len(site.args)}")
    pattern_src = script.pattern_text
    if call.receiver is None:
        if site.receiver is not None:
            raise BindFailure("site has a receiver but the pattern does not")
    else:
        if site.receiver is None:
            raise BindFailure("pattern expects a receiver but the site has none")
        recv = call.receiver
        if isinstance(recv, n.NameExpr) and recv.name in declared:
            put(recv.name, site.receiver)
        elif not _same(pattern_src[recv.start:recv.end], site.receiver):
            raise BindFailure("receiver does not match the pattern")
    for i, arg in enumerate(call.args):
        if isinstance(arg, n.NameExpr) and arg.name in declared:
            put(arg.name, site.args[i])
        elif not _same(pattern_src[arg.start:arg.end], site.args[i]):
            raise BindFailure(f"argument {i} does not match the pattern")
    ret = _pattern_ret(script)
    if ret is not None and ret in declared and site.ret is not None:
        put(ret, site.ret)
    return out


def rename_identifiers(text: str, renames: dict[str, str]) -> str:
    if not renames:
        return text
    edits = EditSet()
    toks = [t for t in tokenize(text) if t.kind != EOF]
    for i, tok in enumerate(toks):
        if tok.kind == IDENT and tok.text in renames and not (i and toks[i - 1].is_op(".")):
            edits.replace(tok.start, tok.end, renames[tok.text])
    return render_edits(text, edits)


def instantiate(
    script: UpdateScript,
    bindings: dict[str, str],
    site: SiteShape,
    renames: Optional[dict[str, str]] = None,
    indent: str = "",
) -> str:
    """Concrete replacement text for one site.

    ``ret = `` is added to or dropped from the branch statements when the
    site's use of the result differs from the example's. ``renames`` maps
    copied definition names to their collision-free names. Lines after the
    first are prefixed with ``indent``.
    """
    renames = renames or {}
    text = script.template_text
    ret = _pattern_ret(script)
    unit = parse(text)
    edits = EditSet()
    for node in unit.root.walk():
        if not isinstance(node, n.ExprStmt):
            continue
        expr = node.expr
        if isinstance(expr, n.AssignExpr) and isinstance(expr.target, n.NameExpr) \
                and expr.target.name == ret and site.ret is None:
            edits.replace(expr.start, expr.value.start, "")
        elif ret is None and site.ret is not None and isinstance(expr, n.MethodInvocation):
            edits.insert(expr.start, f"{site.ret} = ")
    text = render_edits(text, edits)

    carried = {name: rename_identifiers(expr, renames) for name, expr in script.carried_bindings}
    edits = EditSet()
    toks = [t for t in tokenize(text) if t.kind != EOF]
    for i, tok in enumerate(toks):
        if tok.kind != IDENT or (i and toks[i - 1].is_op(".")):
            continue
        if tok.text in bindings:
            edits.replace(tok.start, tok.end, bindings[tok.text])
        elif tok.text.startswith(BINDING_PREFIX) and tok.text in carried:
            edits.replace(tok.start, tok.end, carried[tok.text])
        elif tok.text in renames:
            edits.replace(tok.start, tok.end, renames[tok.text])
    text = render_edits(text, edits)
    return text.replace("\n", "\n" + indent) if indent else text
