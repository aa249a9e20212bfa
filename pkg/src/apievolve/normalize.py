"""Temporary-variable normalization of invocation sites, and its inverse.

Normalization pulls the receiver, each argument and (when used) the return
value of one call through scheme-named temporaries so the update template
can bind them uniformly::

    Spanned span = Html.fromHtml(s);
  becomes
    String parameterVariable0 = s;
    Spanned tempFunctionReturnValue;
    tempFunctionReturnValue = Html.fromHtml(parameterVariable0);
    Spanned span = tempFunctionReturnValue;

Denormalization removes those temporaries again wherever inlining cannot
duplicate or reorder a side effect.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

from .flow import PACKAGE_ROOTS, Unresolved, declared_type, resolve_name, text_writes
from .jsrc import nodes as n
from .jsrc.edits import EditSet, render_edits
from .jsrc.lexer import EOF, IDENT, line_col, tokenize
from .jsrc.parser import SourceUnit, parse
from .jsrc.query import enclosing_class, enclosing_method, inside_opaque

RECEIVER_TEMP = "classNameVariable"
PARAM_TEMP = "parameterVariable"
RETURN_TEMP = "tempFunctionReturnValue"

TEMP_RE = re.compile(r"^(?:classNameVariable|parameterVariable\d+|tempFunctionReturnValue)(?:_\d+)?$")

INDENT = "    "


class NormalizeError(ValueError):
    pass


class Introduced(NamedTuple):
    name: str
    expression: str
    span: n.Span  # the inserted declaration, in the normalized text


@dataclass
class NormalizationRecord:
    site_id: str
    introduced: list[Introduced] = field(default_factory=list)
    receiver_kind: str = "none"  # instance, static or none
    call_span: Optional[n.Span] = None  # rewritten call, in the normalized text
    return_temp: Optional[str] = None

    @property
    def names(self) -> list[str]:
        return [item.name for item in self.introduced]

    def temp_for(self, prefix: str) -> Optional[str]:
        for name in self.names:
            if name == prefix or name.startswith(prefix + "_"):
                return name
        return None

    @property
    def receiver_temp(self) -> Optional[str]:
        return self.temp_for(RECEIVER_TEMP)

    @property
    def param_temps(self) -> list[str]:
        return [m for m in self.names if m.startswith(PARAM_TEMP)]


def is_temp_name(name: str) -> bool:
    return bool(TEMP_RE.match(name))


def line_indent(text: str, offset: int) -> str:
    start = text.rfind("\n", 0, offset) + 1
    end = start
    while end < len(text) and text[end] in " \t":
        end += 1
    return text[start:end]


def site_id(unit: SourceUnit, node: n.Node) -> str:
    line, col = line_col(unit.text, node.start)
    return f"{getattr(node, 'name', node.kind)}@{line}:{col}"


# -- typing helpers -----------------------------------------------------------


def literal_type(value: str) -> Optional[str]:
    if value in ("true", "false"):
        return "boolean"
    if value.startswith('"'):
        return "String"
    if value.startswith("'"):
        return "char"
    body = value.lstrip("+-")
    if not body[:1].isdigit() and not body.startswith("."):
        return None
    lower = body.lower()
    if lower.startswith("0x") or lower.startswith("0b"):
        return "long" if lower.endswith("l") else "int"
    if lower.endswith("l"):
        return "long"
    if lower.endswith("f"):
        return "float"
    if lower.endswith("d") or "." in body or "e" in lower:
        return "double"
    return "int"


def _usable(type_text: Optional[str]) -> Optional[str]:
    if not type_text or type_text.strip() == "var":
        return None
    return " ".join(type_text.split())


def _is_static_ref(unit: SourceUnit, node: n.Node) -> bool:
    """True for receivers that name a type or package rather than a value."""
    if isinstance(node, n.Literal):
        return node.value == "super"
    if isinstance(node, n.NameExpr):
        found = resolve_name(unit, node.name, node)
        if not isinstance(found, Unresolved):
            return False
        classes = {c.name for c in unit.root.walk() if isinstance(c, n.ClassDecl)}
        return node.name[:1].isupper() or node.name in PACKAGE_ROOTS or node.name in classes
    if isinstance(node, n.FieldAccess):
        return _is_static_ref(unit, node.scope) and node.name[:1].isupper()
    return False


def _context_type(unit, call: n.MethodInvocation) -> Optional[str]:
    parent = call.parent
    if isinstance(parent, n.LocalVarDecl):
        for decl in parent.declarators:
            if decl.init is call:
                return parent.type + decl.dims
    if isinstance(parent, n.AssignExpr) and parent.value is call and parent.op == "=":
        if isinstance(parent.target, n.NameExpr):
            return declared_type(unit, parent.target.name, call)
    if isinstance(parent, n.ReturnStmt):
        method = enclosing_method(call)
        if method is not None and method.return_type not in (None, "void"):
            return method.return_type
    return None


def _scope_identifiers(unit: SourceUnit, node: n.Node) -> set[str]:
    scope = enclosing_method(node) or enclosing_class(node) or unit.root
    names = {t.text for t in tokenize(unit.slice(scope)) if t.kind == IDENT}
    cls = enclosing_class(node)
    if cls is not None:
        for member in cls.members:
            if isinstance(member, n.FieldDecl):
                names.update(d.name for d in member.declarators)
    return names


def fresh_name(base: str, taken: set[str]) -> str:
    if base not in taken:
        return base
    k = 1
    while f"{base}_{k}" in taken:
        k += 1
    return f"{base}_{k}"


# -- normalization ------------------------------------------------------------


def normalize_invocation(unit: SourceUnit, invocation: n.MethodInvocation, mapping=None):
    """Rewrite one call site into temporary-variable form.

    Returns the re-parsed unit and a record of what was introduced. The
    mapping (optional) supplies fallback types for the receiver, the
    arguments and the return value.
    """
    if inside_opaque(invocation):
        raise NormalizeError("invocation lies inside an unsupported construct")
    stmt = n.enclosing_statement(invocation)
    if stmt is None:
        raise NormalizeError("invocation is not inside a method statement")
    if stmt.kind == "OpaqueStmt":
        raise NormalizeError("enclosing statement is opaque")
    sig = getattr(mapping, "deprecated", None)
    text = unit.text
    taken = _scope_identifiers(unit, invocation)
    record = NormalizationRecord(site_id(unit, invocation))

    decls: list[tuple[str, str, str]] = []  # (type, name, expression text)
    arg_names: list[str] = []
    for i, arg in enumerate(invocation.args):
        span = n.outer_span(arg)
        expr_text = text[span.start:span.end]
        t = None
        if isinstance(arg, n.NameExpr):
            t = _usable(declared_type(unit, arg.name, arg))
        if t is None and sig is not None and i < len(sig.params):
            t = sig.params[i].replace("...", "[]")
        if t is None and isinstance(arg, n.Literal):
            t = literal_type(arg.value)
        name = fresh_name(f"{PARAM_TEMP}{i}", taken)
        taken.add(name)
        decls.append((t or "Object", name, expr_text))
        arg_names.append(name)

    recv = invocation.receiver
    recv_text = ""
    if recv is None:
        record.receiver_kind = "none"
    elif _is_static_ref(unit, recv):
        record.receiver_kind = "static"
        recv_text = unit.slice(recv)
    else:
        record.receiver_kind = "instance"
        span = n.outer_span(recv)
        t = None
        if isinstance(recv, n.NameExpr):
            t = _usable(declared_type(unit, recv.name, recv))
        elif isinstance(recv, n.Literal) and recv.value == "this":
            cls = enclosing_class(recv)
            t = cls.name if cls is not None else None
        if t is None and sig is not None and sig.receiver:
            t = sig.receiver_simple
        name = fresh_name(RECEIVER_TEMP, taken)
        taken.add(name)
        decls.append((t or "Object", name, text[span.start:span.end]))
        recv_text = name

    head = f"{recv_text}." if recv_text else ""
    call_text = f"{head}{invocation.type_args}{invocation.name}({', '.join(arg_names)})"

    used = not isinstance(invocation.parent, n.ExprStmt)
    lines = [f"{t} {name} = {expr};" for t, name, expr in decls]
    offsets = [len(lines[i]) for i in range(len(lines))]
    ret_name = None
    if used:
        rt = _usable(_context_type(unit, invocation))
        if rt is None and sig is not None and sig.returns:
            rt = sig.returns
        ret_name = fresh_name(RETURN_TEMP, taken)
        taken.add(ret_name)
        lines.append(f"{rt or 'Object'} {ret_name};")
        lines.append(f"{ret_name} = {call_text};")
        record.return_temp = ret_name

    indent = line_indent(text, stmt.start)
    in_block = isinstance(stmt.parent, n.Block) or isinstance(stmt.parent, n.CompilationUnit)
    edits = EditSet()
    stmt_new = (
        text[stmt.start:invocation.start]
        + (ret_name if used else call_text)
        + text[invocation.end:stmt.end]
    )
    if in_block:
        inner_indent = indent
        prefix = ""
    else:
        inner_indent = indent + INDENT
        prefix = "{\n" + inner_indent
    sep = "\n" + inner_indent
    block_text = prefix + sep.join(lines + [stmt_new])
    if not in_block:
        block_text += "\n" + indent + "}"
    edits.replace(stmt.start, stmt.end, block_text)
    new_text = render_edits(unit, edits)

    # Spans of the inserted pieces in the new text.
    pos = stmt.start + len(prefix)
    for i, (_, name, expr) in enumerate(decls):
        record.introduced.append(Introduced(name, expr, n.Span(pos, pos + offsets[i])))
        pos += offsets[i] + len(sep)
    if used:
        decl_len = len(lines[len(decls)])
        record.introduced.append(
            Introduced(ret_name, text[invocation.start:invocation.end], n.Span(pos, pos + decl_len))
        )
        pos += decl_len + len(sep) + len(f"{ret_name} = ")
        record.call_span = n.Span(pos, pos + len(call_text))
    else:
        pos += invocation.start - stmt.start
        record.call_span = n.Span(pos, pos + len(call_text))
    return parse(new_text, unit.path), record


def find_call(unit: SourceUnit, span: n.Span) -> Optional[n.MethodInvocation]:
    for node in unit.root.walk():
        if isinstance(node, n.MethodInvocation) and node.start == span.start and node.end == span.end:
            return node
    return None


# -- denormalization ----------------------------------------------------------


@dataclass
class DenormalizeResult:
    unit: SourceUnit
    inlined: list[str] = field(default_factory=list)
    kept: list[str] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)


def _is_pure(node: n.Node, source: str) -> bool:
    if isinstance(node, (n.Literal, n.NameExpr)):
        return True
    if isinstance(node, n.FieldAccess):
        return _is_pure(node.scope, source)
    if isinstance(node, n.BinaryExpr):
        return _is_pure(node.left, source) and _is_pure(node.right, source)
    if isinstance(node, n.OpaqueExpr):
        toks = tokenize(source[node.start:node.end])
        return not any(
            t.is_op("(", "=", "++", "--", "+=", "-=", "*=", "/=", "->") or t.is_kw("new")
            for t in toks
        )
    return False


def _names_in(node: n.Node, source: str) -> set[str]:
    names = set()
    for sub in node.walk():
        if isinstance(sub, n.NameExpr):
            names.add(sub.name)
        elif sub.kind in n.OPAQUE_KINDS:
            names.update(t.text for t in tokenize(source[sub.start:sub.end]) if t.kind == IDENT)
    return names


def _mentions(source: str, node: n.Node, name: str) -> bool:
    toks = [t for t in tokenize(source[node.start:node.end]) if t.kind != EOF]
    return any(
        t.kind == IDENT and t.text == name and not (i and toks[i - 1].is_op("."))
        for i, t in enumerate(toks)
    )


def _needs_parens(value: n.Node, use: n.NameExpr) -> bool:
    if getattr(value, "parens", 0):
        return False
    if isinstance(value, (n.Literal, n.NameExpr, n.FieldAccess, n.MethodInvocation, n.ObjectCreation)):
        return False
    parent = use.parent
    if isinstance(parent, n.FieldAccess) and parent.scope is use:
        return True
    if isinstance(parent, n.MethodInvocation) and parent.receiver is use:
        return True
    if isinstance(parent, n.BinaryExpr):
        if not isinstance(value, n.BinaryExpr):
            return True
        mine, theirs = n.BINARY_PRECEDENCE[value.op], n.BINARY_PRECEDENCE[parent.op]
        return mine < theirs or (mine == theirs and parent.right is use)
    if parent is not None and parent.kind == "OpaqueExpr":
        return True
    return False


def _delete_stmt(edits: EditSet, text: str, stmt: n.Node) -> None:
    """Remove a statement, taking its whole line when it stands alone."""
    line_start = text.rfind("\n", 0, stmt.start) + 1
    line_end = text.find("\n", stmt.end)
    line_end = len(text) if line_end < 0 else line_end
    if text[line_start:stmt.start].strip() == "" and text[stmt.end:line_end].strip() == "":
        if line_end < len(text):
            edits.replace(line_start, line_end + 1, "")
        else:
            edits.replace(max(0, line_start - 1), line_end, "")
        return
    end = stmt.end
    while end < len(text) and text[end] in " \t":
        end += 1
    edits.replace(stmt.start, end, "")


class _Temp:
    def __init__(self, unit: SourceUnit, decl_stmt: n.LocalVarDecl):
        self.unit = unit
        self.stmt = decl_stmt
        self.decl = decl_stmt.declarators[0]
        self.name = self.decl.name
        self.block = decl_stmt.parent
        self.reads: list[n.NameExpr] = []
        self.writes: list[n.AssignExpr] = []
        self.opaque_hits = False
        for node in self.block.walk():
            if node.start < decl_stmt.end:
                continue
            if isinstance(node, n.AssignExpr) and isinstance(node.target, n.NameExpr) \
                    and node.target.name == self.name:
                self.writes.append(node)
            elif isinstance(node, n.NameExpr) and node.name == self.name:
                parent = node.parent
                if not (isinstance(parent, n.AssignExpr) and parent.target is node):
                    self.reads.append(node)
            elif node.kind in n.OPAQUE_KINDS and _mentions(unit.text, node, self.name):
                self.opaque_hits = True


def _following_stmts(block: n.Node, stmt: n.Node) -> list[n.Node]:
    stmts = block.stmts if isinstance(block, n.Block) else block.members
    idx = next(i for i, s in enumerate(stmts) if s is stmt)
    return stmts[idx + 1:]


def _top_stmt_in(block: n.Node, node: n.Node) -> Optional[n.Node]:
    cur = node
    while cur is not None and cur.parent is not block:
        cur = cur.parent
    return cur


def _writes_between(unit: SourceUnit, scope: n.Node, names: set[str], lo: int, hi: int) -> bool:
    for node in scope.walk():
        if node.end <= lo or node.start >= hi:
            continue
        if isinstance(node, n.AssignExpr) and isinstance(node.target, n.NameExpr) \
                and node.target.name in names and node.start >= lo:
            return True
        if node.kind in n.OPAQUE_KINDS:
            if any(text_writes(unit.text[node.start:node.end], nm) for nm in names):
                return True
    return False


def _one_read_per_branch(temp: _Temp, def_stmt: n.Node) -> bool:
    """True when the two reads sit in opposite branches of the next if statement.

    Only temporaries and declarations without initializers may sit between
    the assignment and that statement, and its condition must not read the
    temp, so each path evaluates the value once and at the same point.
    """
    if len(temp.reads) != 2:
        return False
    tops = {id(_top_stmt_in(temp.block, r)) for r in temp.reads}
    if len(tops) != 1:
        return False
    guard = _top_stmt_in(temp.block, temp.reads[0])
    if not isinstance(guard, n.IfStmt) or guard.else_ is None:
        return False
    for s in _following_stmts(temp.block, def_stmt):
        if s is guard:
            break
        if not (isinstance(s, n.LocalVarDecl)
                and all(is_temp_name(d.name) or d.init is None for d in s.declarators)):
            return False
    r1, r2 = sorted(temp.reads, key=lambda r: r.start)
    in_then = guard.then.start <= r1.start < guard.then.end
    in_else = guard.else_.start <= r2.start < guard.else_.end
    return in_then and in_else


def _plan(temp: _Temp, branch_inlining: bool = True) -> tuple[Optional[EditSet], str]:
    """Edits that remove ``temp``, or None and the reason it must stay."""
    unit, text = temp.unit, temp.unit.text
    if len(temp.stmt.declarators) != 1:
        return None, "declares several variables"
    if temp.opaque_hits:
        return None, "used inside an unsupported construct"
    defs = ([temp.decl.init] if temp.decl.init is not None else []) + [w.value for w in temp.writes]
    if any(w.op != "=" for w in temp.writes):
        return None, "compound assignment"

    if len(defs) == 1:
        value = defs[0]
        def_stmt = temp.stmt
        if temp.writes:
            write = temp.writes[0]
            def_stmt = write.parent
            if not isinstance(def_stmt, n.ExprStmt) or def_stmt.parent is not temp.block:
                return None, "assigned in a nested statement"
        if any(r.start < value.end for r in temp.reads):
            return None, "read before its assignment"
        edits = EditSet()
        vspan = n.outer_span(value)
        vtext = text[vspan.start:vspan.end]
        if _is_pure(value, text):
            names = _names_in(value, text)
            for r in temp.reads:
                if names and _writes_between(unit, temp.block, names, def_stmt.end, r.start):
                    return None, "an operand is reassigned before use"
        elif branch_inlining and _one_read_per_branch(temp, def_stmt):
            pass
        else:
            if len(temp.reads) != 1:
                return None, f"initializer has side effects and is read {len(temp.reads)} times"
            read = temp.reads[0]
            top = _top_stmt_in(temp.block, read)
            between = []
            for s in _following_stmts(temp.block, def_stmt):
                if s is top:
                    break
                between.append(s)
            else:
                return None, "read is not in a following statement"
            for s in between:
                if not (isinstance(s, n.LocalVarDecl)
                and all(is_temp_name(d.name) or d.init is None for d in s.declarators)):
                    return None, "other statements run between assignment and use"
        for r in temp.reads:
            repl = f"({vtext})" if _needs_parens(value, r) else vtext
            edits.replace(r.start, r.end, repl)
        _delete_stmt(edits, text, temp.stmt)
        if def_stmt is not temp.stmt:
            _delete_stmt(edits, text, def_stmt)
        return edits, ""

    if len(defs) == 2 and temp.decl.init is None:
        return _plan_fold(temp)
    return None, f"assigned {len(defs)} times"


def _plan_fold(temp: _Temp) -> tuple[Optional[EditSet], str]:
    """Push a temp assigned in both guard branches into its single use."""
    text = temp.unit.text
    w1, w2 = temp.writes
    guard = None
    for anc in w1.ancestors():
        if isinstance(anc, n.IfStmt):
            guard = anc
            break
    if guard is None or guard.else_ is None or guard.parent is not temp.block:
        return None, "assigned twice outside a guard"
    if not (guard.then.start <= w1.start < guard.then.end and guard.else_.start <= w2.start < guard.else_.end):
        return None, "assignments are not in opposite branches"
    for w in (w1, w2):
        if not isinstance(w.parent, n.ExprStmt):
            return None, "assignment is nested in an expression"
    if len(temp.reads) != 1:
        return None, f"read {len(temp.reads)} times after the guard"
    read = temp.reads[0]
    rest = _following_stmts(temp.block, guard)
    if not rest or _top_stmt_in(temp.block, read) is not rest[0]:
        return None, "use does not directly follow the guard"
    use_stmt = rest[0]
    edits = EditSet()
    if isinstance(use_stmt, n.ExprStmt) and isinstance(use_stmt.expr, n.AssignExpr) \
            and use_stmt.expr.value is read and use_stmt.expr.op == "=":
        target = text[use_stmt.expr.target.start:use_stmt.expr.target.end]
        for w in (w1, w2):
            edits.replace(w.target.start, w.target.end, target)
        _delete_stmt(edits, text, temp.stmt)
        _delete_stmt(edits, text, use_stmt)
        return edits, ""
    if isinstance(use_stmt, n.ReturnStmt) and use_stmt.expr is read:
        for w in (w1, w2):
            edits.replace(w.start, w.value.start, "return ")
        _delete_stmt(edits, text, temp.stmt)
        _delete_stmt(edits, text, use_stmt)
        return edits, ""
    if isinstance(use_stmt, n.LocalVarDecl) and len(use_stmt.declarators) == 1 \
            and use_stmt.declarators[0].init is read:
        d = use_stmt.declarators[0]
        mods = " ".join(m.text for m in use_stmt.modifiers)
        decl_text = f"{mods + ' ' if mods else ''}{use_stmt.type} {d.name}{d.dims};"
        edits.replace(temp.stmt.start, temp.stmt.end, decl_text)
        for w in (w1, w2):
            edits.replace(w.target.start, w.target.end, d.name)
        _delete_stmt(edits, text, use_stmt)
        return edits, ""
    return _plan_push_down(temp, guard, use_stmt, read)


def _plan_push_down(temp: _Temp, guard: n.IfStmt, use_stmt: n.Node, read: n.NameExpr):
    """Move the statement using the temp into both branches, inlining the call.

    Skipped when that statement calls the same method again: duplicating it
    would hide the other call inside the guard.
    """
    text = temp.unit.text
    writes = temp.writes
    called = {w.value.name for w in writes if isinstance(w.value, n.MethodInvocation)}
    if any(isinstance(x, n.MethodInvocation) and x.name in called for x in use_stmt.walk()):
        return None, "value is used inside a larger expression that repeats the call"
    if not isinstance(use_stmt, (n.ExprStmt, n.ReturnStmt, n.LocalVarDecl)):
        return None, "value is used inside a larger expression"
    edits = EditSet()
    body_start, body_end = use_stmt.start, use_stmt.end
    prefix = ""
    if isinstance(use_stmt, n.LocalVarDecl):
        if len(use_stmt.declarators) != 1 or use_stmt.type == "var" or use_stmt.declarators[0].init is None:
            return None, "value is used inside a declaration that cannot be split"
        d = use_stmt.declarators[0]
        mods = " ".join(m.text for m in use_stmt.modifiers)
        edits.replace(temp.stmt.start, temp.stmt.end, f"{mods + ' ' if mods else ''}{use_stmt.type} {d.name}{d.dims};")
        prefix = f"{d.name} = "
        body_start = d.init.start if d.init.outer_start is None else d.init.outer_start
        body_end = use_stmt.end
    else:
        _delete_stmt(edits, text, temp.stmt)
    use_indent = line_indent(text, use_stmt.start)
    for w in writes:
        stmt = w.parent
        vspan = n.outer_span(w.value)
        value = text[vspan.start:vspan.end]
        if _needs_parens(w.value, read):
            value = f"({value})"
        body = text[body_start:read.start] + value + text[read.end:body_end]
        shift = line_indent(text, stmt.start)[len(use_indent):] if line_indent(text, stmt.start).startswith(use_indent) else ""
        body = body.replace("\n", "\n" + shift)
        edits.replace(stmt.start, stmt.end, prefix + body)
    _delete_stmt(edits, text, use_stmt)
    return edits, ""


def _temp_decls(unit: SourceUnit, names: Optional[set[str]]) -> list[n.LocalVarDecl]:
    out = []
    for node in unit.root.walk():
        if not isinstance(node, n.LocalVarDecl) or not node.declarators:
            continue
        if not isinstance(node.parent, (n.Block, n.CompilationUnit)):
            continue
        name = node.declarators[0].name
        if (names is None and is_temp_name(name)) or (names is not None and name in names):
            out.append(node)
    out.sort(key=lambda s: s.start, reverse=True)
    return out


def denormalize(unit: SourceUnit, records: Optional[Iterable[NormalizationRecord]] = None, *,
                branch_inlining: bool = True) -> DenormalizeResult:
    """Inline and delete temporaries; see :func:`denormalize_unit`.

    With ``branch_inlining`` off, a side-effecting value read once in each
    branch of a guard is kept rather than copied into both branches.
    """
    names = None
    if records is not None:
        names = {name for rec in records for name in rec.names}
    result = DenormalizeResult(unit)
    while True:
        progressed = False
        for stmt in _temp_decls(result.unit, names):
            edits, _ = _plan(_Temp(result.unit, stmt), branch_inlining)
            if edits is not None:
                result.inlined.append(stmt.declarators[0].name)
                result.unit = parse(render_edits(result.unit, edits), unit.path)
                progressed = True
                break
        if not progressed:
            break
    for stmt in _temp_decls(result.unit, names):
        name = stmt.declarators[0].name
        _, reason = _plan(_Temp(result.unit, stmt), branch_inlining)
        line, _ = line_col(result.unit.text, stmt.start)
        result.kept.append(name)
        result.diagnostics.append(f"kept temporary {name} (line {line}): {reason}")
    return result


def denormalize_unit(unit: SourceUnit, records: Optional[Iterable[NormalizationRecord]] = None) -> SourceUnit:
    """Remove temporaries that can be inlined without changing behaviour.

    With ``records`` only the temporaries they introduced are considered;
    otherwise any local named by the temporary scheme is a candidate.
    A temporary goes when it is assigned once and either its value is pure
    (names, literals, field accesses and operators over them) or it is read
    exactly once right after the assignment, or once in each branch of the
    guard that follows. A return temporary assigned in
    both branches of a guard and read once just after it is folded into the
    branches.
    """
    return denormalize(unit, records).unit
