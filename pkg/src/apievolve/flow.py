"""File-scope value resolution for API arguments.

A name is chased back to the assignment that produced it (local, parameter,
then fields walking outward), and the defining expression is substituted
structurally. Nothing is evaluated: ``duration / frequency`` becomes
``9 / 3``, never ``3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .jsrc import nodes as n
from .jsrc.lexer import EOF, IDENT, tokenize, token_texts
from .jsrc.parser import SourceUnit, parse_expression
from .jsrc.query import enclosing_class, enclosing_method, top_level_class

MAX_DEPTH = 32

EXTERNAL = "external-to-file"
AMBIGUOUS = "ambiguous-assignment"
CYCLE = "cycle"
UNSUPPORTED = "unsupported-construct"

# Leftmost segments that mark a qualified name as a package path.
PACKAGE_ROOTS = frozenset({"android", "androidx", "java", "javax", "com", "org", "kotlin", "dalvik"})

_ATOM = 100


class Unresolved(NamedTuple):
    name: str
    reason: str


@dataclass(frozen=True)
class Binding:
    """Where a name got its value.

    ``kind`` is one of local, assignment, param, field, field-assignment.
    ``value`` is the defining expression (None for parameters).
    """

    kind: str
    name: str
    node: n.Node
    value: Optional[n.Node]


@dataclass
class Definition:
    kind: str  # "method" or "class"
    qualified_name: str
    node: Union[n.MethodDecl, n.ClassDecl]
    source_unit: SourceUnit

    @property
    def name(self) -> str:
        return self.node.name

    @property
    def text(self) -> str:
        return self.source_unit.slice(self.node)


@dataclass
class ResolvedValue:
    expression: n.Node
    text: str
    required_definitions: list[Definition] = field(default_factory=list)
    unresolved: list[Unresolved] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)


# -- name resolution ---------------------------------------------------------


def resolve_name(unit: SourceUnit, name: str, use_site: n.Node) -> Union[Binding, Unresolved]:
    """Find the definition that reaches ``use_site`` for ``name``."""
    method = enclosing_method(use_site)
    if method is not None and method.body is not None:
        found = _resolve_in_method(unit, method, name, use_site)
        if found is not None:
            return found
    return _resolve_field(unit, name, use_site)


def _visible_decl(method: n.MethodDecl, name: str, use_site: n.Node):
    best = None
    for node in method.body.walk():
        if not isinstance(node, n.LocalVarDecl) or node.start >= use_site.start:
            continue
        for decl in node.declarators:
            if decl.name != name:
                continue
            block = node.parent
            if block is None or not (block.start <= use_site.start and use_site.end <= block.end):
                continue
            if decl.init is not None and decl.init.start <= use_site.start < decl.init.end:
                continue  # use inside its own initializer
            if best is None or node.start > best[0].start:
                best = (node, decl)
    return best


def _assigns(node: n.Node, name: str) -> bool:
    return (
        isinstance(node, n.AssignExpr)
        and isinstance(node.target, n.NameExpr)
        and node.target.name == name
    )


def _resolve_in_method(unit, method, name, use_site):
    visible = _visible_decl(method, name, use_site)
    floor = visible[0].start if visible else method.body.start
    writes = [
        node for node in method.body.walk()
        if _assigns(node, name) and node.end <= use_site.start and node.start > floor
    ]
    param = next((p for p in method.params if p.name == name), None)
    if visible is None and not writes:
        if param is not None:
            if _opaque_writes(unit, method.body, name, method.body.start, use_site.start):
                return Unresolved(name, AMBIGUOUS)
            return Binding("param", name, param, None)
        return None

    if writes:
        last = max(writes, key=lambda w: w.start)
        if last.op != "=":
            return Unresolved(name, AMBIGUOUS)
        def_node, value, kind, def_start = last, last.value, "assignment", last.start
    else:
        decl_stmt, decl = visible
        if decl.init is None:
            if _opaque_writes(unit, method.body, name, decl_stmt.start, use_site.start):
                return Unresolved(name, AMBIGUOUS)
            return Unresolved(name, AMBIGUOUS if param is None else EXTERNAL)
        def_node, value, kind, def_start = decl_stmt, decl.init, "local", decl_stmt.start

    if _conditional_def(def_node, use_site, method):
        return Unresolved(name, AMBIGUOUS)
    if _opaque_writes(unit, method.body, name, def_start, use_site.start):
        return Unresolved(name, AMBIGUOUS)
    return Binding(kind, name, def_node, value)


def _conditional_def(def_node: n.Node, use_site: n.Node, stop: n.Node) -> bool:
    """True if the def sits in an if-branch that does not also hold the use."""
    child = def_node
    for anc in def_node.ancestors():
        if anc is stop:
            return False
        if isinstance(anc, n.IfStmt) and child is not anc.cond:
            if not (child.start <= use_site.start and use_site.end <= child.end):
                return True
        child = anc
    return False


def _opaque_writes(unit, body: n.Node, name: str, lo: int, hi: int) -> bool:
    """Token scan of opaque code between ``lo`` and ``hi`` for writes to ``name``."""
    for node in body.walk():
        if node.kind not in n.OPAQUE_KINDS or node.end <= lo or node.start >= hi:
            continue
        if text_writes(unit.text[node.start:node.end], name):
            return True
    return False


_WRITE_OPS = frozenset("= += -= *= /= %= &= |= ^= <<= ++ --".split())


def text_writes(text: str, name: str) -> bool:
    toks = [t for t in tokenize(text) if t.kind != EOF]
    for i, tok in enumerate(toks):
        if tok.kind != IDENT or tok.text != name:
            continue
        if i and toks[i - 1].is_op("."):
            continue
        after = toks[i + 1] if i + 1 < len(toks) else None
        before = toks[i - 1] if i else None
        if after is not None and after.kind == "op" and after.text in _WRITE_OPS:
            return True
        if after is not None and after.is_op(">") and i + 2 < len(toks):
            if toks[i + 2].is_op(">", ">=") and toks[i + 2].start == after.end:
                return True  # '>>=' and '>>>=' arrive split
        if before is not None and before.is_op("++", "--"):
            return True
    return False


def _resolve_field(unit, name, use_site):
    cls = enclosing_class(use_site)
    while cls is not None:
        for member in cls.members:
            if not isinstance(member, n.FieldDecl):
                continue
            for decl in member.declarators:
                if decl.name != name:
                    continue
                if decl.init is not None:
                    return Binding("field", name, member, decl.init)
                writes = _field_writes(unit, cls, name)
                if len(writes) == 1 and writes[0].op == "=":
                    return Binding("field-assignment", name, writes[0], writes[0].value)
                if writes:
                    return Unresolved(name, AMBIGUOUS)
                return Unresolved(name, EXTERNAL)
        cls = enclosing_class(cls)
    return Unresolved(name, EXTERNAL)


def _field_writes(unit, cls: n.ClassDecl, name: str) -> list[n.AssignExpr]:
    out = []
    for node in cls.walk():
        if not isinstance(node, n.AssignExpr):
            continue
        target = node.target
        if isinstance(target, n.FieldAccess):
            if target.name == name and isinstance(target.scope, n.Literal) and target.scope.value == "this":
                out.append(node)
        elif isinstance(target, n.NameExpr) and target.name == name:
            method = enclosing_method(node)
            shadowed = method is not None and (
                any(p.name == name for p in method.params)
                or _visible_decl(method, name, node) is not None
            )
            if not shadowed:
                out.append(node)
    return out


def declared_type(unit: SourceUnit, name: str, use_site: n.Node) -> Optional[str]:
    """Declared type of the local, parameter or field ``name`` seen from ``use_site``."""
    method = enclosing_method(use_site)
    if method is not None and method.body is not None:
        visible = _visible_decl(method, name, use_site)
        if visible is not None:
            stmt, decl = visible
            return stmt.type + decl.dims
        for p in method.params:
            if p.name == name:
                return p.type
    cls = enclosing_class(use_site)
    while cls is not None:
        for member in cls.members:
            if isinstance(member, n.FieldDecl):
                for decl in member.declarators:
                    if decl.name == name:
                        return member.type + decl.dims
        cls = enclosing_class(cls)
    return None


# -- expression resolution ---------------------------------------------------


def _is_type_like(name: str) -> bool:
    return name[:1].isupper() or name in PACKAGE_ROOTS


def _class_names(unit) -> set[str]:
    return {node.name for node in unit.root.walk() if isinstance(node, n.ClassDecl)}


class _Resolver:
    def __init__(self, unit: SourceUnit, pinned: dict[tuple, str]):
        self.unit = unit
        self.pinned = pinned
        self.unresolved: list[Unresolved] = []
        self.diagnostics: list[str] = []
        self.classes = _class_names(unit)

    def note(self, name: str, reason: str) -> None:
        item = Unresolved(name, reason)
        if item not in self.unresolved:
            self.unresolved.append(item)

    def diag(self, message: str) -> None:
        if message not in self.diagnostics:
            self.diagnostics.append(message)

    def emit(self, node: n.Node, depth: int, active: frozenset) -> tuple[str, int]:
        """Return (text, precedence) for the resolved form of ``node``."""
        if self.pinned:
            key = tuple(token_texts(self.unit.slice(node)))
            if key in self.pinned:
                return self.pinned[key], _ATOM
        text, prec = self._emit(node, depth, active)
        if getattr(node, "parens", 0) and prec != _ATOM:
            return f"({text})", _ATOM
        return text, prec

    def _emit(self, node, depth, active):
        if isinstance(node, n.Literal):
            if node.value == "this":
                self.diag("'this' kept verbatim; it refers to the enclosing instance")
            return node.value, _ATOM
        if isinstance(node, n.NameExpr):
            return self._name(node, depth, active)
        if isinstance(node, n.FieldAccess):
            return self._field_access(node, depth, active)
        if isinstance(node, n.MethodInvocation):
            head = ""
            if node.receiver is not None:
                head = self._scope(node.receiver, depth, active) + "."
            args = ", ".join(self.emit(a, depth, active)[0] for a in node.args)
            return f"{head}{node.type_args}{node.name}({args})", _ATOM
        if isinstance(node, n.ObjectCreation):
            args = ", ".join(self.emit(a, depth, active)[0] for a in node.args)
            return f"new {''.join(node.type.split())}({args})", _ATOM
        if isinstance(node, n.BinaryExpr):
            prec = n.BINARY_PRECEDENCE[node.op]
            left, lp = self.emit(node.left, depth, active)
            right, rp = self.emit(node.right, depth, active)
            if lp < prec:
                left = f"({left})"
            if rp <= prec:
                right = f"({right})"
            return f"{left} {node.op} {right}", prec
        # Assignments and opaque forms are kept as written.
        self._scan_opaque(node)
        return self.unit.slice(node), 0

    def _scope(self, node, depth, active) -> str:
        text, prec = self.emit(node, depth, active)
        return text if prec == _ATOM else f"({text})"

    def _scan_opaque(self, node: n.Node) -> None:
        toks = [t for t in tokenize(self.unit.slice(node)) if t.kind != EOF]
        for i, tok in enumerate(toks):
            if tok.kind != IDENT or (i and toks[i - 1].is_op(".")):
                continue
            if i + 1 < len(toks) and toks[i + 1].is_op("(", "->"):
                continue
            found = resolve_name(self.unit, tok.text, node)
            if isinstance(found, Binding):
                self.note(tok.text, UNSUPPORTED)

    def _name(self, node: n.NameExpr, depth, active):
        name = node.name
        found = resolve_name(self.unit, name, node)
        if isinstance(found, Unresolved):
            parent = node.parent
            as_scope = (
                isinstance(parent, n.FieldAccess) and parent.scope is node
                or isinstance(parent, n.MethodInvocation) and parent.receiver is node
            )
            if found.reason == EXTERNAL and (
                (as_scope and _is_type_like(name)) or name in self.classes
            ):
                return name, _ATOM  # type or package reference
            self.note(name, found.reason)
            return name, _ATOM
        if found.value is None:
            self.note(name, EXTERNAL)  # parameter: value supplied by callers
            return name, _ATOM
        key = (name, id(found.node))
        if key in active or depth >= MAX_DEPTH:
            self.note(name, CYCLE)
            return name, _ATOM
        return self.emit(found.value, depth + 1, active | {key})

    def _field_access(self, node: n.FieldAccess, depth, active):
        scope = node.scope
        if isinstance(scope, n.Literal) and scope.value == "this":
            found = _resolve_field(self.unit, node.name, node)
            if isinstance(found, Binding):
                key = (node.name, id(found.node))
                if key in active or depth >= MAX_DEPTH:
                    self.note(node.name, CYCLE)
                else:
                    return self.emit(found.value, depth + 1, active | {key})
            self.note(f"this.{node.name}", found.reason if isinstance(found, Unresolved) else CYCLE)
            return self.unit.slice(node), _ATOM
        if isinstance(scope, n.NameExpr) and scope.name in self.classes:
            owner = self._find_class(scope.name)
            if owner is not None:
                init = _field_initializer(owner, node.name)
                if init is not None:
                    key = (node.name, id(init))
                    if key in active or depth >= MAX_DEPTH:
                        self.note(node.name, CYCLE)
                        return self.unit.slice(node), _ATOM
                    return self.emit(init, depth + 1, active | {key})
        return f"{self._scope(scope, depth, active)}.{node.name}", _ATOM

    def _find_class(self, name: str) -> Optional[n.ClassDecl]:
        for node in self.unit.root.walk():
            if isinstance(node, n.ClassDecl) and node.name == name:
                return node
        return None


def _field_initializer(cls: n.ClassDecl, name: str) -> Optional[n.Node]:
    for member in cls.members:
        if isinstance(member, n.FieldDecl):
            for decl in member.declarators:
                if decl.name == name:
                    return decl.init
    return None


def resolve_expression(
    unit: SourceUnit,
    expr: n.Node,
    context: Optional[n.MethodDecl] = None,
    pinned: Optional[dict[str, str]] = None,
) -> ResolvedValue:
    """Rewrite ``expr`` so it no longer depends on in-file variables.

    ``pinned`` maps source snippets to replacement text; any subtree whose
    tokens equal a key is emitted as the mapped text and not resolved
    further. ``context`` is accepted for symmetry with the lookup helpers;
    the enclosing method is always derived from ``expr`` itself.
    """
    pins = {tuple(token_texts(k)): v for k, v in (pinned or {}).items()}
    resolver = _Resolver(unit, pins)
    text, _ = resolver.emit(expr, 0, frozenset())
    tree = parse_expression(text)
    diagnostics = resolver.diagnostics
    defs = collect_required_definitions(unit, tree, diagnostics)
    return ResolvedValue(tree, text, defs, resolver.unresolved, diagnostics)


# -- required definitions ----------------------------------------------------


def _qualified(node: n.Node) -> str:
    names = [node.name]
    for anc in node.ancestors():
        if isinstance(anc, n.ClassDecl):
            names.append(anc.name)
    return ".".join(reversed(names))


def collect_required_definitions(
    unit: SourceUnit,
    expr: n.Node,
    diagnostics: Optional[list[str]] = None,
) -> list[Definition]:
    """In-file methods and classes that ``expr`` needs, transitively.

    Calls without a receiver (or on ``this``) look up in-file methods by
    name and arity; ``new T(...)`` looks up in-file classes. The file's
    primary top-level class is never copied as a whole.
    """
    primary = top_level_class(unit)
    methods: dict[str, list[n.MethodDecl]] = {}
    classes: dict[str, n.ClassDecl] = {}
    for node in unit.root.walk():
        if isinstance(node, n.MethodDecl) and node.body is not None:
            methods.setdefault(node.name, []).append(node)
        elif isinstance(node, n.ClassDecl) and node is not primary:
            classes.setdefault(node.name, node)

    found: list[Definition] = []
    seen: set[int] = set()
    on_path: list[n.Node] = []

    def covered(decl: n.Node) -> bool:
        return any(id(a) in seen for a in decl.ancestors())

    def targets(tree: n.Node, owner: Optional[n.ClassDecl]):
        for node in tree.walk():
            if isinstance(node, n.MethodInvocation):
                recv = node.receiver
                local = recv is None or (isinstance(recv, n.Literal) and recv.value == "this")
                if isinstance(recv, n.NameExpr) and primary is not None and recv.name == primary.name:
                    local = True
                if isinstance(recv, n.NameExpr) and recv.name in classes:
                    yield classes[recv.name]
                    continue
                if not local:
                    continue
                if owner is not None and any(
                    isinstance(m, n.MethodDecl) and m.name == node.name for m in owner.walk()
                ):
                    continue
                for decl in methods.get(node.name, ()):
                    if len(decl.params) == len(node.args) or any(
                        "..." in p.type for p in decl.params
                    ):
                        yield decl
                        break
            elif isinstance(node, n.ObjectCreation):
                simple = node.simple_type
                if simple in classes and (owner is None or classes[simple] is not owner):
                    yield classes[simple]

    def visit(decl: n.Node) -> None:
        if decl in on_path:
            if diagnostics is not None:
                chain = " -> ".join(_qualified(d) for d in on_path[on_path.index(decl):])
                msg = f"cycle between required definitions: {chain} -> {_qualified(decl)}"
                if msg not in diagnostics:
                    diagnostics.append(msg)
            return
        if id(decl) in seen or covered(decl):
            return
        seen.add(id(decl))
        kind = "class" if isinstance(decl, n.ClassDecl) else "method"
        found.append(Definition(kind, _qualified(decl), decl, unit))
        on_path.append(decl)
        owner = decl if isinstance(decl, n.ClassDecl) else None
        for target in targets(decl, owner):
            visit(target)
        on_path.pop()

    for target in targets(expr, None):
        visit(target)
    return found
