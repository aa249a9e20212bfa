"""Span-annotated syntax nodes.

Every node records ``start``/``end`` offsets into the text it was parsed
from. Nodes are never mutated after parsing apart from the ``parent`` link
set by :func:`link`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Iterator, NamedTuple, Optional


class Span(NamedTuple):
    start: int
    end: int

    def contains(self, other: "Span") -> bool:
        return self.start <= other.start and other.end <= self.end


class Modifier(NamedTuple):
    """A keyword modifier or an annotation (text starts with ``@``)."""

    text: str
    start: int
    end: int


@dataclass(eq=False, kw_only=True)
class Node:
    kind: ClassVar[str] = "Node"
    _child_fields: ClassVar[tuple[str, ...]] = ()

    start: int
    end: int
    parent: Optional["Node"] = field(default=None, repr=False)

    @property
    def span(self) -> Span:
        return Span(self.start, self.end)

    def children(self) -> Iterator["Node"]:
        for name in self._child_fields:
            value = getattr(self, name)
            if value is None:
                continue
            if isinstance(value, list):
                for item in value:
                    if isinstance(item, Declarator):
                        if item.init is not None:
                            yield item.init
                    elif item is not None:
                        yield item
            else:
                yield value

    def walk(self) -> Iterator["Node"]:
        """Pre-order traversal, self included."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(list(node.children())))

    def ancestors(self) -> Iterator["Node"]:
        node = self.parent
        while node is not None:
            yield node
            node = node.parent

    def text(self, source: str) -> str:
        return source[self.start:self.end]


@dataclass(eq=False)
class Declarator:
    name: str
    name_start: int
    name_end: int
    init: Optional[Node] = None
    dims: str = ""


# -- declarations -----------------------------------------------------------


@dataclass(eq=False, kw_only=True)
class CompilationUnit(Node):
    kind: ClassVar[str] = "CompilationUnit"
    _child_fields: ClassVar[tuple[str, ...]] = ("members",)
    members: list[Node] = field(default_factory=list)


@dataclass(eq=False, kw_only=True)
class Import(Node):
    kind: ClassVar[str] = "Import"
    name: str
    static: bool = False
    package: bool = False


@dataclass(eq=False, kw_only=True)
class ClassDecl(Node):
    kind: ClassVar[str] = "ClassDecl"
    _child_fields: ClassVar[tuple[str, ...]] = ("members",)
    name: str
    keyword: str = "class"
    modifiers: list[Modifier] = field(default_factory=list)
    members: list[Node] = field(default_factory=list)
    body_start: int = 0  # offset of '{'
    name_start: int = 0


@dataclass(eq=False, kw_only=True)
class FieldDecl(Node):
    kind: ClassVar[str] = "FieldDecl"
    _child_fields: ClassVar[tuple[str, ...]] = ("declarators",)
    type: str
    modifiers: list[Modifier] = field(default_factory=list)
    declarators: list[Declarator] = field(default_factory=list)


@dataclass(eq=False, kw_only=True)
class Param(Node):
    kind: ClassVar[str] = "Param"
    type: str
    name: str
    modifiers: list[Modifier] = field(default_factory=list)


@dataclass(eq=False, kw_only=True)
class MethodDecl(Node):
    kind: ClassVar[str] = "MethodDecl"
    _child_fields: ClassVar[tuple[str, ...]] = ("params", "body")
    name: str
    return_type: Optional[str]  # None for constructors
    modifiers: list[Modifier] = field(default_factory=list)
    params: list[Param] = field(default_factory=list)
    body: Optional["Block"] = None
    name_start: int = 0

    @property
    def is_constructor(self) -> bool:
        return self.return_type is None


# -- statements -------------------------------------------------------------


@dataclass(eq=False, kw_only=True)
class Block(Node):
    kind: ClassVar[str] = "Block"
    _child_fields: ClassVar[tuple[str, ...]] = ("stmts",)
    stmts: list[Node] = field(default_factory=list)


@dataclass(eq=False, kw_only=True)
class LocalVarDecl(Node):
    kind: ClassVar[str] = "LocalVarDecl"
    _child_fields: ClassVar[tuple[str, ...]] = ("declarators",)
    type: str
    modifiers: list[Modifier] = field(default_factory=list)
    declarators: list[Declarator] = field(default_factory=list)


@dataclass(eq=False, kw_only=True)
class ExprStmt(Node):
    kind: ClassVar[str] = "ExprStmt"
    _child_fields: ClassVar[tuple[str, ...]] = ("expr",)
    expr: Node


@dataclass(eq=False, kw_only=True)
class IfStmt(Node):
    kind: ClassVar[str] = "IfStmt"
    _child_fields: ClassVar[tuple[str, ...]] = ("cond", "then", "else_")
    cond: Node
    then: Node
    else_: Optional[Node] = None


@dataclass(eq=False, kw_only=True)
class ReturnStmt(Node):
    kind: ClassVar[str] = "ReturnStmt"
    _child_fields: ClassVar[tuple[str, ...]] = ("expr",)
    expr: Optional[Node] = None


@dataclass(eq=False, kw_only=True)
class OpaqueStmt(Node):
    """Balanced but unsupported statement or member; never rewritten inside."""

    kind: ClassVar[str] = "OpaqueStmt"


# -- expressions ------------------------------------------------------------


@dataclass(eq=False, kw_only=True)
class Expr(Node):
    parens: int = 0  # redundant parentheses around the node (not in span)
    outer_start: Optional[int] = None  # span including those parentheses
    outer_end: Optional[int] = None


@dataclass(eq=False, kw_only=True)
class Literal(Expr):
    kind: ClassVar[str] = "Literal"
    value: str


@dataclass(eq=False, kw_only=True)
class NameExpr(Expr):
    kind: ClassVar[str] = "NameExpr"
    name: str


@dataclass(eq=False, kw_only=True)
class FieldAccess(Expr):
    kind: ClassVar[str] = "FieldAccess"
    _child_fields: ClassVar[tuple[str, ...]] = ("scope",)
    scope: Node
    name: str


@dataclass(eq=False, kw_only=True)
class MethodInvocation(Expr):
    kind: ClassVar[str] = "MethodInvocation"
    _child_fields: ClassVar[tuple[str, ...]] = ("receiver", "args")
    receiver: Optional[Node]
    name: str
    args: list[Node] = field(default_factory=list)
    type_args: str = ""
    name_start: int = 0


@dataclass(eq=False, kw_only=True)
class ObjectCreation(Expr):
    kind: ClassVar[str] = "ObjectCreation"
    _child_fields: ClassVar[tuple[str, ...]] = ("args",)
    type: str
    args: list[Node] = field(default_factory=list)

    @property
    def simple_type(self) -> str:
        return self.type.split("<", 1)[0].rsplit(".", 1)[-1].strip()


@dataclass(eq=False, kw_only=True)
class BinaryExpr(Expr):
    kind: ClassVar[str] = "BinaryExpr"
    _child_fields: ClassVar[tuple[str, ...]] = ("left", "right")
    op: str
    left: Node
    right: Node


@dataclass(eq=False, kw_only=True)
class AssignExpr(Expr):
    kind: ClassVar[str] = "AssignExpr"
    _child_fields: ClassVar[tuple[str, ...]] = ("target", "value")
    op: str
    target: Node
    value: Node


@dataclass(eq=False, kw_only=True)
class OpaqueExpr(Expr):
    """Lambda, cast, ternary, array access and other unsupported forms."""

    kind: ClassVar[str] = "OpaqueExpr"


STATEMENT_KINDS = frozenset(
    {"Block", "LocalVarDecl", "ExprStmt", "IfStmt", "ReturnStmt", "OpaqueStmt"}
)
OPAQUE_KINDS = frozenset({"OpaqueStmt", "OpaqueExpr"})

BINARY_PRECEDENCE = {
    "||": 1, "&&": 2, "|": 3, "^": 4, "&": 5, "==": 6, "!=": 6,
    "<": 7, ">": 7, "<=": 7, ">=": 7,
    "<<": 8, ">>": 8, ">>>": 8, "+": 9, "-": 9, "*": 10, "/": 10, "%": 10,
}


def outer_span(node: Node) -> Span:
    """Span of ``node`` including any parentheses written around it."""
    if getattr(node, "parens", 0):
        return Span(node.outer_start, node.outer_end)
    return node.span


def link(root: Node) -> Node:
    """Set parent pointers below ``root``."""
    for node in root.walk():
        for child in node.children():
            child.parent = node
    return root


def is_statement(node: Node) -> bool:
    return node.kind in STATEMENT_KINDS


def enclosing_statement(node: Node) -> Optional[Node]:
    """Innermost statement containing ``node`` (blocks excluded)."""
    cur: Optional[Node] = node
    while cur is not None:
        if cur.kind in STATEMENT_KINDS and cur.kind != "Block":
            return cur
        if cur.kind in ("FieldDecl", "MethodDecl", "ClassDecl"):
            return None
        cur = cur.parent
    return None
