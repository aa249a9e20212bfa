"""Update scripts: the data model and the ``.aes`` text format.

Layout::

    @getCurrentMinute_to_getMinute@
    identifier recv;
    identifier ret;
    @@
    - ret = recv.getCurrentMinute();
    + if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
    +     ret = recv.getMinute();
    + } else {
    +     ret = recv.getCurrentMinute();
    + }
    @defs@
    <verbatim Java declarations>
    @bind@
    newParameterVariable0 = new AudioAttributes.Builder().build();

``@defs@`` and ``@bind@`` are present only when non-empty.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from ..jsrc import nodes as n
from ..jsrc.errors import ParseError
from ..jsrc.lexer import EOF, IDENT, tokenize
from ..jsrc.parser import parse, parse_expression

METAVARIABLE_KINDS = ("expression", "identifier", "type")
BINDING_PREFIX = "newParameterVariable"

# Identifiers reserved for metavariables; using one undeclared is an error.
_RESERVED_RE = re.compile(r"^(?:exp|e|iden|recv|ret|classIden)\d*$")
_BINDING_RE = re.compile(rf"^{BINDING_PREFIX}\d+$")
_HEADER_RE = re.compile(r"^@([A-Za-z_$][\w$.\-]*)@$")
_DECL_RE = re.compile(r"^(expression|identifier|type)\s+(.+?)\s*;\s*$")
_BIND_RE = re.compile(r"^([A-Za-z_$][\w$]*)\s*=\s*(.+?)\s*;\s*$")
_NAME_RE = re.compile(r"^[A-Za-z_$][\w$]*$")

VERSION_CODES = {
    "BASE": 1, "BASE_1_1": 2, "CUPCAKE": 3, "DONUT": 4, "ECLAIR": 5, "ECLAIR_0_1": 6,
    "ECLAIR_MR1": 7, "FROYO": 8, "GINGERBREAD": 9, "GINGERBREAD_MR1": 10, "HONEYCOMB": 11,
    "HONEYCOMB_MR1": 12, "HONEYCOMB_MR2": 13, "ICE_CREAM_SANDWICH": 14,
    "ICE_CREAM_SANDWICH_MR1": 15, "JELLY_BEAN": 16, "JELLY_BEAN_MR1": 17, "JELLY_BEAN_MR2": 18,
    "KITKAT": 19, "KITKAT_WATCH": 20, "LOLLIPOP": 21, "LOLLIPOP_MR1": 22, "M": 23, "N": 24,
    "N_MR1": 25, "O": 26, "O_MR1": 27, "P": 28, "Q": 29, "R": 30, "S": 31, "S_V2": 32,
    "TIRAMISU": 33, "UPSIDE_DOWN_CAKE": 34, "VANILLA_ICE_CREAM": 35,
}
VERSION_CODES_PREFIX = "android.os.Build.VERSION_CODES."
SDK_INT = "android.os.Build.VERSION.SDK_INT"


class ScriptSyntaxError(ValueError):
    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class UndeclaredMetavariable(ScriptSyntaxError):
    pass


class Metavariable(NamedTuple):
    kind: str
    name: str


class Guard(NamedTuple):
    symbol: str  # fully qualified VERSION_CODES constant, or a level literal
    level: int

    @property
    def condition(self) -> str:
        return f"{SDK_INT} >= {self.symbol}"


class CarriedDefinition(NamedTuple):
    kind: str  # "method" or "class"
    name: str
    text: str


def guard_for(symbol: str, level: int) -> Guard:
    """Pick a guard whose symbol alone determines the level."""
    short = symbol.rsplit(".", 1)[-1]
    if VERSION_CODES.get(short) == level:
        return Guard(VERSION_CODES_PREFIX + short, level)
    return Guard(str(level), level)


def level_of(symbol_text: str) -> Optional[int]:
    text = "".join(symbol_text.split())
    if text.isdigit():
        return int(text)
    short = text.rsplit(".", 1)[-1]
    if "VERSION_CODES" in text or text == short:
        return VERSION_CODES.get(short)
    return None


@dataclass
class UpdateScript:
    name: str
    metavariables: list[Metavariable]
    guard: Guard
    match_pattern: list[str]
    replacement_template: list[str]
    carried_definitions: list[CarriedDefinition] = field(default_factory=list)
    carried_bindings: list[tuple[str, str]] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list, compare=False)

    def metavariable_names(self, kind: Optional[str] = None) -> list[str]:
        return [m.name for m in self.metavariables if kind is None or m.kind == kind]

    @property
    def pattern_text(self) -> str:
        return "\n".join(self.match_pattern)

    @property
    def template_text(self) -> str:
        return "\n".join(self.replacement_template)

    def pattern_call(self) -> n.MethodInvocation:
        """The deprecated invocation the pattern matches."""
        return _pattern_call(self.pattern_text)

    def bindings(self) -> dict[str, str]:
        return dict(self.carried_bindings)


def _pattern_call(text: str) -> n.MethodInvocation:
    try:
        unit = parse(text)
    except ParseError as exc:
        raise ScriptSyntaxError(f"pattern does not parse: {exc}") from None
    stmts = unit.root.members
    if len(stmts) != 1 or not isinstance(stmts[0], n.ExprStmt):
        raise ScriptSyntaxError("pattern must be a single expression statement")
    expr = stmts[0].expr
    if isinstance(expr, n.AssignExpr):
        expr = expr.value
    if not isinstance(expr, n.MethodInvocation):
        raise ScriptSyntaxError("pattern must contain an invocation")
    return expr


def _identifiers(text: str) -> list[str]:
    toks = [t for t in tokenize(text) if t.kind != EOF]
    return [
        t.text for i, t in enumerate(toks)
        if t.kind == IDENT and not (i and toks[i - 1].is_op("."))
    ]


def serialize_script(script: UpdateScript) -> str:
    lines = [f"@{script.name}@"]
    lines += [f"{m.kind} {m.name};" for m in script.metavariables]
    lines.append("@@")
    lines += [f"- {line}".rstrip() for line in script.match_pattern]
    lines += [f"+ {line}".rstrip() for line in script.replacement_template]
    if script.carried_definitions:
        lines.append("@defs@")
        lines.append("\n\n".join(d.text for d in script.carried_definitions))
    if script.carried_bindings:
        lines.append("@bind@")
        lines += [f"{name} = {expr};" for name, expr in script.carried_bindings]
    return "\n".join(lines) + "\n"


def parse_script(text: str) -> UpdateScript:
    lines = text.splitlines()
    if not lines:
        raise ScriptSyntaxError("empty script", 1)
    m = _HEADER_RE.match(lines[0].strip())
    if not m:
        raise ScriptSyntaxError("expected '@name@' header", 1)
    name = m.group(1)

    metavariables: list[Metavariable] = []
    i = 1
    while i < len(lines) and lines[i].strip() != "@@":
        raw = lines[i].strip()
        if raw:
            d = _DECL_RE.match(raw)
            if not d:
                raise ScriptSyntaxError(f"bad metavariable declaration {raw!r}", i + 1)
            for mv in d.group(2).split(","):
                mv = mv.strip()
                if not _NAME_RE.match(mv):
                    raise ScriptSyntaxError(f"bad metavariable name {mv!r}", i + 1)
                if any(existing.name == mv for existing in metavariables):
                    raise ScriptSyntaxError(f"metavariable {mv!r} declared twice", i + 1)
                metavariables.append(Metavariable(d.group(1), mv))
        i += 1
    if i >= len(lines):
        raise ScriptSyntaxError("missing '@@' separator", len(lines))
    i += 1

    pattern: list[str] = []
    template: list[str] = []
    first_body_line = i + 1
    while i < len(lines) and lines[i].strip() not in ("@defs@", "@bind@"):
        raw = lines[i]
        if raw.startswith("-"):
            if template:
                raise ScriptSyntaxError("pattern line after template lines", i + 1)
            pattern.append(raw[2:] if raw.startswith("- ") else raw[1:])
        elif raw.startswith("+"):
            template.append(raw[2:] if raw.startswith("+ ") else raw[1:])
        elif raw.strip():
            raise ScriptSyntaxError("body lines must start with '- ' or '+ '", i + 1)
        i += 1
    if not pattern:
        raise ScriptSyntaxError("script has no '- ' pattern lines", first_body_line)
    if not template:
        raise ScriptSyntaxError("script has no '+ ' template lines", first_body_line)

    defs: list[CarriedDefinition] = []
    bindings: list[tuple[str, str]] = []
    if i < len(lines) and lines[i].strip() == "@defs@":
        start = i + 1
        i += 1
        while i < len(lines) and lines[i].strip() != "@bind@":
            i += 1
        defs = _parse_defs("\n".join(lines[start:i]), start + 1)
    if i < len(lines) and lines[i].strip() == "@bind@":
        i += 1
        while i < len(lines):
            raw = lines[i].strip()
            if raw:
                b = _BIND_RE.match(raw)
                if not b:
                    raise ScriptSyntaxError(f"bad binding {raw!r}", i + 1)
                try:
                    parse_expression(b.group(2))
                except ParseError as exc:
                    raise ScriptSyntaxError(f"binding does not parse: {exc}", i + 1) from None
                bindings.append((b.group(1), b.group(2)))
            i += 1

    script = UpdateScript(
        name=name,
        metavariables=metavariables,
        guard=Guard("0", 0),
        match_pattern=pattern,
        replacement_template=template,
        carried_definitions=defs,
        carried_bindings=bindings,
    )
    script.guard = validate_script(script)
    return script


def _parse_defs(text: str, first_line: int) -> list[CarriedDefinition]:
    if not text.strip():
        return []
    # parsed as members of a holder class so methods and classes can mix in any order
    head = "class __Defs__ {\n"
    try:
        unit = parse(head + text + "\n}\n")
    except ParseError as exc:
        line = first_line + max(exc.line - 2, 0)
        raise ScriptSyntaxError(f"definitions do not parse: {exc.message}", line) from None
    defs = []
    for member in unit.root.members[0].members:
        if isinstance(member, n.ClassDecl):
            defs.append(CarriedDefinition("class", member.name, unit.slice(member)))
        elif isinstance(member, n.MethodDecl):
            defs.append(CarriedDefinition("method", member.name, unit.slice(member)))
        else:
            raise ScriptSyntaxError("definitions section holds a non-declaration", first_line)
    return defs


def find_guard(root: n.Node, text: str) -> Optional[n.IfStmt]:
    for node in root.walk():
        if isinstance(node, n.IfStmt) and mentions_sdk_int(text[node.cond.start:node.cond.end]):
            return node
    return None


def mentions_sdk_int(text: str) -> bool:
    toks = [t.text for t in tokenize(text) if t.kind != EOF]
    return any(toks[k:k + 3] == ["VERSION", ".", "SDK_INT"] for k in range(len(toks)))


def validate_script(script: UpdateScript) -> Guard:
    """Check declarations and template shape; return the template's guard."""
    declared = set(script.metavariable_names())
    bound = {name for name, _ in script.carried_bindings}
    for name in bound:
        if not _BINDING_RE.match(name):
            raise ScriptSyntaxError(f"binding name {name!r} must look like {BINDING_PREFIX}N")
    for section in (script.pattern_text, script.template_text):
        try:
            idents = _identifiers(section)
        except ParseError as exc:
            raise ScriptSyntaxError(str(exc)) from None
        for ident in idents:
            if _RESERVED_RE.match(ident) and ident not in declared:
                raise UndeclaredMetavariable(f"undeclared metavariable {ident!r}")
            if _BINDING_RE.match(ident) and ident not in bound:
                raise UndeclaredMetavariable(f"binding {ident!r} has no '@bind@' entry")
    call = _pattern_call(script.pattern_text)

    try:
        unit = parse(script.template_text)
    except ParseError as exc:
        raise ScriptSyntaxError(f"template does not parse: {exc}") from None
    guards = [
        node for node in unit.root.walk()
        if isinstance(node, n.IfStmt) and mentions_sdk_int(unit.slice(node.cond))
    ]
    if len(guards) != 1 or len(unit.root.members) != 1 or guards[0] is not unit.root.members[0]:
        raise ScriptSyntaxError("template must be exactly one version guard")
    guard = guards[0]
    if guard.else_ is None:
        raise ScriptSyntaxError("version guard in template has no else branch")
    old_in_else = [
        x for x in guard.else_.walk()
        if isinstance(x, n.MethodInvocation) and x.name == call.name and len(x.args) == len(call.args)
    ]
    if len(old_in_else) != 1:
        raise ScriptSyntaxError("else branch must hold exactly one deprecated invocation")
    cond = guard.cond
    if not (isinstance(cond, n.BinaryExpr) and cond.op == ">="):
        raise ScriptSyntaxError("guard condition must be 'SDK_INT >= level'")
    symbol = "".join(unit.slice(cond.right).split())
    level = level_of(symbol)
    if level is None:
        raise ScriptSyntaxError(f"unknown guard level {symbol!r}")
    return Guard(symbol, level)
