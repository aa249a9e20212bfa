"""Deriving an update script from one after-update example."""

from __future__ import annotations

from typing import Optional

from ..flow import Unresolved, resolve_expression
from ..jsrc import nodes as n
from ..jsrc.lexer import EOF, tokenize, token_texts
from ..jsrc.parser import SourceUnit
from .definitions import dedent_declaration
from .mapping import ApiMapping, ApiSignature
from .script import (
    BINDING_PREFIX, CarriedDefinition, Metavariable, UpdateScript, guard_for,
    mentions_sdk_int, validate_script,
)


class ScriptGenerationError(ValueError):
    pass


class NoGuardFound(ScriptGenerationError):
    pass


class BothBranchesSameApi(ScriptGenerationError):
    pass


class UnresolvedNewArgument(ScriptGenerationError):
    def __init__(self, unresolved: list[Unresolved]):
        self.unresolved = unresolved
        names = ", ".join(f"{u.name} ({u.reason})" for u in unresolved)
        super().__init__(f"replacement argument depends on unresolved names: {names}")


def one_line(text: str) -> str:
    """Join a multi-line expression onto one line without touching literals."""
    toks = [t for t in tokenize(text) if t.kind != EOF]
    if not toks:
        return text.strip()
    out = [toks[0].text]
    for prev, tok in zip(toks, toks[1:]):
        gap = text[prev.end:tok.start]
        if gap:
            out.append(" " if ("\n" in gap or "/" in gap) else gap)
        out.append(tok.text)
    return "".join(out)


def _calls(branch: Optional[n.Node], sig: ApiSignature) -> list[n.MethodInvocation]:
    if branch is None:
        return []
    found = [
        x for x in branch.walk()
        if isinstance(x, n.MethodInvocation) and x.name == sig.method and len(x.args) == sig.arity
    ]
    found.sort(key=lambda x: x.name_start)
    return found


def new_branch_first(example: SourceUnit, guard: n.IfStmt) -> bool:
    """True when the then-branch runs on newer SDK levels."""
    cond = guard.cond
    if not isinstance(cond, n.BinaryExpr):
        return True
    left_has = mentions_sdk_int(example.slice(cond.left))
    op = cond.op
    if not left_has:
        op = {">=": "<=", ">": "<", "<=": ">=", "<": ">"}.get(op, op)
    return op in (">=", ">", "==")


def locate_example(example: SourceUnit, mapping: ApiMapping):
    """Find the guard and the (replacement, deprecated) invocations in it."""
    dep, rep = mapping.deprecated, mapping.replacement
    guards = [
        x for x in example.root.walk()
        if isinstance(x, n.IfStmt) and mentions_sdk_int(example.slice(x.cond))
    ]
    if not guards:
        raise NoGuardFound("no version guard found (no if statement tests Build.VERSION.SDK_INT)")
    same_shape = dep.method == rep.method and dep.arity == rep.arity
    same_api = None
    for guard in guards:
        if guard.else_ is None:
            continue
        new_b, old_b = (guard.then, guard.else_) if new_branch_first(example, guard) else (guard.else_, guard.then)
        if same_shape:
            new_calls, old_calls = _calls(new_b, rep), _calls(old_b, dep)
            if new_calls and old_calls:
                if token_texts(example.slice(new_calls[0])) == token_texts(example.slice(old_calls[0])):
                    same_api = guard
                    continue
                return guard, new_calls[0], old_calls[0]
            continue
        if _calls(new_b, rep) and _calls(old_b, dep):
            return guard, _calls(new_b, rep)[0], _calls(old_b, dep)[0]
        if _calls(old_b, rep) and _calls(new_b, dep):
            return guard, _calls(old_b, rep)[0], _calls(new_b, dep)[0]  # branches written the other way round
        if (_calls(new_b, dep) and _calls(old_b, dep)) or (_calls(new_b, rep) and _calls(old_b, rep)):
            same_api = guard
    if same_api is not None:
        raise BothBranchesSameApi("both branches of the version guard call the same API")
    raise NoGuardFound(
        f"no version guard found with {rep.method} and {dep.method} in opposite branches"
    )


def _value_used(call: n.MethodInvocation) -> bool:
    return not isinstance(call.parent, n.ExprStmt)


def generate_script(example: SourceUnit, mapping: ApiMapping) -> UpdateScript:
    """Build the update script for ``mapping`` from an after-update example."""
    _, new, old = locate_example(example, mapping)
    metavariables: list[Metavariable] = []
    pins: dict[str, str] = {}
    diagnostics: list[str] = []

    old_recv = None
    if old.receiver is not None:
        old_recv = example.slice(old.receiver)
        metavariables.append(Metavariable("identifier", "recv"))
        pins[old_recv] = "recv"
    uses_value = _value_used(old) or _value_used(new)
    if uses_value:
        metavariables.append(Metavariable("identifier", "ret"))
    old_args = []
    for i, arg in enumerate(old.args):
        name = f"exp{i}"
        metavariables.append(Metavariable("expression", name))
        text = example.slice(arg)
        old_args.append((token_texts(text), name))
        if not isinstance(arg, n.Literal):
            pins.setdefault(text, name)
    mv_names = {m.name for m in metavariables}

    unresolved: list[Unresolved] = []
    definitions: list = []
    bindings: list[tuple[str, str]] = []

    def resolve(node: n.Node) -> str:
        result = resolve_expression(example, node, pinned=pins)
        for u in result.unresolved:
            if u not in unresolved:
                unresolved.append(u)
        for d in result.required_definitions:
            if all(d.qualified_name != e.qualified_name for e in definitions):
                definitions.append(d)
        for msg in result.diagnostics:
            if msg not in diagnostics:
                diagnostics.append(msg)
        return one_line(result.text)

    new_recv = ""
    if new.receiver is not None:
        text = example.slice(new.receiver)
        if old_recv is not None and token_texts(text) == token_texts(old_recv):
            new_recv = "recv"
        else:
            new_recv = resolve(new.receiver)

    new_args = []
    for j, arg in enumerate(new.args):
        toks = token_texts(example.slice(arg))
        match = next((name for old_toks, name in old_args if old_toks == toks), None)
        if match is not None:
            new_args.append(match)
            continue
        text = resolve(arg)
        if mv_names & {t.text for t in tokenize(text) if t.kind == "ident"}:
            new_args.append(text)  # mixes metavariables with concrete code
        else:
            name = f"{BINDING_PREFIX}{j}"
            bindings.append((name, text))
            new_args.append(name)
    if unresolved:
        raise UnresolvedNewArgument(unresolved)

    guard = guard_for(mapping.guard_symbol, mapping.guard_level)
    lhs = "ret = " if uses_value else ""
    old_call = f"{'recv.' if old_recv is not None else ''}{old.type_args}{old.name}({', '.join(f'exp{i}' for i in range(len(old.args)))})"
    new_call = f"{new_recv + '.' if new_recv else ''}{new.type_args}{new.name}({', '.join(new_args)})"
    template = [
        f"if ({guard.condition}) {{",
        f"    {lhs}{new_call};",
        "} else {",
        f"    {lhs}{old_call};",
        "}",
    ]
    carried = [
        CarriedDefinition(d.kind, d.name, dedent_declaration(example.text, d.node))
        for d in definitions
    ]
    script = UpdateScript(
        name=f"{mapping.deprecated.method}_to_{mapping.replacement.method}",
        metavariables=metavariables,
        guard=guard,
        match_pattern=[f"{lhs}{old_call};"],
        replacement_template=template,
        carried_definitions=carried,
        carried_bindings=bindings,
        diagnostics=diagnostics,
    )
    validate_script(script)
    return script
