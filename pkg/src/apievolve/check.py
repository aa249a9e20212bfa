"""Structural check that an updated file is a correct one-to-one API update."""

from __future__ import annotations

from typing import Iterable

from .jsrc import nodes as n
from .jsrc.lexer import IDENT, tokenize
from .jsrc.parser import SourceUnit
from .normalize import is_temp_name
from .patch.generate import new_branch_first
from .patch.script import mentions_sdk_int


def _has_call(branch, sig) -> bool:
    return branch is not None and any(
        isinstance(x, n.MethodInvocation) and x.name == sig.method and len(x.args) == sig.arity
        for x in branch.walk()
    )


def check_update(unit: SourceUnit, mapping, definitions: Iterable[str] = ()) -> list[str]:
    """Problems found in ``unit``; an empty list means the update looks correct.

    Requires a version guard whose newer-SDK branch calls the replacement and
    whose other branch calls the deprecated method, a declaration for every
    name in ``definitions``, and no leftover normalization temporaries.
    """
    problems = []
    guards = [
        x for x in unit.root.walk()
        if isinstance(x, n.IfStmt) and mentions_sdk_int(unit.slice(x.cond))
    ]
    good = False
    for guard in guards:
        new_b, old_b = (guard.then, guard.else_) if new_branch_first(unit, guard) else (guard.else_, guard.then)
        if _has_call(new_b, mapping.replacement) and _has_call(old_b, mapping.deprecated):
            good = True
            break
    if not guards:
        problems.append("no Build.VERSION.SDK_INT guard")
    elif not good:
        problems.append("no guard with the replacement in the newer branch and the deprecated call in the other")
    declared = {
        x.name for x in unit.root.walk() if isinstance(x, (n.MethodDecl, n.ClassDecl))
    }
    for name in definitions:
        if name not in declared:
            problems.append(f"definition {name} missing")
    temps = sorted({
        t.text for t in tokenize(unit.text) if t.kind == IDENT and is_temp_name(t.text)
    })
    if temps:
        problems.append("temporaries left behind: " + ", ".join(temps))
    return problems
