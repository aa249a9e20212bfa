"""Applying an update script to a target file."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from ..jsrc import nodes as n
from ..jsrc.edits import EditSet, render_edits
from ..jsrc.lexer import EOF, IDENT, comments, line_col, tokenize
from ..jsrc.parser import SourceUnit, parse
from ..jsrc.query import find_invocations, opaque_mentions
from ..normalize import NormalizeError, denormalize, find_call, line_indent, normalize_invocation
from .definitions import copy_definitions, plan_renames
from .generate import new_branch_first
from .script import UpdateScript, mentions_sdk_int
from .template import BindFailure, SiteShape, bind, instantiate

UPDATED = "updated"
SKIPPED_GUARDED = "skipped-already-guarded"
SKIPPED_DUPLICATE = "skipped-duplicate-in-statement"
FAILED = "failed"
OUTCOMES = (UPDATED, SKIPPED_GUARDED, SKIPPED_DUPLICATE, FAILED)


@dataclass
class InvocationOutcome:
    line: int
    column: int
    outcome: str
    diagnostics: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"line": self.line, "column": self.column, "outcome": self.outcome,
                "diagnostics": list(self.diagnostics)}


@dataclass
class UpdateReport:
    target: str
    invocations: list[InvocationOutcome] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)
    phase_ms: dict[str, float] = field(default_factory=lambda: {"creation": 0.0, "application": 0.0})
    definitions: list[str] = field(default_factory=list)  # carried names as they appear in the output
    error: Optional[str] = None  # set when the file could not be processed at all

    @property
    def counts(self) -> dict[str, int]:
        counts = {k: 0 for k in OUTCOMES}
        for inv in self.invocations:
            counts[inv.outcome] += 1
        return counts

    @property
    def outcome(self) -> str:
        """File-level verdict: failed, updated or skipped."""
        counts = self.counts
        if counts[FAILED] or self.error:
            return FAILED
        if counts[UPDATED]:
            return UPDATED
        return "skipped"

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "outcome": self.outcome,
            "counts": {k: v for k, v in self.counts.items() if v},
            "invocations": [inv.to_dict() for inv in self.invocations],
            "definitions": list(self.definitions),
            "diagnostics": list(self.diagnostics) + ([self.error] if self.error else []),
            "phase_ms": dict(self.phase_ms),
        }


def _guard_of(node: n.Node, text: str) -> Optional[n.IfStmt]:
    child = node
    for anc in node.ancestors():
        if isinstance(anc, n.IfStmt) and child is not anc.cond:
            if mentions_sdk_int(text[anc.cond.start:anc.cond.end]):
                return anc
        child = anc
    return None


def _guarded(node: n.Node, text: str) -> bool:
    return _guard_of(node, text) is not None


def _in_newer_branch(unit: SourceUnit, node: n.Node) -> bool:
    guard = _guard_of(node, unit.text)
    if guard is None:
        return False
    newer = guard.then if new_branch_first(unit, guard) else guard.else_
    return newer is not None and newer.start <= node.start < newer.end


def _same_shape(script: UpdateScript, name: str, arity: int) -> bool:
    """True when the replacement call looks like the deprecated one (name and arity)."""
    calls = [
        x for x in parse(script.template_text).root.walk()
        if isinstance(x, n.MethodInvocation) and x.name == name and len(x.args) == arity
    ]
    return len(calls) > 1


def _opaque_calls(text: str, node: n.Node, name: str) -> list[int]:
    toks = [t for t in tokenize(text[node.start:node.end]) if t.kind != EOF]
    return [
        node.start + a.start for a, b in zip(toks, toks[1:])
        if a.kind == IDENT and a.text == name and b.is_op("(")
    ]


def apply_script(script: UpdateScript, target: SourceUnit, mapping=None, *, denormalize_output: bool = True):
    """Rewrite every unguarded deprecated invocation in ``target``.

    Returns the updated unit and an UpdateReport. Sites already under a
    version guard, or sharing a statement with an earlier site, are skipped
    and reported. ``mapping`` only refines the types given to temporaries.
    """
    started = time.perf_counter()
    report = UpdateReport(target.path)
    call = script.pattern_call()
    signature = (call.name, len(call.args))
    text = target.text

    outcomes: list[tuple[int, InvocationOutcome]] = []
    updatable: list[int] = []  # name_start offsets in the original text
    statements_seen: list[n.Node] = []
    same_shape = _same_shape(script, *signature)
    for inv in find_invocations(target, signature):
        if same_shape and _in_newer_branch(target, inv):
            continue  # the replacement API, not a deprecated use
        line, col = line_col(text, inv.name_start)
        out = InvocationOutcome(line, col, UPDATED)
        stmt = n.enclosing_statement(inv)
        if _guarded(inv, text):
            out.outcome = SKIPPED_GUARDED
            out.diagnostics.append("already inside a Build.VERSION.SDK_INT guard")
        elif stmt is None:
            out.outcome = FAILED
            out.diagnostics.append("invocation is not inside a method body")
        elif any(stmt is s for s in statements_seen):
            out.outcome = SKIPPED_DUPLICATE
            out.diagnostics.append("another invocation in the same statement was updated first")
        else:
            statements_seen.append(stmt)
            updatable.append(inv.name_start)
        outcomes.append((inv.name_start, out))

    for node in opaque_mentions(target, signature):
        guarded = mentions_sdk_int(text[node.start:node.end]) or _guarded(node, text)
        for offset in _opaque_calls(text, node, call.name):
            line, col = line_col(text, offset)
            if guarded:
                out = InvocationOutcome(line, col, SKIPPED_GUARDED, ["already guarded inside an unsupported construct"])
            else:
                out = InvocationOutcome(line, col, FAILED, ["invocation inside an unsupported construct (lambda, loop, ...)"])
            outcomes.append((offset, out))
    outcomes.sort(key=lambda pair: pair[0])
    by_offset = {off: out for off, out in outcomes}

    renames, reused = plan_renames(target, script.carried_definitions)
    current = target
    records = []
    anchor = None
    for offset in reversed(updatable):
        out = by_offset[offset]
        inv = next((x for x in find_invocations(current, signature) if x.name_start == offset), None)
        if inv is None:
            out.outcome = FAILED
            out.diagnostics.append("invocation vanished during rewriting")
            continue
        try:
            normalized, record = normalize_invocation(current, inv, mapping)
            site_call = find_call(normalized, record.call_span)
            stmt = n.enclosing_statement(site_call)
            site = SiteShape.of(normalized.text, site_call)
            values = bind(script, site)
            indent = line_indent(normalized.text, stmt.start)
            replacement = instantiate(script, values, site, renames, indent)
        except (NormalizeError, BindFailure) as exc:
            out.outcome = FAILED
            out.diagnostics.append(str(exc))
            continue
        edits = EditSet([(stmt.span, replacement)])
        current = parse(render_edits(normalized, edits), target.path)
        records.append(record)
        anchor = offset

    if records:
        report.definitions = [renames.get(d.name, d.name) for d in script.carried_definitions]
        current = copy_definitions(
            current, script.carried_definitions, anchor=anchor, renames=renames, reused=reused
        )
        if renames:
            report.diagnostics.append(
                "renamed copied definitions: " + ", ".join(f"{a} -> {b}" for a, b in sorted(renames.items()))
            )
        if denormalize_output:
            result = denormalize(current, records)
            current = result.unit
            report.diagnostics.extend(result.diagnostics)
        lost = Counter(comments(text)) - Counter(comments(current.text))
        if lost:
            report.diagnostics.append(
                f"dropped {sum(lost.values())} comment(s) inside rewritten statements: "
                + ", ".join(repr(c) for c in lost.elements())
            )

    report.invocations = [out for _, out in outcomes]
    if not outcomes:
        report.diagnostics.append(f"no invocation of {call.name} with {len(call.args)} argument(s)")
    report.phase_ms["application"] = (time.perf_counter() - started) * 1000.0
    return current, report
