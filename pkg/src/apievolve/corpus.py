"""Running migrations over a set of targets and over a manifest of API entries."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .check import check_update
from .jsrc.errors import ParseError
from .jsrc.lexer import token_texts
from .jsrc.parser import parse
from .patch.apply import FAILED, UPDATED, UpdateReport, apply_script
from .patch.generate import ScriptGenerationError, UnresolvedNewArgument, generate_script
from .patch.mapping import MappingError, load_mapping


class ManifestError(ValueError):
    pass


@dataclass
class ManifestEntry:
    mapping: Path
    example: Path
    targets: list[Path]
    expected: list[Optional[Path]] = field(default_factory=list)
    outcomes: Optional[list[str]] = None  # expected file-level outcomes; default all updated
    expect_error: Optional[str] = None  # expected script-creation failure reason
    check: bool = True  # run the structural checker on updated outputs
    name: str = ""


def load_manifest(path) -> list[ManifestEntry]:
    """Read a manifest; relative paths are taken from the manifest's directory."""
    path = Path(path)
    base = path.parent
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ManifestError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(raw, list):
        raise ManifestError(f"{path}: manifest must be a JSON list")
    entries = []
    for i, item in enumerate(raw):
        try:
            targets = [base / t for t in item["targets"]]
            expected = [base / e if e else None for e in item.get("expected", [])]
            entry = ManifestEntry(
                mapping=base / item["mapping"],
                example=base / item["example"],
                targets=targets,
                expected=expected,
                outcomes=item.get("outcomes"),
                expect_error=item.get("expect_error"),
                check=bool(item.get("check", True)),
                name=item.get("name", ""),
            )
        except (KeyError, TypeError) as exc:
            raise ManifestError(f"{path}: entry {i} is malformed: {exc}") from exc
        if entry.expected and len(entry.expected) != len(entry.targets):
            raise ManifestError(f"{path}: entry {i} has {len(entry.expected)} expected files for {len(targets)} targets")
        if entry.outcomes is not None and len(entry.outcomes) != len(entry.targets):
            raise ManifestError(f"{path}: entry {i} has {len(entry.outcomes)} outcomes for {len(targets)} targets")
        for p in [entry.mapping, entry.example, *entry.targets, *[e for e in entry.expected if e]]:
            if not p.is_file():
                raise ManifestError(f"{path}: entry {i} references missing file {p}")
        entries.append(entry)
    return entries


@dataclass
class EntrySummary:
    api: str
    name: str = ""
    targets: int = 0
    updated: int = 0
    skipped: int = 0
    failed: int = 0
    creation_ms: float = 0.0
    mean_application_ms: float = 0.0
    status: str = "ok"
    script_created: bool = True
    reasons: list[str] = field(default_factory=list)
    reports: list[UpdateReport] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "api": self.api,
            "targets": self.targets,
            "updated": self.updated,
            "skipped": self.skipped,
            "failed": self.failed,
            "status": self.status,
            "script_created": self.script_created,
            "reasons": list(self.reasons),
            "phase_ms": {"creation": self.creation_ms, "application": self.mean_application_ms},
            "reports": [r.to_dict() for r in self.reports],
        }


@dataclass
class RunSummary:
    entries: list[EntrySummary] = field(default_factory=list)

    def totals(self) -> dict:
        keys = ("targets", "updated", "skipped", "failed")
        out = {k: sum(getattr(e, k) for e in self.entries) for k in keys}
        out["entries"] = len(self.entries)
        out["entries_failed"] = sum(1 for e in self.entries if e.status != "ok")
        return out

    def to_dict(self) -> dict:
        return {"entries": [e.to_dict() for e in self.entries], "totals": self.totals()}

    def table(self) -> str:
        rows = [("API", "targets", "updated", "skipped", "failed", "create ms", "apply ms", "status")]
        for e in self.entries:
            rows.append((e.name or e.api, str(e.targets), str(e.updated), str(e.skipped), str(e.failed),
                         f"{e.creation_ms:.1f}", f"{e.mean_application_ms:.1f}", e.status))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def without_timing(data):
    """Copy of a report dict with every ``phase_ms`` value zeroed."""
    if isinstance(data, dict):
        return {k: ({p: 0.0 for p in v} if k == "phase_ms" else without_timing(v)) for k, v in data.items()}
    if isinstance(data, list):
        return [without_timing(x) for x in data]
    return data


@dataclass
class TargetResult:
    path: Path
    report: UpdateReport
    text: Optional[str]  # updated text; None when the target could not be parsed


def migrate(example_path, mapping_path, target_paths, *, labels=None) -> tuple[EntrySummary, list[TargetResult]]:
    """Create the script once and apply it to each target in order.

    Nothing is written to disk. ``labels`` gives the names used for the
    targets in reports (default: the paths as given).
    """
    target_paths = [Path(p) for p in target_paths]
    labels = labels or [str(p) for p in target_paths]
    mapping = load_mapping(mapping_path)
    summary = EntrySummary(api=str(mapping.deprecated), targets=len(target_paths))
    started = time.perf_counter()
    script = None
    try:
        example = parse(Path(example_path).read_text(encoding="utf-8"), str(example_path))
        script = generate_script(example, mapping)
    except UnresolvedNewArgument as exc:
        summary.reasons.extend(sorted({u.reason for u in exc.unresolved}))
        summary.reasons.append(str(exc))
    except (ScriptGenerationError, ParseError) as exc:
        summary.reasons.append(str(exc))
    summary.creation_ms = (time.perf_counter() - started) * 1000.0
    if script is None:
        summary.script_created = False
    else:
        summary.reasons.extend(script.diagnostics)

    results = []
    for path, label in zip(target_paths, labels):
        report = UpdateReport(label)
        report.phase_ms["creation"] = summary.creation_ms
        text = None
        if script is None:
            report.error = "update script could not be created"
        else:
            try:
                unit = parse(path.read_text(encoding="utf-8"), label)
            except ParseError as exc:
                report.error = f"parse error: {exc}"
            else:
                out, applied = apply_script(script, unit, mapping)
                applied.phase_ms["creation"] = summary.creation_ms
                report, text = applied, out.text
        outcome = report.outcome
        if outcome == UPDATED:
            summary.updated += 1
        elif outcome == FAILED:
            summary.failed += 1
        else:
            summary.skipped += 1
        summary.reports.append(report)
        results.append(TargetResult(path, report, text))
    times = [r.phase_ms["application"] for r in summary.reports]
    summary.mean_application_ms = sum(times) / len(times) if times else 0.0
    if script is None or summary.failed:
        summary.status = "failed"
    return summary, results


def file_outcome(result: TargetResult) -> str:
    return result.report.outcome


def run_entry(entry: ManifestEntry, base: Path) -> tuple[EntrySummary, list[TargetResult]]:
    """Migrate one manifest entry and judge it against its expectations."""
    labels = [_label(p, base) for p in entry.targets]
    try:
        summary, results = migrate(entry.example, entry.mapping, entry.targets, labels=labels)
    except (MappingError, OSError) as exc:
        summary = EntrySummary(api=_label(entry.mapping, base), name=entry.name, targets=len(entry.targets),
                               failed=len(entry.targets), status="failed", reasons=[str(exc)])
        return summary, []
    problems = []
    if entry.expect_error is not None:
        if entry.expect_error not in summary.reasons:
            problems.append(f"expected script creation to fail with {entry.expect_error}")
    else:
        mapping = load_mapping(entry.mapping)
        wanted = entry.outcomes or [UPDATED] * len(results)
        for i, (res, want) in enumerate(zip(results, wanted)):
            got = file_outcome(res)
            if got != want:
                problems.append(f"{res.report.target}: outcome {got}, expected {want}")
                continue
            if got == UPDATED and entry.check:
                issues = check_update(parse(res.text), mapping, res.report.definitions)
                problems.extend(f"{res.report.target}: {p}" for p in issues)
            golden = entry.expected[i] if entry.expected else None
            if golden is not None and res.text is not None:
                if token_texts(res.text) != token_texts(golden.read_text(encoding="utf-8")):
                    problems.append(f"{res.report.target}: output differs from {_label(golden, base)}")
    summary.name = entry.name
    summary.reasons.extend(problems)
    summary.status = "failed" if problems else "ok"
    return summary, results


def _label(path: Path, base: Path) -> str:
    try:
        return str(path.relative_to(base))
    except ValueError:
        return str(path)


def run_corpus(manifest_path) -> RunSummary:
    """Run every manifest entry sequentially."""
    manifest_path = Path(manifest_path)
    run = RunSummary()
    for entry in load_manifest(manifest_path):
        summary, _ = run_entry(entry, manifest_path.parent)
        run.entries.append(summary)
    return run
