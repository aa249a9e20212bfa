"""Command-line front end: apievolve create-script | apply | migrate | score | corpus."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import ManifestError, RunSummary, file_outcome, load_manifest, migrate, run_entry
from .jsrc.errors import ParseError
from .jsrc.parser import parse
from .patch.apply import UPDATED, apply_script
from .patch.generate import NoGuardFound, ScriptGenerationError, generate_script
from .patch.mapping import MappingError, load_mapping
from .patch.script import ScriptSyntaxError, parse_script, serialize_script
from .readability import NoApiUsage, score_unit

OK, PARTIAL, HARD = 0, 1, 2


def _err(msg: str) -> None:
    print(f"apievolve: {msg}", file=sys.stderr)


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write_json(path, data) -> None:
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=False) + "\n", encoding="utf-8")


def cmd_create_script(args) -> int:
    try:
        mapping = load_mapping(args.mapping)
        example = parse(_read(args.example), args.example)
        script = generate_script(example, mapping)
    except NoGuardFound as exc:
        _err(str(exc))
        return HARD
    except ParseError as exc:
        _err(f"{args.example}: {exc}")
        return HARD
    except (ScriptGenerationError, MappingError, OSError) as exc:
        _err(str(exc))
        return HARD
    for msg in script.diagnostics:
        _err(f"warning: {msg}")
    Path(args.output).write_text(serialize_script(script), encoding="utf-8")
    return OK


def cmd_apply(args) -> int:
    try:
        script = parse_script(_read(args.script))
        unit = parse(_read(args.target), args.target)
        mapping = load_mapping(args.mapping) if args.mapping else None
    except (ScriptSyntaxError, ParseError, MappingError, OSError) as exc:
        _err(str(exc))
        return HARD
    out, report = apply_script(script, unit, mapping)
    if out.text != unit.text or args.output:
        Path(args.output or args.target).write_text(out.text, encoding="utf-8")
    if args.report:
        _write_json(args.report, report.to_dict())
    counts = report.counts
    print(", ".join(f"{k}: {v}" for k, v in counts.items() if v) or "no invocations found", file=sys.stderr)
    if counts[UPDATED] and sum(counts.values()) == counts[UPDATED]:
        return OK
    return PARTIAL


def cmd_migrate(args) -> int:
    targets = sorted(Path(args.targets).rglob("*.java"))
    try:
        summary, results = migrate(args.example, args.mapping, targets)
    except (MappingError, OSError) as exc:
        _err(str(exc))
        return HARD
    for res in results:
        if res.text is not None and file_outcome(res) == UPDATED:
            res.path.write_text(res.text, encoding="utf-8")
    run = RunSummary([summary])
    _write_json(args.report, run.to_dict())
    print(run.table())
    if not summary.script_created:
        for reason in summary.reasons:
            _err(reason)
        return HARD
    return OK if summary.targets and summary.updated == summary.targets else PARTIAL


def cmd_score(args) -> int:
    try:
        mapping = load_mapping(args.mapping)
        before, notes_b = score_unit(parse(_read(args.before), args.before), mapping)
        after, notes_a = score_unit(parse(_read(args.after), args.after), mapping)
    except (NoApiUsage, ParseError, MappingError, OSError) as exc:
        _err(str(exc))
        return HARD
    for note in notes_b + notes_a:
        _err(note)
    print(f"before: {before:.4f}")
    print(f"after:  {after:.4f}")
    print(f"delta:  {after - before:+.4f}")
    return OK


def cmd_corpus(args) -> int:
    manifest = Path(args.manifest)
    try:
        entries = load_manifest(manifest)
    except (ManifestError, OSError) as exc:
        _err(str(exc))
        return HARD
    run = RunSummary()
    for entry in entries:
        summary, _ = run_entry(entry, manifest.parent)
        run.entries.append(summary)
    _write_json(args.report, run.to_dict())
    print(run.table())
    failed = [e for e in run.entries if e.status != "ok"]
    for e in failed:
        for reason in e.reasons:
            _err(f"{e.api}: {reason}")
    return PARTIAL if failed else OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apievolve",
        description="Update deprecated Android API calls from one after-update example.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("create-script", help="derive an update script from an example")
    p.add_argument("--example", required=True, help="Java file with a version-guarded update")
    p.add_argument("--mapping", required=True, help="API mapping file")
    p.add_argument("-o", "--output", required=True, help="where to write the script")
    p.set_defaults(func=cmd_create_script)

    p = subs.add_parser("apply", help="apply an update script to one file")
    p.add_argument("--script", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("-o", "--output", help="output file (default: rewrite the target in place)")
    p.add_argument("--report", help="write a JSON report here")
    p.add_argument("--mapping", help="mapping file, used only to type temporaries")
    p.set_defaults(func=cmd_apply)

    p = subs.add_parser("migrate", help="create a script and apply it to every .java file under a directory")
    p.add_argument("--example", required=True)
    p.add_argument("--mapping", required=True)
    p.add_argument("--targets", required=True, help="directory of target files, updated in place")
    p.add_argument("--report", required=True)
    p.set_defaults(func=cmd_migrate)

    p = subs.add_parser("score", help="compare readability of the API usage before and after")
    p.add_argument("--before", required=True)
    p.add_argument("--after", required=True)
    p.add_argument("--mapping", required=True)
    p.set_defaults(func=cmd_score)

    p = subs.add_parser("corpus", help="run a manifest of examples and targets")
    p.add_argument("--manifest", required=True)
    p.add_argument("--report", required=True)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
