import json
import shutil

import pytest

from apievolve.corpus import ManifestError, load_manifest, migrate, run_corpus, without_timing
from apievolve.jsrc import parse, token_texts
from apievolve.patch.apply import SKIPPED_GUARDED, UPDATED

from conftest import CORPUS, FIXTURES

VIBRATE = FIXTURES / "vibrate"


@pytest.fixture(scope="module")
def corpus_run():
    return run_corpus(CORPUS / "manifest.json")


def test_manifest_lists_every_api_directory():
    entries = load_manifest(CORPUS / "manifest.json")
    dirs = sorted(p.name for p in (CORPUS / "apis").iterdir() if p.is_dir())
    assert sorted(e.name for e in entries) == dirs
    assert all(len(e.targets) >= 3 and len(e.expected) == len(e.targets) for e in entries)


def test_every_corpus_entry_passes(corpus_run):
    failed = {e.name: e.reasons for e in corpus_run.entries if e.status != "ok"}
    assert failed == {}


def test_counts_add_up(corpus_run):
    for e in corpus_run.entries:
        assert e.updated + e.skipped + e.failed == e.targets == len(e.reports)
        for r in e.reports:
            d = r.to_dict()
            assert sum(d["counts"].values()) == len(d["invocations"])
    totals = corpus_run.totals()
    assert totals["targets"] == sum(e.targets for e in corpus_run.entries)


def test_runs_are_identical_apart_from_timing(corpus_run):
    again = run_corpus(CORPUS / "manifest.json")
    assert without_timing(again.to_dict()) == without_timing(corpus_run.to_dict())


def test_failure_mode_manifest_passes():
    run = run_corpus(CORPUS / "failure_modes" / "manifest.json")
    assert [e.status for e in run.entries] == ["ok"] * 3
    by_name = {e.name: e for e in run.entries}
    assert "external-to-file" in by_name["out_of_file"].reasons
    assert not by_name["out_of_file"].script_created


def test_empty_manifest(tmp_path):
    path = tmp_path / "manifest.json"
    path.write_text("[]", encoding="utf-8")
    run = run_corpus(path)
    assert run.entries == []
    assert run.totals()["entries"] == 0


@pytest.mark.parametrize("body", ['{"a": 1}', "[{}]", "not json", '[{"mapping": "m", "example": "e", "targets": ["t"]}]'])
def test_bad_manifests_are_rejected(tmp_path, body):
    path = tmp_path / "manifest.json"
    path.write_text(body, encoding="utf-8")
    with pytest.raises(ManifestError):
        load_manifest(path)


def test_migrate_mixed_targets():
    guarded = CORPUS / "failure_modes" / "already_guarded" / "Notifier.java"
    plain = [VIBRATE / "target.java", CORPUS / "apis" / "vibrate_long" / "targets" / "Buzzer.java"]
    summary, results = migrate(VIBRATE / "example.java", VIBRATE / "mapping.txt", [guarded, *plain])
    assert (summary.updated, summary.skipped, summary.failed) == (2, 1, 0)
    assert results[0].report.counts[SKIPPED_GUARDED] == 1
    assert results[0].text == guarded.read_text(encoding="utf-8")
    for res in results[1:]:
        assert res.report.outcome == UPDATED
        parse(res.text)
    assert summary.creation_ms < 15000
    assert summary.mean_application_ms < 15000


def test_unparseable_target_is_reported_not_raised(tmp_path):
    bad = tmp_path / "Bad.java"
    bad.write_text("class Bad { void m( }", encoding="utf-8")
    summary, results = migrate(VIBRATE / "example.java", VIBRATE / "mapping.txt", [bad])
    assert summary.failed == 1
    assert results[0].text is None
    assert "parse error" in results[0].report.to_dict()["diagnostics"][-1]


def test_golden_mismatch_fails_the_entry(tmp_path):
    src = CORPUS / "apis" / "vibrate_long"
    shutil.copytree(src, tmp_path / "apis" / "vibrate_long")
    golden = tmp_path / "apis" / "vibrate_long" / "expected" / "Buzzer.java"
    golden.write_text(golden.read_text(encoding="utf-8").replace("createVibration(3", "createVibration(4"),
                      encoding="utf-8")
    entry = next(e for e in json.loads((CORPUS / "manifest.json").read_text()) if e["name"] == "vibrate_long")
    (tmp_path / "manifest.json").write_text(json.dumps([entry]), encoding="utf-8")
    run = run_corpus(tmp_path / "manifest.json")
    assert run.entries[0].status == "failed"
    assert any("Buzzer.java" in r for r in run.entries[0].reasons)


def test_expected_files_differ_from_targets_only_inside_the_class():
    # golden files keep the untouched prefix of each target byte for byte
    for entry in load_manifest(CORPUS / "manifest.json"):
        for target, golden in zip(entry.targets, entry.expected):
            t = target.read_text(encoding="utf-8")
            g = golden.read_text(encoding="utf-8")
            assert t.splitlines()[0] == g.splitlines()[0]
            assert token_texts(t) != token_texts(g)
