import json
import shutil
import subprocess
import sys

import pytest

from apievolve.cli import HARD, OK, PARTIAL, main
from apievolve.jsrc import parse, token_texts

from conftest import CORPUS, FIXTURES

VIBRATE = FIXTURES / "vibrate"
FOCUS = FIXTURES / "audio_focus"


def _script(tmp_path, example, mapping):
    out = tmp_path / "update.aes"
    assert main(["create-script", "--example", str(example), "--mapping", str(mapping), "-o", str(out)]) == OK
    return out


def test_create_script_writes_a_parsable_script(tmp_path):
    out = _script(tmp_path, FOCUS / "example.java", FOCUS / "mapping.txt")
    text = out.read_text(encoding="utf-8")
    defs = text.split("@defs@", 1)[1]
    assert "class AudioFocusRequestOreo" in defs


def test_create_script_without_a_guard_is_a_hard_error(tmp_path, capsys):
    example = tmp_path / "Plain.java"
    example.write_text(VIBRATE.joinpath("target.java").read_text(encoding="utf-8"), encoding="utf-8")
    code = main(["create-script", "--example", str(example), "--mapping", str(VIBRATE / "mapping.txt"),
                 "-o", str(tmp_path / "s.aes")])
    assert code == HARD
    assert "no version guard found" in capsys.readouterr().err
    assert not (tmp_path / "s.aes").exists()


def test_create_script_with_an_unparsable_example(tmp_path, capsys):
    example = tmp_path / "Broken.java"
    example.write_text("class Broken {\n  void m( {\n}\n", encoding="utf-8")
    code = main(["create-script", "--example", str(example), "--mapping", str(VIBRATE / "mapping.txt"),
                 "-o", str(tmp_path / "s.aes")])
    assert code == HARD
    assert "Broken.java" in capsys.readouterr().err


def test_apply_updates_in_place_and_reports(tmp_path):
    script = _script(tmp_path, VIBRATE / "example.java", VIBRATE / "mapping.txt")
    target = tmp_path / "Alarm.java"
    shutil.copy(VIBRATE / "target.java", target)
    report = tmp_path / "report.json"
    code = main(["apply", "--script", str(script), "--target", str(target), "--report", str(report),
                 "--mapping", str(VIBRATE / "mapping.txt")])
    assert code == OK
    assert token_texts(target.read_text(encoding="utf-8")) == token_texts((VIBRATE / "expected.java").read_text())
    data = json.loads(report.read_text(encoding="utf-8"))
    assert set(data) == {"target", "outcome", "counts", "invocations", "definitions", "diagnostics", "phase_ms"}
    assert data["outcome"] == "updated"
    assert data["counts"] == {"updated": 1}


def test_apply_to_a_guarded_file_is_partial_and_leaves_it_alone(tmp_path):
    script = _script(tmp_path, VIBRATE / "example.java", VIBRATE / "mapping.txt")
    target = tmp_path / "Notifier.java"
    shutil.copy(CORPUS / "failure_modes" / "already_guarded" / "Notifier.java", target)
    before = target.read_bytes()
    report = tmp_path / "report.json"
    assert main(["apply", "--script", str(script), "--target", str(target), "--report", str(report)]) == PARTIAL
    assert target.read_bytes() == before
    assert json.loads(report.read_text())["counts"] == {"skipped-already-guarded": 1}


def test_apply_with_a_bad_script_is_a_hard_error(tmp_path):
    script = tmp_path / "bad.aes"
    script.write_text("@x@\n* nonsense\n", encoding="utf-8")
    assert main(["apply", "--script", str(script), "--target", str(VIBRATE / "target.java")]) == HARD


def test_migrate_directory(tmp_path):
    targets = tmp_path / "src"
    targets.mkdir()
    shutil.copy(CORPUS / "failure_modes" / "already_guarded" / "Notifier.java", targets)
    shutil.copy(VIBRATE / "target.java", targets / "Alarm.java")
    shutil.copy(CORPUS / "apis" / "vibrate_long" / "targets" / "Buzzer.java", targets)
    report = tmp_path / "run.json"
    code = main(["migrate", "--example", str(VIBRATE / "example.java"), "--mapping", str(VIBRATE / "mapping.txt"),
                 "--targets", str(targets), "--report", str(report)])
    assert code == PARTIAL
    totals = json.loads(report.read_text())["totals"]
    assert (totals["updated"], totals["skipped"], totals["failed"]) == (2, 1, 0)
    entry = json.loads(report.read_text())["entries"][0]
    assert entry["phase_ms"]["creation"] < 15000 and entry["phase_ms"]["application"] < 15000
    for name in ("Alarm.java", "Buzzer.java"):
        assert "VERSION_CODES.O" in (targets / name).read_text(encoding="utf-8")
        parse((targets / name).read_text(encoding="utf-8"))


def test_migrate_with_unresolvable_example_is_hard(tmp_path):
    base = CORPUS / "failure_modes" / "out_of_file"
    targets = tmp_path / "src"
    targets.mkdir()
    shutil.copy(base / "Tracker.java", targets)
    report = tmp_path / "run.json"
    code = main(["migrate", "--example", str(base / "example.java"), "--mapping", str(base / "mapping.txt"),
                 "--targets", str(targets), "--report", str(report)])
    assert code == HARD
    assert "external-to-file" in json.loads(report.read_text())["entries"][0]["reasons"]


def test_score_prints_an_improvement(capsys):
    mapping = FIXTURES / "save_layer" / "mapping.txt"
    code = main(["score", "--before", str(FIXTURES / "save_layer" / "normalized.java"),
                 "--after", str(FIXTURES / "save_layer" / "denormalized.java"), "--mapping", str(mapping)])
    assert code == OK
    out = capsys.readouterr().out
    values = dict(line.split(":", 1) for line in out.strip().splitlines())
    assert float(values["after"]) > float(values["before"])
    assert float(values["delta"]) > 0


def test_score_of_identical_files_is_zero_delta(capsys):
    same = str(FIXTURES / "save_layer" / "denormalized.java")
    assert main(["score", "--before", same, "--after", same, "--mapping",
                 str(FIXTURES / "save_layer" / "mapping.txt")]) == OK
    assert "delta:  +0.0000" in capsys.readouterr().out


def test_score_without_usage_is_hard(tmp_path):
    empty = tmp_path / "E.java"
    empty.write_text("class E { void m() { } }", encoding="utf-8")
    assert main(["score", "--before", str(empty), "--after", str(empty),
                 "--mapping", str(VIBRATE / "mapping.txt")]) == HARD


@pytest.mark.parametrize("manifest, code", [
    (CORPUS / "manifest.json", OK),
    (CORPUS / "failure_modes" / "manifest.json", OK),
])
def test_corpus_exit_codes(tmp_path, manifest, code):
    report = tmp_path / "corpus.json"
    assert main(["corpus", "--manifest", str(manifest), "--report", str(report)]) == code
    data = json.loads(report.read_text())
    assert data["totals"]["entries_failed"] == 0


def test_corpus_with_a_missing_manifest_is_hard(tmp_path):
    assert main(["corpus", "--manifest", str(tmp_path / "none.json"), "--report", str(tmp_path / "r.json")]) == HARD


def test_corpus_with_a_failing_entry_is_partial(tmp_path):
    entry = json.loads((CORPUS / "failure_modes" / "manifest.json").read_text())[0]
    del entry["expect_error"]
    for key in ("mapping", "example"):
        entry[key] = str(CORPUS / "failure_modes" / entry[key])
    entry["targets"] = [str(CORPUS / "failure_modes" / t) for t in entry["targets"]]
    (tmp_path / "m.json").write_text(json.dumps([entry]), encoding="utf-8")
    assert main(["corpus", "--manifest", str(tmp_path / "m.json"), "--report", str(tmp_path / "r.json")]) == PARTIAL


def test_console_entry_point_runs():
    result = subprocess.run([sys.executable, "-m", "apievolve", "--help"], capture_output=True, text=True)
    assert result.returncode == 0
    assert "create-script" in result.stdout
