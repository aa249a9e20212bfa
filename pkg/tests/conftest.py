import sys
from pathlib import Path

import pytest

from apievolve.jsrc import parse
from apievolve.patch import load_mapping

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = Path(__file__).resolve().parent / "fixtures"
CORPUS = ROOT / "corpus"


def fixture_text(*parts) -> str:
    return FIXTURES.joinpath(*parts).read_text(encoding="utf-8")


def fixture_unit(*parts):
    return parse(fixture_text(*parts), str(FIXTURES.joinpath(*parts)))


def fixture_mapping(name):
    return load_mapping(FIXTURES / name / "mapping.txt")


@pytest.fixture
def minute_mapping():
    return fixture_mapping("minute")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in module.RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
