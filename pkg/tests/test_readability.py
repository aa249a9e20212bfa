import random
import re

import pytest
from hypothesis import given, settings, strategies as st

from apievolve.jsrc import parse
from apievolve.patch import parse_mapping
from apievolve.readability import (
    NoApiUsage, ReadabilityScore, readability_value, score_readability, score_unit, slice_api_usage,
    slice_api_usages,
)

from conftest import fixture_mapping, fixture_text, fixture_unit

HOUR = parse_mapping(
    "deprecated: android.widget.TimePicker#getCurrentHour():Integer\n"
    "replacement: android.widget.TimePicker#getHour():int\n"
    "guard-symbol: android.os.Build.VERSION_CODES.M\n"
    "guard-level: 23\n"
)


def test_set_current_hour_slice_matches_the_reference_slice():
    piece = slice_api_usage(fixture_unit("set_hour_slice", "updated.java"), fixture_mapping("set_hour_slice"))
    assert piece.wrapped_text == fixture_text("set_hour_slice", "expected.java")
    assert piece.method == "restore"
    parse(piece.wrapped_text)


def test_bare_invocation_gives_one_statement():
    piece = slice_api_usage(parse("class A { void m(TimePicker tp) { tp.getCurrentHour(); } }"), HOUR)
    assert piece.statements == ("tp.getCurrentHour();",)


def test_no_usage_raises():
    with pytest.raises(NoApiUsage):
        slice_api_usage(parse("class A { void m() { f(); } }"), HOUR)


UNRELATED = [
    "int spare{i} = {i} * 2;",
    "log(\"step {i}\");",
    "String tag{i} = \"t{i}\";",
    "counter{i}.reset();",
    "double ratio{i} = 0.{i};",
]


def _reads_by_token_scan(stmt: str) -> set[str]:
    """Identifiers read by a statement: not after a dot and not called."""
    return {
        m.group(1) for m in re.finditer(r"(?<![.\w])([a-z]\w*)\b(?!\s*\()", stmt)
    } - {"int", "new", "return"}


def test_slice_keeps_only_the_invocation_and_its_three_locals():
    rnd = random.Random(11)
    decls = ["TimePicker tp = views.picker;", "int offset = 2;", "int base = 10;"]
    use = "total = base + offset * tp.getCurrentHour();"
    noise = [rnd.choice(UNRELATED).format(i=i) for i in range(10)]
    body = noise[:4] + decls[:1] + noise[4:7] + decls[1:] + noise[7:] + [use]
    src = "class Big {\n    int total;\n    void m(Views views) {\n" + "".join(f"        {s}\n" for s in body) + "    }\n}\n"
    piece = slice_api_usage(parse(src), HOUR)
    reads = _reads_by_token_scan(use)
    oracle = [s for s in body if any(re.match(rf"\w+ {name} =", s) for name in reads)] + [use]
    assert len(oracle) == 4
    assert list(piece.statements) == oracle


def test_one_slice_per_method_and_mean_score():
    src = ("class Two {\n    void a(TimePicker p) { int h = p.getCurrentHour(); }\n"
           "    void b(TimePicker q) { int x = 1; int y = x; log(y, q.getHour()); }\n}\n")
    unit = parse(src)
    slices = slice_api_usages(unit, HOUR)
    assert [s.method for s in slices] == ["a", "b"]
    mean, notes = score_unit(unit, HOUR)
    values = [score_readability(s.wrapped_text).value for s in slices]
    assert mean == pytest.approx(sum(values) / 2)
    assert notes


def test_empty_body_scores_one():
    score = score_readability("class MainActivity {\n    public static void main() {\n    }\n}\n")
    assert score.features == (0, 0, 0.0)
    assert score.value == 1.0


def test_features_of_a_small_body():
    score = score_readability("class C { void m() { int a = 1;\n foo(a); } }")
    # int a = 1 ;  foo ( a ) ;  -> 10 tokens on 2 logical lines, one local
    assert score.features == (2, 1, 5.0)
    assert score.value == pytest.approx(1 / (1 + 0.05 * 2 + 0.08 * 1 + 0.02 * 5))


def test_if_else_counts_the_else_header():
    score = score_readability("class C { void m() { if (x) { a(); } else { b(); } } }")
    assert score.lines == 4


def test_layout_does_not_change_the_score():
    a = score_readability("class C { void m() { int a = 1; foo(a); } }")
    b = score_readability("class C {\n  void m() {\n    int a =\n        1;\n    foo(\n a);\n  }\n}\n")
    assert a == b


def test_denormalized_save_layer_reads_better():
    before = score_readability(fixture_text("save_layer", "normalized.java"))
    after = score_readability(fixture_text("save_layer", "denormalized.java"))
    assert after.value > before.value
    assert after.lines < before.lines
    assert after.identifiers < before.identifiers


def test_slice_scores_agree_with_whole_method_scores_for_wrapped_text():
    piece = slice_api_usage(fixture_unit("set_hour_slice", "updated.java"), fixture_mapping("set_hour_slice"))
    assert score_readability(piece.wrapped_text) == score_readability(fixture_text("set_hour_slice", "expected.java"))


# -- monotonicity ---------------------------------------------------------------

@settings(max_examples=200, deadline=None)
@given(st.integers(0, 60), st.integers(0, 60), st.floats(0, 60), st.sampled_from([0, 1, 2]),
       st.floats(0.001, 10))
def test_value_strictly_decreases_in_each_feature(lines, idents, tpl, which, step):
    base = [lines, idents, tpl]
    bumped = list(base)
    bumped[which] += step
    assert readability_value(*bumped) < readability_value(*base)
    assert 0 < readability_value(*bumped) <= 1


_STMTS = [
    "int {v} = {w} + 1;",
    "{v} = {w};",
    "tp.setHour({w});",
    "log({w});",
    "if ({w} > 2) {{ {v} = 0; }} else {{ {v} = 1; }}",
    "String {v}s = \"x\";",
]


def random_fixture(rnd: random.Random) -> str:
    """A method body of short statements (at most 12 tokens per logical line)."""
    names = ["a", "b", "hour", "count", "mode"]
    stmts = [rnd.choice(_STMTS).format(v=rnd.choice(names), w=rnd.choice(names)) for _ in range(rnd.randint(1, 8))]
    return "class MainActivity {\n    public static void main() {\n" + "".join(f"        {s}\n" for s in stmts) + "    }\n}\n"


def with_noop_declaration(text: str, k: int) -> str:
    head, tail = text.rsplit("    }\n}\n", 1)
    return head + f"        int unused{k} = 0;\n    }}\n}}\n" + tail


def test_noop_declaration_lowers_the_score_on_fifty_fixtures():
    rnd = random.Random(5)
    for i in range(50):
        text = random_fixture(rnd)
        before = score_readability(text)
        after = score_readability(with_noop_declaration(text, i))
        assert after.lines == before.lines + 1
        assert after.identifiers == before.identifiers + 1
        assert after.value < before.value, text


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_noop_declaration_property(seed):
    text = random_fixture(random.Random(seed))
    assert score_readability(with_noop_declaration(text, 0)).value < score_readability(text).value


def test_score_type_is_plain_data():
    s = ReadabilityScore(3, 2, 4.0)
    assert s.value == readability_value(3, 2, 4.0)
