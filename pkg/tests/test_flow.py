import random

from hypothesis import given, settings, strategies as st

from apievolve.flow import (
    AMBIGUOUS, CYCLE, EXTERNAL, Binding, MAX_DEPTH, Unresolved, collect_required_definitions,
    resolve_expression, resolve_name,
)
from apievolve.jsrc import find_invocations, parse, parse_expression
from apievolve.jsrc import nodes as n

from conftest import CORPUS, fixture_unit
from oracles import fold, make_chain, run_chain


def resolve_sink(src):
    unit = parse(src)
    call = find_invocations(unit, ("sink", 1))[0]
    return resolve_expression(unit, call.args[0])


def test_amplitude_resolves_structurally():
    unit = fixture_unit("vibrate", "example.java")
    call = find_invocations(unit, ("createVibration", 2))[0]
    res = resolve_expression(unit, call.args[1])
    assert res.text == "9 / 3"
    assert res.unresolved == []


def test_vibrate_argument_and_definition():
    unit = fixture_unit("vibrate", "example.java")
    call = next(c for c in find_invocations(unit, ("vibrate", 1)) if "createVibration" in unit.slice(c))
    res = resolve_expression(unit, call.args[0])
    assert res.text == "createVibration(3, 9 / 3)"
    assert [d.name for d in res.required_definitions] == ["createVibration"]
    assert res.required_definitions[0].kind == "method"


def test_literal_is_a_fixed_point():
    unit = parse("class A { void m() { v.vibrate(50); } }")
    res = resolve_expression(unit, find_invocations(unit, ("vibrate", 1))[0].args[0])
    assert res.text == "50"
    assert res.required_definitions == [] and res.unresolved == []


def test_external_qualified_name_is_kept():
    unit = parse("class A { void m() { mp.setAudioStreamType(AudioManager.STREAM_MUSIC); } }")
    res = resolve_expression(unit, find_invocations(unit, ("setAudioStreamType", 1))[0].args[0])
    assert res.text == "AudioManager.STREAM_MUSIC"
    assert res.unresolved == []


def test_field_declared_at_class_level_resolves_to_its_initializer():
    unit = fixture_unit("audio_focus", "example.java")
    call = find_invocations(unit, ("getAudioFocusRequest", 0))[0]
    binding = resolve_name(unit, "audioFocusRequestOreo", call)
    assert isinstance(binding, Binding) and binding.kind == "field"
    assert " ".join(unit.slice(binding.value).split()) == "new AudioFocusRequestOreo(this)"


def test_parameter_shadows_field():
    unit = parse("class A { int f = 1; void m(int f) { g(f); } }")
    call = find_invocations(unit, ("g", 1))[0]
    binding = resolve_name(unit, "f", call)
    assert binding.kind == "param"
    assert isinstance(binding.node, n.Param)


def test_uninitialized_field_is_external_to_file():
    unit = parse((CORPUS / "failure_modes" / "out_of_file" / "example.java").read_text(encoding="utf-8"))
    call = find_invocations(unit, ("registerGnssStatusCallback", 1))[0]
    assert resolve_name(unit, "callback", call) == Unresolved("callback", EXTERNAL)
    res = resolve_expression(unit, call.args[0])
    assert res.unresolved == [Unresolved("callback", EXTERNAL)]


def test_assignments_in_both_branches_are_ambiguous():
    unit = parse("class A { void k(boolean c) { int x; if (c) { x = 1; } else { x = 2; } g(x); } }")
    call = find_invocations(unit, ("g", 1))[0]
    assert resolve_name(unit, "x", call) == Unresolved("x", AMBIGUOUS)
    res = resolve_expression(unit, call.args[0])
    assert res.text == "x"


def test_nearest_preceding_assignment_wins():
    unit = parse("class A { void k() { int x = 1; x = 2; g(x); x = 3; } }")
    res = resolve_expression(unit, find_invocations(unit, ("g", 1))[0].args[0])
    assert res.text == "2"


def test_cycle_is_reported():
    unit = parse("class A { int p = q; int q = p; void z() { g(p); } }")
    res = resolve_expression(unit, find_invocations(unit, ("g", 1))[0].args[0])
    assert [u.reason for u in res.unresolved] == [CYCLE]


def test_depth_limit_is_bounded():
    fields = "\n".join(f"    int v{i} = v{i + 1};" for i in range(MAX_DEPTH + 10))
    src = f"class Deep {{\n{fields}\n    int v{MAX_DEPTH + 10} = 7;\n    void m() {{ g(v0); }}\n}}\n"
    unit = parse(src)
    res = resolve_expression(unit, find_invocations(unit, ("g", 1))[0].args[0])
    assert res.text != "7"
    assert res.unresolved


def test_class_definition_includes_its_method():
    unit = fixture_unit("audio_focus", "example.java")
    call = find_invocations(unit, ("getAudioFocusRequest", 0))[0]
    res = resolve_expression(unit, call)
    assert res.text == "new AudioFocusRequestOreo(this).getAudioFocusRequest()"
    assert [(d.kind, d.name) for d in res.required_definitions] == [("class", "AudioFocusRequestOreo")]
    cls = res.required_definitions[0].node
    assert "getAudioFocusRequest" in {m.name for m in cls.members if isinstance(m, n.MethodDecl)}
    assert any("this" in d for d in res.diagnostics)


def test_no_definitions_for_plain_arithmetic():
    unit = parse("class A { void m() { g(1 + 2); } }")
    assert collect_required_definitions(unit, parse_expression("1 + 2")) == []


CALL_CHAIN = """class Calls {
    void a() { b(); }
    void b() { c(); helper.d(); }
    void c() { a(); }
    void unused() { c(); }
    void m() { sink(a()); }
}
"""


def test_transitive_closure_matches_call_graph():
    unit = parse(CALL_CHAIN)
    defs = collect_required_definitions(unit, parse_expression("a()"))
    # hand-built call graph of in-file receiverless calls
    graph = {"a": ["b"], "b": ["c"], "c": ["a"], "unused": ["c"], "m": ["sink", "a"]}
    seen, todo = set(), ["a"]
    while todo:
        cur = todo.pop()
        if cur in seen or cur not in graph:
            continue
        seen.add(cur)
        todo.extend(graph[cur])
    names = [d.name for d in defs]
    assert sorted(names) == sorted(seen) == ["a", "b", "c"]
    assert len(names) == len(set(names))


def test_two_hundred_constant_chains_match_the_interpreter():
    rnd = random.Random(20240501)
    for _ in range(200):
        depth = rnd.randint(0, 5)
        k = rnd.randint(-1000, 1000)
        src, trace, target = make_chain(rnd, depth, k)
        res = resolve_sink(src)
        assert res.unresolved == [], src
        assert res.text.replace(" ", "") == str(k), src
        assert fold(res.text) == run_chain(trace, target) == k


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 5), st.integers(-50, 50), st.integers(0, 2**32))
def test_resolution_preserves_value_of_arithmetic_chains(depth, k, seed):
    src, trace, target = make_chain(random.Random(seed), depth, k, arithmetic=True)
    res = resolve_sink(src)
    assert res.unresolved == []
    assert fold(res.text) == run_chain(trace, target)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(["known", "param", "AudioManager.STREAM_MUSIC", "7", "helper()"]),
                min_size=1, max_size=4))
def test_every_leftover_name_is_reported(parts):
    src = """class Mix {
    private int known = 3;
    int helper() { return 1; }
    void m(int param) {
        sink(%s);
    }
}
""" % " + ".join(parts)
    res = resolve_sink(src)
    names = {x.name for x in res.expression.walk() if isinstance(x, n.NameExpr)}
    defs = {d.name for d in res.required_definitions}
    reported = {u.name for u in res.unresolved}
    for name in names:
        assert name in reported or name in defs or name == "AudioManager"
    assert ("param" in parts) == ("param" in reported)
