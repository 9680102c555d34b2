import json

import pytest
from hypothesis import given, settings

from projorbit import catalog
from projorbit.rootsystem import SimpleType
from projorbit.satake import (
    Component,
    DecoratedSatakeDiagram,
    DiagramError,
    DiagramSyntaxError,
    SatakeDiagram,
    connected_components,
    direct_sum,
    from_json,
    is_compact,
    is_split,
    parse,
    parse_diagram,
    render,
    serialize,
    to_json,
    validate,
    validate_decorated,
)
from strategies import decorated, diagrams

CATALOG = catalog.sample_catalog()


def simple(t, black=(), arrows=()):
    st = SimpleType.parse(t)
    return SatakeDiagram((Component(st, frozenset(black)),), frozenset(arrows))


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_entries_validate(name):
    assert validate(CATALOG[name]) == []


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_split_and_compact_agree_with_names(name):
    d = CATALOG[name]
    assert is_split(d) == catalog.is_split_name(name)
    assert is_compact(d) == catalog.is_compact_name(name)


def test_real_form_examples():
    assert serialize(catalog.real_form_diagram("sl(3,R)")) == "A2 black=[] arrows=[]"
    assert serialize(catalog.real_form_diagram("su(3)")) == "A2 black=[1,2] arrows=[]"
    for n in range(1, 6):
        d = catalog.real_form_diagram(f"sl({n},H)")
        c = d.components[0]
        assert c.type == SimpleType("A", 2 * n - 1)
        assert sorted(c.black) == list(range(1, 2 * n, 2))
        assert not d.arrows
        assert is_compact(d) == (n == 1)


@pytest.mark.parametrize("bad", ["nope(3)", "su(0,1)", "sl(1,R)", "so(1,1)", "e9"])
def test_unknown_real_forms(bad):
    with pytest.raises(DiagramError):
        catalog.real_form_diagram(bad)


def test_exceptional_fixtures():
    want = {
        "e6(2)": "E6 black=[] arrows=[(1,6),(3,5)]",
        "e6(-26)": "E6 black=[2,3,4,5] arrows=[]",
        "e7(-25)": "E7 black=[2,3,4,5] arrows=[]",
        "f4(-20)": "F4 black=[1,2,3] arrows=[]",
        "g2(2)": "G2 black=[] arrows=[]",
    }
    for name, text in want.items():
        assert serialize(catalog.real_form_diagram(name)) == text


def test_validate_examples():
    assert validate(simple("A3")) == []
    assert validate(simple("A3", arrows=[(0, 0)])) == ["arrow not between distinct nodes (1,1)"]
    assert validate(simple("B2", black=[1, 2], arrows=[(0, 1)])) == ["arrows on black component 1 (B2)"]
    assert any("automorphism" in v for v in validate(simple("A3", arrows=[(0, 1)])))
    assert any("is black" in v for v in validate(simple("A3", black=[2], arrows=[(0, 1)])))
    assert any("more than one arrow" in v for v in validate(simple("A5", arrows=[(0, 4), (0, 3)])))


def test_complex_type_decoration_policy():
    dd = DecoratedSatakeDiagram(catalog.real_form_diagram("su(1,2)"), (1, 0))
    errors, warnings = validate_decorated(dd)
    assert errors and "(1,2)" in errors[0] and not warnings
    errors, warnings = validate_decorated(dd, allow_complex_type=True)
    assert not errors and warnings


def test_connected_components_examples():
    two = direct_sum(simple("A2"), simple("A1"))
    assert len(connected_components(two)) == 2
    assert len(connected_components(simple("D4"))) == 1
    cplx = catalog.real_form_diagram("sl(3,C)")
    assert validate(cplx) == []
    (unit,) = connected_components(cplx)
    assert unit[1] == (0, 1, 2, 3)


@settings(max_examples=300)
@given(diagrams())
def test_component_node_counts_sum(d):
    parts = connected_components(d)
    assert sum(p.n_nodes for p, _ in parts) == d.n_nodes
    assert sorted(i for _, nodes in parts for i in nodes) == list(range(d.n_nodes))


def test_parse_examples():
    dd = parse("A2 black=[] arrows=[] w=[1,1]")
    assert is_split(dd.diagram) and dd.coefficients == (1, 1)
    text = serialize(DecoratedSatakeDiagram(catalog.real_form_diagram("sl(2,H)"), (0, 1, 0)))
    assert text == "A3 black=[1,3] arrows=[] w=[0,1,0]"
    with pytest.raises(DiagramError, match="coefficient count ≠ rank"):
        parse("A2 w=[1]")


def test_defaults_and_cross_component_arrows():
    assert parse("A2 w=[1,1]") == parse("A2 black=[] arrows=[] w=[1,1]")
    dd = parse("A2 arrows=[(1,2.1),(2,2.2)] w=[1,0] + A2 w=[1,0]")
    assert dd.diagram == catalog.real_form_diagram("sl(3,C)")
    assert parse_diagram("B2 black=[2]") == catalog.real_form_diagram("so(1,4)")


@pytest.mark.parametrize("text,col", [("A2 w=[1,1", 10), ("A2 w=[1,x]", 9), ("Q2 w=[1,1]", 1), ("A2 colour=[] w=[1,1]", 4)])
def test_syntax_errors_have_position(text, col):
    with pytest.raises(DiagramSyntaxError) as exc:
        parse(text)
    assert exc.value.line == 1 and exc.value.col == col


def test_syntax_error_line_numbers():
    with pytest.raises(DiagramSyntaxError) as exc:
        parse("A2 w=[1,1]\n+ A1 w=[")
    assert exc.value.line == 2


@settings(max_examples=1000)
@given(decorated())
def test_parse_serialize_roundtrip(dd):
    text = serialize(dd)
    assert parse(text) == dd
    assert serialize(parse(text)) == text
    assert from_json(json.dumps(to_json(dd))) == dd


def test_render_marks_crossed_nodes():
    dd = parse("A1 black=[1] w=[3] + A5 black=[1,3,5] w=[0,1,0,0,1]")
    assert render(dd, {3, 5}) == "A1: *3\nA5: *0 x1 *0 x0 *1"
