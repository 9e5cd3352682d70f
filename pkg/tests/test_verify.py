import itertools

import pytest

from tcomp.instances import get
from tcomp.model import Orientation, VertexOrder, parse_graph, temporalize
from tcomp.patterns import orient_by_order
from tcomp.verify import Kind, Variant, is_tto_equiv, is_valid, monolabel_directed_triangles, verify

TRIANGLE = "a b 2\nb c 2\na c 2\n"


def cyclic_triangle():
    g = parse_graph(TRIANGLE)
    return g, Orientation.from_pairs(g, [("a", "b"), ("b", "c"), ("c", "a")])


def test_drawn_c5_is_tto_and_strong():
    inst = get("fig1b")
    g, o = inst.graph(), inst.drawn_orientation()
    assert verify(g, o, "tto") == []
    assert verify(g, o, "strong") == []


def test_cyclic_monolabel_triangle():
    g, o = cyclic_triangle()
    found = verify(g, o, "tto")
    assert {v.kind for v in found} == {Kind.MONOLABEL_DIRECTED_TRIANGLE}
    assert len(found) == 3
    assert verify(g, o, "qtto") == []
    assert not is_tto_equiv(g, o)
    assert monolabel_directed_triangles(g, o) == [(0, 1, 2)]


def test_qtto_figure_drawn_orientation():
    inst = get("fig_qtto")
    g, o = inst.graph(), inst.drawn_orientation()
    found = verify(g, o, "tto")
    assert found and all(v.kind is Kind.MONOLABEL_DIRECTED_TRIANGLE for v in found)
    assert {frozenset(v.vertices) for v in found} == {frozenset("abc")}
    assert verify(g, o, "qtto") == []
    assert not is_tto_equiv(g, o)


def test_violation_kinds():
    g = parse_graph("a b 1\nb c 2\n")
    (v,) = verify(g, Orientation.from_pairs(g, [("a", "b"), ("b", "c")]))
    assert v.kind is Kind.MISSING_EDGE and v.vertices == ("a", "b", "c")
    assert v.labels == ((1,), (2,), None)
    assert v.to_dict() == {"kind": "MISSING_EDGE", "vertices": ["a", "b", "c"], "labels": [[1], [2], None]}

    g = parse_graph("a b 1\nb c 2\na c 1\n")
    (v,) = verify(g, Orientation.from_pairs(g, [("a", "b"), ("b", "c"), ("a", "c")]))
    assert v.kind is Kind.BAD_LABEL

    g = parse_graph("a b 1\nb c 2\na c 3\n")
    found = verify(g, Orientation.from_pairs(g, [("a", "b"), ("b", "c"), ("c", "a")]))
    assert [(v.kind, v.vertices) for v in found] == [
        (Kind.BAD_DIRECTION, ("a", "b", "c")),
        (Kind.BAD_LABEL, ("b", "c", "a")),
    ]

    o = Orientation.from_pairs(g, [("a", "b"), ("b", "a"), ("b", "c"), ("a", "c")])
    assert verify(g, o)[0].kind is Kind.BIDIRECTED


def test_partial_orientation_rejected():
    g = parse_graph("a b 1\nb c 2\n")
    with pytest.raises(ValueError):
        verify(g, Orientation.from_pairs(g, [("a", "b")]))


def test_limit_caps_output():
    g = parse_graph("".join(f"h x{i} 1\n" for i in range(6)) + "h y 2\n")
    o = Orientation.from_pairs(g, [(f"x{i}", "h") for i in range(6)] + [("h", "y")])
    assert len(verify(g, o)) == 6
    assert len(verify(g, o, limit=2)) == 2


def test_variant_hypotheses_and_conclusions():
    # 2-path with equal labels: a TTO path, not a strict one
    g = parse_graph("a b 2\nb c 2\na c 2\n")
    o = Orientation.from_pairs(g, [("a", "b"), ("b", "c"), ("a", "c")])
    assert is_valid(g, o, "tto") and is_valid(g, o, "strict")
    assert not is_valid(g, o, "strong") and is_valid(g, o, "strong-strict")
    g = parse_graph("a b 1\nb c 2\na c 2\n")
    o = Orientation.from_pairs(g, [("a", "b"), ("b", "c"), ("a", "c")])
    assert is_valid(g, o, "strict") and not is_valid(g, o, "strong-strict")


def test_multilabel_variants():
    g = parse_graph("a b 1,9\nb c 5\n")
    into_b = Orientation.from_pairs(g, [("a", "b"), ("c", "b")])
    path = Orientation.from_pairs(g, [("a", "b"), ("b", "c")])
    assert is_valid(g, into_b, "mtto")
    assert not is_valid(g, path, "mtto")
    with pytest.raises(ValueError):
        verify(g, path, "tto")
    g = parse_graph("a b 5,6\nb c 5\na c 5\n")
    o = Orientation.from_pairs(g, [("a", "b"), ("b", "c"), ("a", "c")])
    assert is_valid(g, o, "mtto") and is_valid(g, o, "strict-mtto")
    g = parse_graph("a b 1,6\nb c 5\na c 4,9\n")
    o = Orientation.from_pairs(g, [("a", "b"), ("b", "c"), ("a", "c")])
    assert not is_valid(g, o, "mtto")


def test_atto_on_qtto_figure():
    g = get("fig_qtto").graph()
    o = get("fig_qtto").drawn_orientation()
    found = verify(g, o, "atto")
    assert found and all(v.kind is Kind.NOT_FORCING_CLOSED for v in found)


@pytest.mark.parametrize("variant", ["tto", "strict", "strong", "strong-strict"])
def test_temporalized_left_to_right_satisfies_every_variant(variant):
    g = parse_graph("v1 v2 0\nv1 v3 0\nv2 v3 0\nv3 v4 0\nv2 v4 0\n")
    for perm in itertools.permutations(range(g.n)):
        order = VertexOrder.from_sequence(g.n, perm)
        h = temporalize(g, order)
        assert is_valid(h, orient_by_order(h, order), variant)


def test_variant_names():
    assert [v.value for v in Variant] == [
        "tto", "qtto", "atto", "strict", "strong", "strong-strict", "mtto", "strict-mtto",
    ]
