import itertools
import random

import numpy as np
import pytest

from gen import all_small_graphs, random_graph, random_multilabel
from tcomp import oracle
from tcomp.implication import build_aug
from tcomp.instances import get
from tcomp.model import Orientation, TemporalGraph, parse_graph
from tcomp.verify import Variant

TRIANGLE = parse_graph("a b 3\nb c 3\na c 3\n")


def test_enumerate_orientation_examples():
    assert oracle.enumerate_orientations(parse_graph("a b 1\n"), "tto").count == 2
    assert oracle.enumerate_orientations(TRIANGLE, "tto").count == 6
    assert oracle.enumerate_orientations(TRIANGLE, "qtto").count == 8
    g = get("fig_qtto").graph()
    assert oracle.enumerate_orientations(g, "tto").count == 0
    res = oracle.enumerate_orientations(g, "qtto", materialize=True)
    assert res.count >= 1 and get("fig_qtto").drawn_orientation() in res.orientations


def test_result_invariants_and_json():
    res = oracle.enumerate_orientations(TRIANGLE, "tto", materialize=True)
    assert res.count == len(res.orientations) and res.total == 8
    d = res.to_dict(TRIANGLE)
    assert set(d) == {"variant", "count", "total", "elapsed_s", "items"}
    assert d["variant"] == "tto" and len(d["items"]) == 6
    assert all(len(pair) == 2 for item in d["items"] for pair in item)
    assert "items" not in oracle.enumerate_orientations(TRIANGLE).to_dict()


def test_triangle_cyclic_orientations_are_the_rejects():
    res = oracle.enumerate_orientations(TRIANGLE, "tto", materialize=True)
    cyc = [Orientation.from_pairs(TRIANGLE, p) for p in
           ([("a", "b"), ("b", "c"), ("c", "a")], [("b", "a"), ("c", "b"), ("a", "c")])]
    assert not set(cyc) & set(res.orientations)


def test_avoiding_order_examples():
    assert oracle.enumerate_avoiding_orders(parse_graph("a b 1\n"), "tto").count == 2
    assert oracle.enumerate_avoiding_orders(get("fig1a").graph(), "tto").count == 0
    res = oracle.enumerate_avoiding_orders(get("fig1b").graph(), "tto", materialize=True)
    assert res.count >= 1 and res.total == 120
    assert res.to_dict(get("fig1b").graph())["items"][0] in (o.names(get("fig1b").graph()) for o in res.orientations)
    with pytest.raises(ValueError):
        oracle.enumerate_avoiding_orders(TRIANGLE, "bogus")


def test_exists_examples():
    assert oracle.exists(get("fig1b").graph(), "strict")
    assert not oracle.exists(get("fig1a").graph(), "tto")
    edgeless = TemporalGraph.from_edges([], vertices="xyz")
    for variant in Variant:
        assert oracle.exists(edgeless, variant)
    assert oracle.exists_avoiding_order(edgeless, "strict")


def test_limits():
    g = TemporalGraph.from_edges([(f"u{i}", f"w{i}", 1) for i in range(5)])
    with pytest.raises(oracle.OracleLimitError):
        oracle.enumerate_orientations(g, "tto", limit_m=4)
    with pytest.raises(oracle.OracleLimitError):
        oracle.exists(g, "tto", limit_m=4)
    with pytest.raises(oracle.OracleLimitError):
        oracle.enumerate_avoiding_orders(g, "tto", limit_n=9)
    with pytest.raises(oracle.OracleLimitError):
        oracle.exists_avoiding_order(g, "tto", limit_n=9)
    assert oracle.enumerate_orientations(g, "tto", limit_m=5).count == 32


@pytest.mark.parametrize("variant", [v.value for v in Variant if v.value not in ("mtto", "strict-mtto")])
def test_vector_engine_matches_verifier(variant):
    rng = random.Random(hash(variant) % 1000)
    graphs = list(itertools.islice(all_small_graphs(3), 0, None, 7))
    graphs += [random_graph(rng, rng.randint(3, 5), max_m=7, max_label=3) for _ in range(25)]
    for g in graphs:
        a = oracle.enumerate_orientations(g, variant, materialize=True)
        b = oracle.enumerate_orientations(g, variant, materialize=True, engine="scalar")
        assert a.orientations == b.orientations


@pytest.mark.parametrize("variant", ["mtto", "strict-mtto"])
def test_vector_engine_matches_verifier_multilabel(variant):
    rng = random.Random(7)
    for _ in range(40):
        g = random_multilabel(rng, rng.randint(3, 5), max_m=7, max_label=4, max_set=3)
        a = oracle.valid_mask(g, variant)
        b = oracle.enumerate_orientations(g, variant, engine="scalar", materialize=True)
        assert np.flatnonzero(a).tolist() == [o.mask() for o in b.orientations]


def test_threads_give_identical_results():
    g = random_graph(random.Random(4), 8, max_label=3, density=0.6)
    assert 14 < g.m <= 20
    assert np.array_equal(oracle.valid_mask(g, "tto"), oracle.valid_mask(g, "tto", threads=4))


def test_monolabel_tto_set_closed_under_reversal():
    rng = random.Random(13)
    for _ in range(40):
        g = random_graph(rng, rng.randint(3, 6), max_label=1)
        ok = oracle.valid_mask(g, "tto")
        full = (1 << g.m) - 1
        idx = np.arange(1 << g.m)
        assert np.array_equal(ok, ok[full ^ idx])


def test_reversal_can_break_tto():
    inst = get("fig1b")
    g, o = inst.graph(), inst.drawn_orientation()
    assert oracle.valid_mask(g, "tto")[o.mask()]
    assert not oracle.valid_mask(g, "tto")[o.reverse().mask()]


def test_brute_force_aug_matches_builder():
    rng = random.Random(17)
    graphs = [get(n).graph() for n in ("fig_qtto", "fig_quad", "figA", "fig1c")]
    graphs += [random_graph(rng, rng.randint(3, 7), max_label=3) for _ in range(150)]
    for g in graphs:
        assert oracle.brute_force_aug(g) == build_aug(g).arc_set()


def test_cycle_batch():
    masks = np.arange(8)
    cyc = oracle.has_cycle_batch(TRIANGLE, masks)
    assert cyc.sum() == 2
    assert not oracle.has_cycle_batch(parse_graph("a b 1\nb c 1\n"), np.arange(4)).any()


def test_pattern_theorems_at_oracle_scale():
    rng = random.Random(23)
    graphs = [random_graph(rng, rng.randint(3, 5), max_label=3) for _ in range(80)]
    for g in graphs:
        assert oracle.exists(g, "tto") == oracle.exists_avoiding_order(g, "tto")
        assert oracle.exists(g, "strict") == oracle.exists_avoiding_order(g, "strict")
