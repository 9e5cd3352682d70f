"""Graph families shared by the test modules."""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from tcomp.model import TemporalGraph


def names(n):
    return [f"v{i}" for i in range(n)]


def all_small_graphs(max_n=4, labels=(1, 2, 3)):
    """Every labelled graph on n <= max_n vertices (no isomorphism reduction)."""
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for choice in itertools.product((None,) + tuple(labels), repeat=len(pairs)):
            edges = [(f"v{u}", f"v{v}", [t]) for (u, v), t in zip(pairs, choice) if t is not None]
            yield TemporalGraph.from_edges(edges, vertices=names(n))


def random_graph(rng: random.Random, n, max_m=None, max_label=4, density=None):
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    if density is not None:
        pairs = [p for p in pairs if rng.random() < density]
    m = len(pairs) if max_m is None else rng.randint(0, min(max_m, len(pairs)))
    edges = [(f"v{u}", f"v{v}", [rng.randint(1, max_label)]) for u, v in pairs[:m]]
    return TemporalGraph.from_edges(edges, vertices=names(n))


def random_multilabel(rng: random.Random, n, max_m=12, max_label=5, max_set=3):
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    m = rng.randint(0, min(max_m, len(pairs)))
    edges = [
        (f"v{u}", f"v{v}", rng.sample(range(1, max_label + 1), rng.randint(1, max_set)))
        for u, v in pairs[:m]
    ]
    return TemporalGraph.from_edges(edges, vertices=names(n))


def random_proper(rng: random.Random, n, max_m=12, max_label=8, max_set=2):
    """Multilabel graph whose incident edges carry disjoint label sets."""
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    used = [set() for _ in range(n)]
    edges = []
    for u, v in pairs:
        if len(edges) >= max_m:
            break
        free = [t for t in range(1, max_label + 1) if t not in used[u] and t not in used[v]]
        if not free or rng.random() < 0.25:
            continue
        labs = rng.sample(free, min(len(free), rng.randint(1, max_set)))
        used[u].update(labs)
        used[v].update(labs)
        edges.append((f"v{u}", f"v{v}", labs))
    return TemporalGraph.from_edges(edges, vertices=names(n))


@st.composite
def temporal_graphs(draw, min_n=1, max_n=6, max_label=4, multilabel=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    label = st.integers(1, max_label)
    if multilabel:
        label = st.lists(label, min_size=1, max_size=3)
    edges = []
    for u, v in chosen:
        t = draw(label)
        edges.append((f"v{u}", f"v{v}", t if multilabel else [t]))
    return TemporalGraph.from_edges(edges, vertices=names(n))


@st.composite
def graph_and_order(draw, **kw):
    g = draw(temporal_graphs(**kw))
    perm = draw(st.permutations(range(g.n)))
    from tcomp.model import VertexOrder

    return g, VertexOrder.from_sequence(g.n, perm)
