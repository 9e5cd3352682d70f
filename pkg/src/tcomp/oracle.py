"""Exhaustive ground truth for small instances.

Every orientation of a graph with ``m`` edges is an ``m``-bit mask (bit ``e``
set means edge ``e`` keeps its stored direction).  Variant predicates are
rewritten here straight from their definitions as clauses over arc
literals, and evaluated over whole blocks of masks at once with numpy.  The
augmented implication digraph needed for ATTO is rebuilt by brute force over
vertex triples and quadruples, independently of :mod:`tcomp.implication`.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import patterns
from .model import Orientation, TemporalGraph, VertexOrder
from .verify import Variant, is_valid

DEFAULT_LIMIT_M = 20
DEFAULT_LIMIT_N = 8
BLOCK = 1 << 14


class OracleLimitError(ValueError):
    pass


@dataclass
class OracleResult:
    variant: str
    count: int
    total: int
    orientations: list | None = None
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    def to_dict(self, graph: TemporalGraph | None = None) -> dict:
        out = {"variant": self.variant, "count": self.count, "total": self.total,
               "elapsed_s": round(self.elapsed, 6)}
        if self.orientations is not None:
            out["items"] = [_item(x, graph) for x in self.orientations]
        return out


def _item(x, graph):
    if isinstance(x, Orientation):
        return [list(a) for a in x.pairs()]
    if isinstance(x, VertexOrder):
        return x.names(graph)
    return x


# ---------------------------------------------------------------------------
# clauses: a clause (p, q, r) is violated when arcs p and q are present and r
# is absent; TRUE / FALSE pseudo-literals fill unused slots


def _true(m: int) -> int:
    return 2 * m


def _false(m: int) -> int:
    return 2 * m + 1


def _arc(g: TemporalGraph, u: int, v: int) -> int:
    e = g.adj[u][v]
    return 2 * e if g.edges[e][0] == u else 2 * e + 1


def _path_clauses(g: TemporalGraph, strict_hyp: bool, strong: bool, directed: bool, sets: bool):
    """Clauses for '(a,b),(b,c) in O and hyp(ab, bc) => (a,c) in O with good label'."""
    out = []
    F = _false(g.m)
    for b in range(g.n):
        for a in g.adj[b]:
            for c in g.adj[b]:
                if a == c:
                    continue
                ab, bc = g.labels[g.adj[a][b]], g.labels[g.adj[b][c]]
                if sets:
                    # some x in ab, y in bc with x <= y (x < y)
                    hyp = any((x < y) if strict_hyp else (x <= y) for x in ab for y in bc)
                else:
                    hyp = (ab[0] < bc[0]) if strict_hyp else (ab[0] <= bc[0])
                if not hyp:
                    continue
                path = (_arc(g, a, b), _arc(g, b, c))
                e_ac = g.adj[a].get(c)
                if e_ac is None:
                    out.append(path + (F,))
                    continue
                ac = g.labels[e_ac]
                if sets:
                    # every element of ac >= every element of bc
                    good = all(x >= y for x in ac for y in bc)
                else:
                    good = ac[0] > bc[0] if strong else ac[0] >= bc[0]
                if not good:
                    out.append(path + (F,))
                elif directed:
                    out.append(path + (_arc(g, a, c),))
    return out


def brute_force_aug(g: TemporalGraph) -> set[tuple[int, int]]:
    """Arcs of the augmented implication digraph, by enumeration of triples and quadruples."""
    arcs = set()
    lab = g.labels
    edge = g.adj

    def le(s1, s2):  # some x in s1, y in s2 with x <= y
        return any(x <= y for x in s1 for y in s2)

    def lt(s1, s2):
        return any(x < y for x in s1 for y in s2)

    for a, b, c in itertools.permutations(range(g.n), 3):
        if b not in edge[a] or c not in edge[b]:
            continue
        l_ab, l_bc = lab[edge[a][b]], lab[edge[b][c]]
        if le(l_ab, l_bc) and (c not in edge[a] or lt(lab[edge[a][c]], l_bc)):
            arcs.add((_arc(g, a, b), _arc(g, c, b)))
            arcs.add((_arc(g, b, c), _arc(g, b, a)))
    for a, b, c, d in itertools.permutations(range(g.n), 4):
        if not (b in edge[a] and c in edge[b] and a in edge[c]):
            continue
        tri = {lab[edge[a][b]], lab[edge[b][c]], lab[edge[c][a]]}
        if len(tri) != 1:
            continue
        (t_set,) = tri
        if len(t_set) != 1:
            continue
        if d not in edge[b] or not le(lab[edge[b][d]], t_set):
            continue
        if d not in edge[c] or le(lab[edge[c][d]], t_set):
            continue
        if d in edge[a] and not lt(lab[edge[a][d]], t_set):
            continue
        arcs.add((_arc(g, b, c), _arc(g, a, c)))
        arcs.add((_arc(g, c, a), _arc(g, c, b)))
    return arcs


def clauses(g: TemporalGraph, variant) -> list[tuple[int, int, int]]:
    variant = Variant(variant)
    simple_only = variant not in (Variant.ATTO, Variant.MTTO, Variant.STRICT_MTTO)
    if simple_only:
        g.require_simple()
    if variant is Variant.ATTO:
        T = _true(g.m)
        return sorted((p, T, q) for p, q in brute_force_aug(g))
    table = {
        Variant.TTO: (False, False, True, False),
        Variant.QTTO: (False, False, False, False),
        Variant.STRICT: (True, False, True, False),
        Variant.STRONG: (False, True, True, False),
        Variant.STRONG_STRICT: (True, True, True, False),
        Variant.MTTO: (False, False, True, True),
        Variant.STRICT_MTTO: (True, False, True, True),
    }
    return _path_clauses(g, *table[variant])


# ---------------------------------------------------------------------------
# vectorized evaluation


def arc_matrix(m: int, masks: np.ndarray) -> np.ndarray:
    """Boolean matrix ``(len(masks), 2m + 2)``: arc-vertex presence plus TRUE/FALSE columns."""
    bits = ((masks[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(bool)
    out = np.empty((len(masks), 2 * m + 2), dtype=bool)
    out[:, 0 : 2 * m : 2] = bits
    out[:, 1 : 2 * m : 2] = ~bits
    out[:, 2 * m] = True
    out[:, 2 * m + 1] = False
    return out


def _block_valid(m: int, cl: np.ndarray, start: int, stop: int) -> np.ndarray:
    masks = np.arange(start, stop, dtype=np.int64)
    if len(cl) == 0:
        return np.ones(len(masks), dtype=bool)
    A = arc_matrix(m, masks)
    bad = np.zeros(len(masks), dtype=bool)
    # chunk clauses to bound memory
    for i in range(0, len(cl), 256):
        c = cl[i : i + 256]
        bad |= (A[:, c[:, 0]] & A[:, c[:, 1]] & ~A[:, c[:, 2]]).any(axis=1)
    return ~bad


def _check_m(g: TemporalGraph, limit_m: int) -> None:
    if g.m > limit_m:
        raise OracleLimitError(f"m = {g.m} exceeds oracle limit {limit_m}")


def valid_mask(g: TemporalGraph, variant, limit_m: int = DEFAULT_LIMIT_M, threads: int = 1) -> np.ndarray:
    """Boolean array indexed by orientation mask: True where the variant holds."""
    _check_m(g, limit_m)
    cl = np.array(clauses(g, variant), dtype=np.int64).reshape(-1, 3)
    total = 1 << g.m
    blocks = [(s, min(s + BLOCK, total)) for s in range(0, total, BLOCK)]
    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(lambda b: _block_valid(g.m, cl, *b), blocks))
    else:
        parts = [_block_valid(g.m, cl, *b) for b in blocks]
    return np.concatenate(parts)


def enumerate_orientations(
    g: TemporalGraph,
    variant="tto",
    limit_m: int = DEFAULT_LIMIT_M,
    materialize: bool = False,
    threads: int = 1,
    engine: str = "vector",
) -> OracleResult:
    """All total orientations of ``g`` satisfying ``variant``.

    ``engine="scalar"`` calls :func:`tcomp.verify.verify` on every orientation
    instead of the clause evaluator; both must agree.
    """
    variant = Variant(variant)
    _check_m(g, limit_m)
    t0 = time.perf_counter()
    if engine == "scalar":
        hits = [mk for mk in range(1 << g.m) if is_valid(g, Orientation.from_mask(g, mk), variant)]
    elif engine == "vector":
        hits = np.flatnonzero(valid_mask(g, variant, limit_m, threads)).tolist()
    else:
        raise ValueError(f"unknown engine {engine!r}")
    items = [Orientation.from_mask(g, mk) for mk in hits] if materialize else None
    return OracleResult(variant.value, len(hits), 1 << g.m, items, time.perf_counter() - t0)


def exists(g: TemporalGraph, variant="tto", limit_m: int = DEFAULT_LIMIT_M) -> bool:
    """Whether some orientation satisfies ``variant``; stops at the first valid block."""
    _check_m(g, limit_m)
    cl = np.array(clauses(g, variant), dtype=np.int64).reshape(-1, 3)
    total = 1 << g.m
    return any(_block_valid(g.m, cl, s, min(s + BLOCK, total)).any() for s in range(0, total, BLOCK))


# ---------------------------------------------------------------------------
# orders


def _avoids(pattern_set: str):
    if pattern_set == "tto":
        return patterns.avoids_tto_pattern
    if pattern_set == "strict":
        return patterns.avoids_strict_patterns
    raise ValueError(f"unknown pattern set {pattern_set!r}")


def enumerate_avoiding_orders(
    g: TemporalGraph, pattern_set: str = "tto", limit_n: int = DEFAULT_LIMIT_N, materialize: bool = False
) -> OracleResult:
    """All ``n!`` vertex orders that avoid the pattern set."""
    if g.n > limit_n:
        raise OracleLimitError(f"n = {g.n} exceeds oracle limit {limit_n}")
    check = _avoids(pattern_set)
    t0 = time.perf_counter()
    hits = []
    count = 0
    total = 0
    for perm in itertools.permutations(range(g.n)):
        total += 1
        order = VertexOrder.from_sequence(g.n, perm)
        if check(g, order) is None:
            count += 1
            if materialize:
                hits.append(order)
    return OracleResult(pattern_set, count, total, hits if materialize else None, time.perf_counter() - t0)


def exists_avoiding_order(g: TemporalGraph, pattern_set: str = "tto", limit_n: int = DEFAULT_LIMIT_N) -> bool:
    if g.n > limit_n:
        raise OracleLimitError(f"n = {g.n} exceeds oracle limit {limit_n}")
    check = _avoids(pattern_set)
    return any(
        check(g, VertexOrder.from_sequence(g.n, perm)) is None for perm in itertools.permutations(range(g.n))
    )


# ---------------------------------------------------------------------------
# batch structure checks over many orientations of one small graph


def adjacency_batch(g: TemporalGraph, masks: np.ndarray) -> np.ndarray:
    """``(len(masks), n, n)`` boolean adjacency of each orientation."""
    A = np.zeros((len(masks), g.n, g.n), dtype=bool)
    for e, (u, v) in enumerate(g.edges):
        fwd = (masks >> e) & 1 == 1
        A[:, u, v] = fwd
        A[:, v, u] = ~fwd
    return A


def reachability_batch(adj: np.ndarray) -> np.ndarray:
    """Transitive closure (paths of length >= 1) of each adjacency matrix."""
    R = adj.copy()
    n = adj.shape[1]
    steps = 1
    while steps < n:
        R = R | (np.matmul(R.astype(np.uint8), R.astype(np.uint8)) > 0)
        steps *= 2
    return R


def has_cycle_batch(g: TemporalGraph, masks: np.ndarray) -> np.ndarray:
    R = reachability_batch(adjacency_batch(g, masks))
    return np.diagonal(R, axis1=1, axis2=2).any(axis=1)
