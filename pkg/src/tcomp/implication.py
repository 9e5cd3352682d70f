"""Implication digraphs over arc-vertices, correlated triangles and necessary arcs.

For a time-respecting 2-path ``a - b - c`` (``lab(ab) <= lab(bc)``) whose third
edge ``ac`` is absent or too early (``lab(ac) < lab(bc)``), orienting ``a -> b``
forces ``c -> b`` and orienting ``b -> c`` forces ``b -> a``.  These forcings
form ``Imp``; ``Aug`` adds the two arcs contributed by every correlated
monolabel triangle.

Multilabel graphs use the same construction with set comparisons reduced to
``min``/``max`` of the label sets; on simple graphs the two coincide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .digraph import reachable, strongly_connected_components
from .model import TemporalGraph


class Strategy(str, enum.Enum):
    AUTO = "auto"
    TRIANGLE = "triangle"
    EDGEPAIR = "edgepair"


class Direction(str, enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class CorrelatedTriangle:
    """``abc`` monolabel with label ``t``; ``bd <= t``; ``cd > t``; ``ad`` absent or ``< t``."""

    a: int
    b: int
    c: int
    d: int
    t: int

    def names(self, g: TemporalGraph) -> tuple[str, str, str, str]:
        return tuple(g.vertices[x] for x in (self.a, self.b, self.c, self.d))  # type: ignore[return-value]


@dataclass(frozen=True, eq=False)
class ImplicationDigraph:
    graph: TemporalGraph = field(repr=False)
    kind: str  # "IMP" or "AUG"
    succ: tuple[tuple[int, ...], ...] = field(repr=False)
    strict: bool = False
    k: int = 0
    strategy: str | None = None
    correlated: tuple[CorrelatedTriangle, ...] = ()
    imp_arcs: int = 0

    @property
    def size(self) -> int:
        return len(self.succ)

    @cached_property
    def num_arcs(self) -> int:
        return sum(len(s) for s in self.succ)

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.succ]
        for p, qs in enumerate(self.succ):
            for q in qs:
                out[q].append(p)
        return tuple(tuple(x) for x in out)

    def arcs(self) -> Iterable[tuple[int, int]]:
        for p, qs in enumerate(self.succ):
            for q in qs:
                yield p, q

    def arc_set(self) -> set[tuple[int, int]]:
        return set(self.arcs())

    def has_arc(self, p: int, q: int) -> bool:
        return q in self.succ[p]

    def is_skew_symmetric(self) -> bool:
        arcs = self.arc_set()
        return all((q ^ 1, p ^ 1) in arcs for p, q in arcs)

    def dump(self) -> str:
        """``(u,v) -> (x,y)`` per arc, sorted lexicographically."""
        g = self.graph
        lines = []
        for p, q in self.arcs():
            (u, v), (x, y) = g.arc_names(p), g.arc_names(q)
            lines.append(f"({u},{v}) -> ({x},{y})")
        lines.sort()
        return "".join(line + "\n" for line in lines)


def _freeze(succ: list[set[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(s)) for s in succ)


def _imp_arcs(g: TemporalGraph, strict: bool) -> list[set[int]]:
    lo, hi, adj = g.lo, g.hi, g.adj
    succ: list[set[int]] = [set() for _ in range(2 * g.m)]
    for b in range(g.n):
        nb = adj[b]
        for a, e_ab in nb.items():
            lo_ab = lo[e_ab]
            arc_ab = g.arc(a, b)
            na = adj[a]
            for c, e_bc in nb.items():
                if c == a:
                    continue
                hi_bc = hi[e_bc]
                if (lo_ab < hi_bc) if strict else (lo_ab <= hi_bc):
                    e_ac = na.get(c)
                    if e_ac is None or lo[e_ac] < hi_bc:
                        succ[arc_ab].add(g.arc(c, b))
                        succ[g.arc(b, c)].add(g.arc(b, a))
    return succ


def build_imp(g: TemporalGraph) -> ImplicationDigraph:
    """``Imp`` of a simple temporal graph."""
    g.require_simple()
    return ImplicationDigraph(g, "IMP", _freeze(_imp_arcs(g, strict=False)))


def build_imp_multilabel(g: TemporalGraph, strict: bool = False) -> ImplicationDigraph:
    """``Imp`` with set comparisons; ``strict`` uses ``<`` on the path condition."""
    return ImplicationDigraph(g, "IMP", _freeze(_imp_arcs(g, strict=strict)), strict=strict)


def _singleton(g: TemporalGraph, e: int) -> int | None:
    s = g.labels[e]
    return s[0] if len(s) == 1 else None


def monolabel_triangles(g: TemporalGraph) -> list[tuple[int, int, int, int]]:
    """Triangles ``(x, y, z, t)``, ``x < y < z``, whose edges all carry the singleton ``{t}``."""
    adj = g.adj
    out = []
    for x in range(g.n):
        for y, e_xy in adj[x].items():
            if y <= x:
                continue
            t = _singleton(g, e_xy)
            if t is None:
                continue
            for z, e_yz in adj[y].items():
                if z <= y:
                    continue
                e_xz = adj[x].get(z)
                if e_xz is not None and _singleton(g, e_yz) == t and _singleton(g, e_xz) == t:
                    out.append((x, y, z, t))
    out.sort()
    return out


def _is_correlated(g: TemporalGraph, a: int, b: int, c: int, d: int, t: int) -> bool:
    adj, lo = g.adj, g.lo
    e_bd = adj[b].get(d)
    if e_bd is None or lo[e_bd] > t:
        return False
    e_cd = adj[c].get(d)
    if e_cd is None or lo[e_cd] <= t:
        return False
    e_ad = adj[a].get(d)
    return e_ad is None or lo[e_ad] < t


_ROLES = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))


def _correlated_by_triangles(g: TemporalGraph, triangles) -> list[CorrelatedTriangle]:
    out = []
    for x, y, z, t in triangles:
        tri = (x, y, z)
        for ia, ib, ic in _ROLES:
            a, b, c = tri[ia], tri[ib], tri[ic]
            # d must be adjacent to b, so scanning N(b) covers every candidate
            for d in g.adj[b]:
                if d != a and d != c and _is_correlated(g, a, b, c, d, t):
                    out.append(CorrelatedTriangle(a, b, c, d, t))
    return out


def _correlated_by_edge_pairs(g: TemporalGraph) -> list[CorrelatedTriangle]:
    adj = g.adj
    out = []
    for e1, (u1, v1) in enumerate(g.edges):
        t = _singleton(g, e1)
        if t is None:
            continue
        for a, c in ((u1, v1), (v1, u1)):
            for e2, (u2, v2) in enumerate(g.edges):
                if e2 == e1 or len({u1, v1, u2, v2}) < 4:
                    continue
                for b, d in ((u2, v2), (v2, u2)):
                    e_ab, e_bc = adj[a].get(b), adj[b].get(c)
                    if e_ab is None or e_bc is None:
                        continue
                    if _singleton(g, e_ab) != t or _singleton(g, e_bc) != t:
                        continue
                    if _is_correlated(g, a, b, c, d, t):
                        out.append(CorrelatedTriangle(a, b, c, d, t))
    return out


def _sort_key(q: CorrelatedTriangle):
    return (q.a, q.b, q.c, q.d)


def _resolve_strategy(g: TemporalGraph, strategy, k: int) -> Strategy:
    strategy = Strategy(strategy)
    if strategy is Strategy.AUTO:
        return Strategy.TRIANGLE if k * g.n <= g.m * g.m else Strategy.EDGEPAIR
    return strategy


def find_correlated_triangles(g: TemporalGraph, strategy="auto") -> list[CorrelatedTriangle]:
    """Every correlated monolabel triangle ``(a, b, c, d)``, sorted by vertex ids."""
    return _find(g, strategy)[0]


def _find(g: TemporalGraph, strategy) -> tuple[list[CorrelatedTriangle], int, Strategy]:
    triangles = monolabel_triangles(g)
    chosen = _resolve_strategy(g, strategy, len(triangles))
    if chosen is Strategy.TRIANGLE:
        found = _correlated_by_triangles(g, triangles)
    else:
        found = _correlated_by_edge_pairs(g)
    found.sort(key=_sort_key)
    return found, len(triangles), chosen


def build_aug(g: TemporalGraph, strategy="auto") -> ImplicationDigraph:
    """``Aug``: ``Imp`` plus ``(b,c) -> (a,c)`` and ``(c,a) -> (c,b)`` per correlated triangle.

    Works for simple and multilabel graphs alike; in the multilabel case only
    triangles with singleton label sets qualify.
    """
    succ = _imp_arcs(g, strict=False)
    imp_arcs = sum(len(s) for s in succ)
    found, k, chosen = _find(g, strategy)
    for q in found:
        succ[g.arc(q.b, q.c)].add(g.arc(q.a, q.c))
        succ[g.arc(q.c, q.a)].add(g.arc(q.c, q.b))
    return ImplicationDigraph(
        g, "AUG", _freeze(succ), k=k, strategy=chosen.value, correlated=tuple(found),
        imp_arcs=imp_arcs,
    )


def closure(d: ImplicationDigraph, seed: Iterable[int], direction="forward") -> set[int]:
    """``seed`` plus every arc-vertex it forces (forward) or that forces it (backward)."""
    adj = d.succ if Direction(direction) is Direction.FORWARD else d.pred
    return reachable(adj, seed)


@dataclass(frozen=True)
class NessSet:
    """Arcs forced by their own reverse."""

    graph: TemporalGraph = field(repr=False)
    arcs: frozenset[int]

    def __contains__(self, p: int) -> bool:
        return p in self.arcs

    def __len__(self) -> int:
        return len(self.arcs)

    def pairs(self) -> list[tuple[str, str]]:
        return [self.graph.arc_names(p) for p in sorted(self.arcs)]

    def successors(self) -> list[list[int]]:
        """The digraph induced on the vertices of the graph."""
        out: list[list[int]] = [[] for _ in range(self.graph.n)]
        for p in sorted(self.arcs):
            u, v = self.graph.arc_ends(p)
            out[u].append(v)
        return out

    def is_consistent(self) -> bool:
        return not any(p ^ 1 in self.arcs for p in self.arcs)


def compute_ness_reference(d: ImplicationDigraph) -> NessSet:
    """One traversal per arc-vertex, straight from the definition."""
    arcs = set()
    for p in range(d.size):
        if p in reachable(d.succ, [p ^ 1]):
            arcs.add(p)
    return NessSet(d.graph, frozenset(arcs))


def compute_ness(d: ImplicationDigraph) -> NessSet:
    """Necessary arcs via the SCC condensation.

    ``p`` is necessary iff the component of ``p ^ 1`` reaches the component of
    ``p``.  Descendant sets are bitsets filled in reverse topological order;
    cost is O(arcs * components / wordsize) rather than linear.
    """
    if d.kind != "AUG":
        raise ValueError("necessary arcs are defined over the augmented digraph")
    comp, ncomp = strongly_connected_components(d.succ)
    csucc: list[set[int]] = [set() for _ in range(ncomp)]
    for p, qs in enumerate(d.succ):
        cp = comp[p]
        for q in qs:
            cq = comp[q]
            if cq != cp:
                csucc[cp].add(cq)
    desc = [0] * ncomp
    for c in range(ncomp):  # successors always have smaller numbers
        bits = 1 << c
        for w in csucc[c]:
            bits |= desc[w]
        desc[c] = bits
    arcs = frozenset(p for p in range(d.size) if desc[comp[p ^ 1]] >> comp[p] & 1)
    return NessSet(d.graph, arcs)
