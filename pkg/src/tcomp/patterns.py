"""Forbidden ordered patterns for TTO and Strict TTO, and order/orientation converters.

Patterns are matched against a vertex order ``sigma``.  A solid pattern edge
must be present with the bound label; a dashed edge ``< t`` is satisfied by an
absent edge or one whose label is below ``t``.  Everything is evaluated on
``sigma`` ranks, so ``x < y`` below means ``x`` comes first.

Strict patterns, in scan order (``L`` is the label of a pair):

* S1: ``a<b<c<d``; ``L(ab)=t1``, ``L(bd)=t2``, ``L(bc)=t3``, ``ad < t2``;
  ``t1 < t2 != t3``.
* S2: as S1 with ``L(cd)=t3`` in place of ``L(bc)``.
* S3: ``a<b<c<d``; ``L(ab)=t1``, ``L(bc)=t2``, ``L(bd)=t3``, ``ca < t2``,
  ``cd < t3``; ``t1 < t2 < t3``.
* S4: ``a<b<c`` and ``d<b``; ``L(bc)=t3``, ``L(ca)=t2``, ``L(db)=t1``,
  ``ab < t3``, ``dc < t3``; ``t1 < t3``, ``t2 < t3``.  ``d`` may be ``a``.
* S5: ``a<b<c<d`` and ``e<c``; ``L(ab)=t2``, ``L(bc)=t4``, ``L(cd)=t3``,
  ``L(bd)=t5``, ``L(ec)=t1``, ``ca < t4``, ``ed < t3``; ``t1 < t3``,
  ``t2 < t4``, ``t3, t4, t5`` not all equal.  ``e`` may be ``a`` or ``b``.

The side conditions of S3 and S4 are the ones their impossibility arguments
use; the floating vertex of S4 (S5) is only constrained to precede ``b``
(``c``), the one order relation those arguments rely on.  :class:`Reading`
exposes the alternatives for experiments.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .digraph import strongly_connected_components, topological_order
from .model import Orientation, TemporalGraph, VertexOrder

TTO = "TTO"
STRICT_IDS = ("S1", "S2", "S3", "S4", "S5")


@dataclass(frozen=True)
class PatternWitness:
    pattern: str
    vertices: tuple[int, ...]
    labels: tuple[int, ...]

    def names(self, g: TemporalGraph) -> tuple[str, ...]:
        return tuple(g.vertices[v] for v in self.vertices)

    def to_dict(self, g: TemporalGraph | None = None) -> dict:
        verts = list(self.names(g)) if g is not None else list(self.vertices)
        return {
            "pattern": self.pattern,
            "vertices": verts,
            "labels": {f"t{i + 1}": t for i, t in enumerate(self.labels)},
        }

    def to_json(self, g: TemporalGraph | None = None) -> str:
        return json.dumps(self.to_dict(g))


@dataclass(frozen=True)
class Reading:
    """How the strict pattern figure is turned into predicates.

    ``swap34`` exchanges the captions printed under patterns 3 and 4 (the
    default; see module docstring).  ``floating`` is ``"loose"`` (S4's ``d``
    only before ``b``, S5's ``e`` only before ``c``) or ``"leftmost"`` (both
    before ``a``).  ``coincide`` allows ``d = a`` in S4 and ``e in {a, b}`` in S5.
    """

    swap34: bool = True
    floating: str = "loose"
    coincide: bool = True


DEFAULT_READING = Reading()
LITERAL_READING = Reading(swap34=False, floating="leftmost", coincide=False)


class _Ranked:
    """Label lookup by sigma rank; ``None`` for a missing pair."""

    def __init__(self, g: TemporalGraph, order: VertexOrder):
        g.require_simple()
        if len(order.sequence) != g.n:
            raise ValueError("order length does not match vertex count")
        self.n = g.n
        self.seq = order.sequence
        pos = order.position
        self.lab: list[list[int | None]] = [[None] * g.n for _ in range(g.n)]
        self.nbr: list[list[int]] = [[] for _ in range(g.n)]
        for e, (u, v) in enumerate(g.edges):
            i, j = pos[u], pos[v]
            t = g.labels[e][0]
            self.lab[i][j] = self.lab[j][i] = t
            self.nbr[i].append(j)
            self.nbr[j].append(i)
        for row in self.nbr:
            row.sort()

    def below(self, i: int, j: int, t: int) -> bool:
        """Dashed edge ``ij`` with condition ``< t``."""
        x = self.lab[i][j]
        return x is None or x < t

    def witness(self, pid: str, ranks: tuple[int, ...], labels: tuple[int, ...]) -> PatternWitness:
        return PatternWitness(pid, tuple(self.seq[r] for r in ranks), labels)


def _tto_scan(R: _Ranked):
    lab = R.lab
    for a in range(R.n):
        for b in R.nbr[a]:
            if b <= a:
                continue
            t1 = lab[a][b]
            for c in R.nbr[b]:
                if c <= b:
                    continue
                t2 = lab[b][c]
                if t1 <= t2 and R.below(a, c, t2):
                    yield R.witness(TTO, (a, b, c), (t1, t2))


def avoids_tto_pattern(g: TemporalGraph, order: VertexOrder) -> PatternWitness | None:
    """The lexicographically smallest ``(a, b, c)`` matching the TTO pattern, or None."""
    return next(_tto_scan(_Ranked(g, order)), None)


def orient_by_order(g: TemporalGraph, order: VertexOrder) -> Orientation:
    """Every edge from its earlier to its later endpoint."""
    pos = order.position
    return Orientation(
        g, frozenset(2 * e if pos[u] < pos[v] else 2 * e + 1 for e, (u, v) in enumerate(g.edges))
    )


def order_from_tto(g: TemporalGraph, o: Orientation) -> VertexOrder:
    """Smallest-index-first topological order of an acyclic orientation."""
    seq = topological_order(g.n, o.successors())
    if seq is None:
        raise ValueError("orientation has a directed cycle")
    return VertexOrder.from_sequence(g.n, seq)


# ---------------------------------------------------------------------------
# strict patterns


def _s12(R: _Ranked, pid: str):
    lab, below, nbr = R.lab, R.below, R.nbr
    for a in range(R.n):
        for b in nbr[a]:
            if b <= a:
                continue
            t1 = lab[a][b]
            for d in nbr[b]:
                if d <= b + 1:
                    continue
                t2 = lab[b][d]
                if not (t1 < t2 and below(a, d, t2)):
                    continue
                for c in range(b + 1, d):
                    t3 = lab[b][c] if pid == "S1" else lab[c][d]
                    if t3 is not None and t3 != t2:
                        yield R.witness(pid, (a, b, c, d), (t1, t2, t3))


def _s3(R: _Ranked, rd: Reading):
    lab, below, nbr = R.lab, R.below, R.nbr
    for a in range(R.n):
        for b in nbr[a]:
            if b <= a:
                continue
            t1 = lab[a][b]
            for c in nbr[b]:
                if c <= b:
                    continue
                t2 = lab[b][c]
                if not below(c, a, t2):
                    continue
                for d in nbr[b]:
                    if d <= c:
                        continue
                    t3 = lab[b][d]
                    ok = (t1 < t2 and t2 < t3) if rd.swap34 else (t1 < t3 and t2 < t3)
                    if ok and below(c, d, t3):
                        yield R.witness("S3", (a, b, c, d), (t1, t2, t3))


def _s4(R: _Ranked, rd: Reading):
    lab, below, nbr = R.lab, R.below, R.nbr
    for a in range(R.n):
        for c in nbr[a]:
            if c <= a + 1:
                continue
            t2 = lab[c][a]
            for b in nbr[c]:
                if not (a < b < c):
                    continue
                t3 = lab[b][c]
                if not below(a, b, t3):
                    continue
                for d in nbr[b]:
                    if d in (b, c) or (d == a and not rd.coincide):
                        continue
                    if d >= (a if rd.floating == "leftmost" else b) and d != a:
                        continue
                    t1 = lab[d][b]
                    ok = (t1 < t3 and t2 < t3) if rd.swap34 else (t1 < t2 and t2 < t3)
                    if ok and below(d, c, t3):
                        yield R.witness("S4", (a, b, c, d), (t1, t2, t3))


def _s5(R: _Ranked, rd: Reading):
    lab, below, nbr = R.lab, R.below, R.nbr
    for a in range(R.n):
        for b in nbr[a]:
            if b <= a:
                continue
            t2 = lab[a][b]
            for c in nbr[b]:
                if c <= b:
                    continue
                t4 = lab[b][c]
                if not (t2 < t4 and below(c, a, t4)):
                    continue
                for d in nbr[c]:
                    if d <= c:
                        continue
                    t3 = lab[c][d]
                    t5 = lab[b][d]
                    if t5 is None or t3 == t4 == t5:
                        continue
                    for e in nbr[c]:
                        if e in (c, d):
                            continue
                        if e in (a, b):
                            if not rd.coincide:
                                continue
                        elif e >= (a if rd.floating == "leftmost" else c):
                            continue
                        t1 = lab[e][c]
                        if t1 < t3 and below(e, d, t3):
                            yield R.witness("S5", (a, b, c, d, e), (t1, t2, t3, t4, t5))


def strict_witnesses(g: TemporalGraph, order: VertexOrder, reading: Reading = DEFAULT_READING):
    """Every strict-pattern witness, by pattern id then lexicographic rank tuple."""
    R = _Ranked(g, order)
    yield from sorted(_s12(R, "S1"), key=_key(order))
    yield from sorted(_s12(R, "S2"), key=_key(order))
    yield from sorted(_s3(R, reading), key=_key(order))
    yield from sorted(_s4(R, reading), key=_key(order))
    yield from sorted(_s5(R, reading), key=_key(order))


def _key(order: VertexOrder):
    pos = order.position
    return lambda w: tuple(pos[v] for v in w.vertices)


def avoids_strict_patterns(
    g: TemporalGraph, order: VertexOrder, reading: Reading = DEFAULT_READING
) -> PatternWitness | None:
    """First strict-pattern witness (S1 before S2 ..., smallest rank tuple), or None."""
    R = _Ranked(g, order)
    scans = (_s12(R, "S1"), _s12(R, "S2"), _s3(R, reading), _s4(R, reading), _s5(R, reading))
    key = _key(order)
    for scan in scans:
        best = min(scan, key=key, default=None)
        if best is not None:
            return best
    return None


def strict_orient_by_order(g: TemporalGraph, order: VertexOrder) -> Orientation:
    """Edge ``bc`` (``b`` first) points back to ``b`` iff some ``a`` before ``b`` has
    ``L(ab) < L(bc)`` and ``ac`` absent or below ``L(bc)``; all other edges go left to right.

    Avoiding the strict patterns does not guarantee the result is a Strict
    TTO for that particular order, so verify it.
    """
    g.require_simple()
    pos = order.position
    lab = {}
    for e, (u, v) in enumerate(g.edges):
        lab[u, v] = lab[v, u] = g.labels[e][0]
    arcs = set()
    for e, (u, v) in enumerate(g.edges):
        b, c = (u, v) if pos[u] < pos[v] else (v, u)
        t = g.labels[e][0]
        back = any(
            pos[a] < pos[b] and lab[a, b] < t and lab.get((a, c), t - 1) < t for a in g.adj[b] if a != c
        )
        arcs.add(g.arc(c, b) if back else g.arc(b, c))
    return Orientation(g, frozenset(arcs))


def order_from_strict_tto(g: TemporalGraph, o: Orientation) -> VertexOrder:
    """Topological order of the SCC condensation, each component kept contiguous.

    Raises ValueError if some strongly connected component carries two labels,
    which no Strict TTO allows.
    """
    succ = o.successors()
    comp, _ = strongly_connected_components(succ)
    members: dict[int, list[int]] = {}
    for v in range(g.n):
        members.setdefault(comp[v], []).append(v)
    for vs in members.values():
        labels = {g.labels[g.adj[u][w]] for u, w in combinations(vs, 2) if w in g.adj[u]}
        if len(labels) > 1:
            raise ValueError(f"strongly connected component {[g.vertices[v] for v in vs]} is not monolabel")
    # Tarjan numbers components in reverse topological order
    seq = sorted(range(g.n), key=lambda v: (-comp[v], v))
    return VertexOrder.from_sequence(g.n, seq)
