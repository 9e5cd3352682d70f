"""Temporal graphs, orientations, vertex orders and their text formats.

Vertices are opaque strings mapped to dense integer ids in first-appearance
order.  Edge ``e`` is stored as an ordered pair ``(u, v)`` of vertex ids; its
two orientations are the arc-vertices ``2*e`` (``u -> v``) and ``2*e + 1``
(``v -> u``), so the mirror of an arc-vertex ``p`` is ``p ^ 1``.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

MAX_LABEL = 2**64 - 1

Labels = tuple[int, ...]
TextSource = Union[str, bytes, io.IOBase]


class GraphFormatError(ValueError):
    """Raised for malformed ``.tgr``, orientation or order input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def mirror(p: int) -> int:
    return p ^ 1


# ---------------------------------------------------------------------------
# label-set comparators


def _check_nonempty(*sets: Sequence[int]) -> None:
    for s in sets:
        if len(s) == 0:
            raise ValueError("label sets must be nonempty")


def set_leq(s1: Sequence[int], s2: Sequence[int]) -> bool:
    """True iff some x in ``s1`` and y in ``s2`` satisfy x <= y."""
    _check_nonempty(s1, s2)
    return min(s1) <= max(s2)


def set_lt(s1: Sequence[int], s2: Sequence[int]) -> bool:
    """True iff some x in ``s1`` and y in ``s2`` satisfy x < y."""
    _check_nonempty(s1, s2)
    return min(s1) < max(s2)


def set_not_leq(s1: Sequence[int], s2: Sequence[int]) -> bool:
    """Every element of ``s1`` is strictly greater than every element of ``s2``."""
    return not set_leq(s1, s2)


def set_not_lt(s1: Sequence[int], s2: Sequence[int]) -> bool:
    """Every element of ``s1`` is greater than or equal to every element of ``s2``."""
    return not set_lt(s1, s2)


# ---------------------------------------------------------------------------
# graphs


def _normalize_labels(labels: Iterable[int]) -> Labels:
    out = tuple(sorted(set(int(t) for t in labels)))
    if not out:
        raise ValueError("label set must be nonempty")
    for t in out:
        if t < 0 or t > MAX_LABEL:
            raise ValueError(f"label {t} outside [0, 2^64 - 1]")
    return out


@dataclass(frozen=True)
class TemporalGraph:
    """Undirected graph whose edges carry nonempty sorted sets of time labels.

    Build instances with :meth:`from_edges` or :func:`parse_graph`; the
    constructor itself assumes already-normalized data.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    labels: tuple[Labels, ...]

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str, Union[int, Iterable[int]]]],
        vertices: Iterable[str] = (),
    ) -> "TemporalGraph":
        """Build a graph from ``(u, v, label_or_labels)`` triples.

        ``vertices`` lists ids that come first in the vertex order (and may be
        isolated); every other endpoint is appended in first-appearance order.
        """
        names: list[str] = []
        index: dict[str, int] = {}

        def vid(name: str) -> int:
            name = str(name)
            if name not in index:
                index[name] = len(names)
                names.append(name)
            return index[name]

        for v in vertices:
            vid(v)
        seen: set[frozenset[int]] = set()
        out_edges = []
        out_labels = []
        for u, v, lab in edges:
            iu, iv = vid(u), vid(v)
            if iu == iv:
                raise ValueError(f"self-loop on {u!r}")
            key = frozenset((iu, iv))
            if key in seen:
                raise ValueError(f"duplicate edge {u!r} {v!r}")
            seen.add(key)
            if isinstance(lab, int):
                lab = (lab,)
            out_edges.append((iu, iv))
            out_labels.append(_normalize_labels(lab))
        return cls(tuple(names), tuple(out_edges), tuple(out_labels))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.vertices)}

    @cached_property
    def adj(self) -> tuple[dict[int, int], ...]:
        """Per vertex, a map neighbour -> edge index."""
        adj: list[dict[int, int]] = [{} for _ in self.vertices]
        for e, (u, v) in enumerate(self.edges):
            adj[u][v] = e
            adj[v][u] = e
        return tuple(adj)

    @cached_property
    def lo(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.labels)

    @cached_property
    def hi(self) -> tuple[int, ...]:
        return tuple(s[-1] for s in self.labels)

    @property
    def is_simple(self) -> bool:
        return all(len(s) == 1 for s in self.labels)

    def require_simple(self) -> None:
        if not self.is_simple:
            raise ValueError("operation requires a simple temporal graph (one label per edge)")

    def edge(self, u: int, v: int) -> int | None:
        return self.adj[u].get(v)

    def label(self, e: int) -> int:
        """The single label of edge ``e`` (simple graphs)."""
        return self.labels[e][0]

    def arc(self, u: int, v: int) -> int:
        """Arc-vertex id of the orientation ``u -> v``."""
        e = self.adj[u][v]
        return 2 * e if self.edges[e][0] == u else 2 * e + 1

    def arc_ends(self, p: int) -> tuple[int, int]:
        u, v = self.edges[p >> 1]
        return (u, v) if p & 1 == 0 else (v, u)

    def arc_names(self, p: int) -> tuple[str, str]:
        u, v = self.arc_ends(p)
        return self.vertices[u], self.vertices[v]

    def arc_by_name(self, u: str, v: str) -> int:
        try:
            iu, iv = self.index[u], self.index[v]
        except KeyError as exc:
            raise KeyError(f"unknown vertex {exc.args[0]!r}") from None
        if iv not in self.adj[iu]:
            raise KeyError(f"no edge {u} {v}")
        return self.arc(iu, iv)

    def with_labels(self, labels: Sequence[Iterable[int]]) -> "TemporalGraph":
        return TemporalGraph(self.vertices, self.edges, tuple(_normalize_labels(s) for s in labels))

    def __str__(self) -> str:
        return serialize_graph(self)


def is_proper(g: TemporalGraph) -> bool:
    """True iff every two edges sharing an endpoint have disjoint label sets."""
    for v in range(g.n):
        seen: set[int] = set()
        for e in g.adj[v].values():
            for t in g.labels[e]:
                if t in seen:
                    return False
                seen.add(t)
    return True


# ---------------------------------------------------------------------------
# orientations and orders


@dataclass(frozen=True)
class Orientation:
    """A set of arc-vertices of one graph.

    A well-formed orientation picks at most one arc per edge; ``from_pairs``
    keeps bidirected input as-is so verifiers can report it.
    """

    graph: TemporalGraph = field(repr=False, compare=False)
    arcs: frozenset[int]

    @classmethod
    def from_arcs(cls, graph: TemporalGraph, arcs: Iterable[int]) -> "Orientation":
        return cls(graph, frozenset(arcs))

    @classmethod
    def from_pairs(cls, graph: TemporalGraph, pairs: Iterable[tuple[str, str]]) -> "Orientation":
        return cls(graph, frozenset(graph.arc_by_name(u, v) for u, v in pairs))

    @classmethod
    def from_mask(cls, graph: TemporalGraph, mask: int) -> "Orientation":
        """Bit ``e`` of ``mask`` set means edge ``e`` is oriented as stored."""
        return cls(graph, frozenset(2 * e + (0 if mask >> e & 1 else 1) for e in range(graph.m)))

    def mask(self) -> int:
        """Inverse of :meth:`from_mask`; requires a total, consistent orientation."""
        if not (self.is_total and self.is_consistent):
            raise ValueError("mask needs a total, consistent orientation")
        return sum(1 << (p >> 1) for p in self.arcs if not p & 1)

    @property
    def is_total(self) -> bool:
        return {p >> 1 for p in self.arcs} == set(range(self.graph.m))

    @property
    def is_consistent(self) -> bool:
        return not any(p ^ 1 in self.arcs for p in self.arcs)

    def bidirected_edges(self) -> list[int]:
        return sorted({p >> 1 for p in self.arcs if p ^ 1 in self.arcs})

    def __contains__(self, p: int) -> bool:
        return p in self.arcs

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.arcs))

    def has(self, u: int, v: int) -> bool:
        e = self.graph.adj[u].get(v)
        return e is not None and self.graph.arc(u, v) in self.arcs

    def pairs(self) -> list[tuple[str, str]]:
        return [self.graph.arc_names(p) for p in sorted(self.arcs)]

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.graph.n)]
        for p in sorted(self.arcs):
            u, v = self.graph.arc_ends(p)
            out[u].append(v)
        return out

    def reverse(self) -> "Orientation":
        return Orientation(self.graph, frozenset(p ^ 1 for p in self.arcs))


@dataclass(frozen=True)
class VertexOrder:
    """A total order on the vertices of a graph; ``sequence[0]`` is smallest."""

    sequence: tuple[int, ...]
    position: tuple[int, ...]

    @classmethod
    def from_sequence(cls, n: int, sequence: Iterable[int]) -> "VertexOrder":
        seq = tuple(sequence)
        if sorted(seq) != list(range(n)):
            raise ValueError("order is not a permutation of the vertex set")
        pos = [0] * n
        for r, v in enumerate(seq):
            pos[v] = r
        return cls(seq, tuple(pos))

    @classmethod
    def identity(cls, n: int) -> "VertexOrder":
        return cls.from_sequence(n, range(n))

    @classmethod
    def from_names(cls, graph: TemporalGraph, names: Iterable[str]) -> "VertexOrder":
        try:
            seq = [graph.index[x] for x in names]
        except KeyError as exc:
            raise ValueError(f"unknown vertex {exc.args[0]!r} in order") from None
        return cls.from_sequence(graph.n, seq)

    def __len__(self) -> int:
        return len(self.sequence)

    def before(self, u: int, v: int) -> bool:
        return self.position[u] < self.position[v]

    def names(self, graph: TemporalGraph) -> list[str]:
        return [graph.vertices[v] for v in self.sequence]


def temporalize(g: TemporalGraph, order: VertexOrder) -> TemporalGraph:
    """Relabel ``g`` so that its left-to-right orientation is transitive.

    With 1-based ranks, edge ``v_i v_j`` gets label ``n - min(i, j)``; every
    left-to-right directed path then has strictly decreasing labels.
    """
    if len(order) != g.n:
        raise ValueError("order is not a permutation of the vertex set")
    n = g.n
    labels = [(n - (min(order.position[u], order.position[v]) + 1),) for u, v in g.edges]
    return TemporalGraph(g.vertices, g.edges, tuple(labels))


# ---------------------------------------------------------------------------
# text formats


def _read_text(src: TextSource) -> str:
    if isinstance(src, bytes):
        return src.decode("utf-8")
    if isinstance(src, str):
        return src
    data = src.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_label(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise GraphFormatError(f"non-integer label {tok!r}", lineno)
    t = int(tok)
    if t > MAX_LABEL:
        raise GraphFormatError(f"label {tok} exceeds 2^64 - 1", lineno)
    return t


def parse_graph(src: TextSource) -> TemporalGraph:
    """Parse ``.tgr`` text: ``u v t1[,t2,...]`` per edge, ``#`` comments.

    A line holding a single token declares an (possibly isolated) vertex.
    """
    names: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    labels: list[Labels] = []
    seen: dict[frozenset[int], int] = {}

    def vid(name: str) -> int:
        if name not in index:
            index[name] = len(names)
            names.append(name)
        return index[name]

    for lineno, line in _content_lines(_read_text(src)):
        toks = line.split()
        if len(toks) == 1:
            vid(toks[0])
            continue
        if len(toks) == 2:
            raise GraphFormatError("empty label list", lineno)
        if len(toks) > 3:
            raise GraphFormatError(f"expected 'u v t1[,t2,...]', got {line!r}", lineno)
        u, v, labtok = toks
        if u == v:
            raise GraphFormatError(f"self-loop on {u!r}", lineno)
        parts = labtok.split(",")
        if any(p == "" for p in parts):
            raise GraphFormatError(f"empty label in {labtok!r}", lineno)
        labs = tuple(sorted({_parse_label(p, lineno) for p in parts}))
        iu, iv = vid(u), vid(v)
        key = frozenset((iu, iv))
        if key in seen:
            raise GraphFormatError(
                f"duplicate edge {u} {v} (first on line {seen[key]}); "
                "write multiple labels as 'u v t1,t2'",
                lineno,
            )
        seen[key] = lineno
        edges.append((iu, iv))
        labels.append(labs)
    return TemporalGraph(tuple(names), tuple(edges), tuple(labels))


def serialize_graph(g: TemporalGraph) -> str:
    lines = []
    appearance: dict[int, None] = {}
    for u, v in g.edges:
        appearance.setdefault(u)
        appearance.setdefault(v)
    # declare vertices up front when edge lines alone would not reproduce the order
    if list(appearance) != list(range(g.n)):
        lines.extend(g.vertices)
    for (u, v), labs in zip(g.edges, g.labels):
        lines.append(f"{g.vertices[u]} {g.vertices[v]} {','.join(map(str, labs))}")
    return "\n".join(lines) + "\n" if lines else ""


def parse_orientation(src: TextSource, graph: TemporalGraph) -> Orientation:
    """Parse ``u -> v`` lines into an orientation of ``graph``."""
    arcs = set()
    for lineno, line in _content_lines(_read_text(src)):
        left, sep, right = line.partition("->")
        u, v = left.strip(), right.strip()
        if not sep or not u or not v or len(u.split()) != 1 or len(v.split()) != 1:
            raise GraphFormatError(f"expected 'u -> v', got {line!r}", lineno)
        try:
            arcs.add(graph.arc_by_name(u, v))
        except KeyError as exc:
            raise GraphFormatError(str(exc.args[0]), lineno) from None
    return Orientation(graph, frozenset(arcs))


def serialize_orientation(o: Orientation) -> str:
    return "".join(f"{u} -> {v}\n" for u, v in o.pairs())


def parse_order(src: TextSource, graph: TemporalGraph) -> VertexOrder:
    """Parse one vertex id per line, smallest first."""
    names = []
    for lineno, line in _content_lines(_read_text(src)):
        if len(line.split()) != 1:
            raise GraphFormatError(f"expected one vertex id, got {line!r}", lineno)
        if line not in graph.index:
            raise GraphFormatError(f"unknown vertex {line!r}", lineno)
        names.append(line)
    return VertexOrder.from_names(graph, names)


def serialize_order(order: VertexOrder, graph: TemporalGraph) -> str:
    return "".join(f"{x}\n" for x in order.names(graph))
