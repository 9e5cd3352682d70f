"""Small directed-graph toolkit over dense integer vertices.

Digraphs are adjacency lists ``succ[v] -> iterable of successors``.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Sequence


def strongly_connected_components(succ: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Tarjan's algorithm, iterative.

    Returns ``(comp, count)`` where ``comp[v]`` is the component of ``v``.
    Components are numbered in reverse topological order: every arc
    ``u -> v`` between distinct components has ``comp[u] > comp[v]``.
    """
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, iter(succ[root]))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp, ncomp


def two_sat_satisfiable(succ: Sequence[Sequence[int]]) -> bool:
    """Satisfiability of the 2-SAT instance whose literals are paired ``p, p ^ 1``.

    ``succ`` is the implication digraph; unsatisfiable iff some literal
    shares a strongly connected component with its negation.
    """
    comp, _ = strongly_connected_components(succ)
    return all(comp[p] != comp[p ^ 1] for p in range(0, len(succ), 2))


def two_sat_assignment(succ: Sequence[Sequence[int]]) -> list[int] | None:
    """A satisfying set of true literals (one per pair), or None."""
    comp, _ = strongly_connected_components(succ)
    out = []
    for p in range(0, len(succ), 2):
        if comp[p] == comp[p ^ 1]:
            return None
        # reverse-topological numbering: the literal later in topological order wins
        out.append(p if comp[p] < comp[p ^ 1] else p ^ 1)
    return out


def reachable(succ: Sequence[Sequence[int]], seeds) -> set[int]:
    """Vertices reachable from ``seeds``, seeds included."""
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def topological_order(n: int, succ: Sequence[Sequence[int]], vertices=None) -> list[int] | None:
    """Kahn's algorithm taking the smallest available vertex first.

    Restricted to ``vertices`` when given (arcs leaving the set are ignored).
    Returns None when the digraph has a cycle.
    """
    members = range(n) if vertices is None else sorted(vertices)
    inside = [False] * n
    for v in members:
        inside[v] = True
    indeg = [0] * n
    for v in members:
        for w in succ[v]:
            if inside[w]:
                indeg[w] += 1
    heap = [v for v in members if indeg[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        v = heapq.heappop(heap)
        out.append(v)
        for w in succ[v]:
            if inside[w]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    heapq.heappush(heap, w)
    if len(out) != len(members):
        return None
    return out


def shortest_cycle(n: int, succ: Sequence[Sequence[int]]) -> list[int] | None:
    """A shortest directed cycle as a vertex list ``[v0, v1, ...]`` (closing arc implied).

    Breadth-first search from every vertex; ties go to the cycle found from
    the smallest start vertex, rotated to begin at its smallest member.
    """
    best: list[int] | None = None
    for s in range(n):
        if not succ[s]:
            continue
        parent = {s: -1}
        queue = deque([s])
        found = None
        while queue and found is None:
            v = queue.popleft()
            for w in sorted(succ[v]):
                if w == s:
                    found = v
                    break
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        if found is None:
            continue
        path = []
        v = found
        while v != -1:
            path.append(v)
            v = parent[v]
        path.reverse()
        if best is None or len(path) < len(best):
            best = path
            if len(best) == 2:
                break
    if best is None:
        return None
    k = best.index(min(best))
    return best[k:] + best[:k]
