"""Named example graphs, with the orientations drawn alongside them where there is one."""

from __future__ import annotations

from dataclasses import dataclass

from .model import Orientation, TemporalGraph, parse_graph


@dataclass(frozen=True)
class Instance:
    name: str
    description: str
    tgr: str
    drawn: tuple[tuple[str, str], ...] = ()

    def graph(self) -> TemporalGraph:
        return parse_graph(self.tgr)

    def drawn_orientation(self) -> Orientation | None:
        if not self.drawn:
            return None
        return Orientation.from_pairs(self.graph(), self.drawn)


def _tgr(*rows: str) -> str:
    return "".join(r + "\n" for r in rows)


CATALOG: dict[str, Instance] = {
    inst.name: inst
    for inst in [
        Instance(
            "fig1a",
            "K4 (a comparability graph) labelled so that no TTO exists",
            _tgr("a b 1", "b c 2", "c d 1", "a c 0", "b d 0", "a d 2"),
        ),
        Instance(
            "fig1b",
            "labelled C5: not a comparability graph, yet T-comparability",
            _tgr("b a 5", "a c 1", "c e 2", "e d 3", "d b 4"),
            drawn=(("b", "a"), ("a", "c"), ("e", "c"), ("e", "d"), ("b", "d")),
        ),
        Instance(
            "fig1c",
            "second non-comparability underlying graph of a T-comparability graph",
            _tgr(
                "b a 2", "c b 1", "c a 2", "e a 2", "c f 2",
                "d f 2", "d e 2", "d a 2", "d c 2",
            ),
            drawn=(
                ("b", "a"), ("c", "b"), ("c", "a"), ("e", "a"), ("c", "f"),
                ("d", "f"), ("d", "e"), ("d", "a"), ("d", "c"),
            ),
        ),
        Instance(
            "fig_qtto",
            "admits a QTTO but no TTO; (a,b,c,d) is a correlated monolabel triangle",
            _tgr(
                "a b 2", "b c 2", "c a 2", "f b 3", "f a 1",
                "d b 1", "d c 3", "e c 1", "e a 3",
            ),
            drawn=(
                ("a", "b"), ("b", "c"), ("c", "a"), ("f", "b"), ("f", "a"),
                ("d", "b"), ("d", "c"), ("e", "c"), ("e", "a"),
            ),
        ),
        Instance(
            "fig_quad",
            "correlated monolabel triangle (a,b,c,d) with t=2: bd=2 (<= t), cd=3 (> t), ad=1 (< t)",
            _tgr("a b 2", "b c 2", "c a 2", "d b 2", "d c 3", "d a 1"),
        ),
        Instance(
            "figA",
            "monolabel triangle abc (t=1) plus b' joined to a at 2 and to c at 1",
            _tgr("b' a 2", "c a 1", "c b 1", "a b 1", "b' c 1"),
        ),
    ]
}


def get(name: str) -> Instance:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown instance {name!r}; known: {', '.join(CATALOG)}") from None
