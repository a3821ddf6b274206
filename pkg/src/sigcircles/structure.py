"""Hamiltonian circle signs, connectivity after removing a circle, and bridges of a circle."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .balance import is_balanced
from .circles import DEFAULT_CIRCLE_BUDGET, Circle, enumerate_circles
from .graph import MINUS, GraphError, SignedGraph, render_sgt, vertex_connectivity

CLASSES = ("disconnected", "separable", "2-separable", "3-connected-or-more")
CONNECTIVITY_SCALE = {
    "scale": "vertex connectivity 0/1/2/>=3 -> " + "/".join(CLASSES),
    "empty_residue": "disconnected",
    "single_vertex_residue": "separable",
}


@dataclass(frozen=True)
class HamiltonianSignSurvey:
    hamiltonian: bool
    negative_count: int
    positive_count: int
    unbalanced: bool

    @property
    def classification(self) -> str:
        if self.negative_count and self.positive_count:
            return "both"
        if self.negative_count:
            return "negative-only"
        if self.positive_count:
            return "positive-only"
        return "none"

    @property
    def exception(self) -> bool:
        """Hamiltonian and unbalanced, yet not both signs occur among Hamiltonian circles."""
        return self.hamiltonian and self.unbalanced and self.classification != "both"

    def to_json(self) -> dict:
        return {
            "hamiltonian": self.hamiltonian,
            "negative_count": self.negative_count,
            "positive_count": self.positive_count,
            "classification": self.classification,
            "unbalanced": self.unbalanced,
            "exception": self.exception,
        }


def hamiltonian_circles(g: SignedGraph, budget: int = DEFAULT_CIRCLE_BUDGET) -> list[Circle]:
    cycles = kernels.hamiltonian_cycles(g.n, [list(a) for a in g.neighbors], budget)
    return sorted((Circle.from_vertices(g, c) for c in cycles), key=Circle.sort_key)


def hamiltonian_sign_survey(g: SignedGraph, budget: int = DEFAULT_CIRCLE_BUDGET) -> HamiltonianSignSurvey:
    hc = hamiltonian_circles(g, budget)
    neg = sum(1 for c in hc if c.sign == MINUS)
    return HamiltonianSignSurvey(bool(hc), neg, len(hc) - neg, not is_balanced(g).balanced)


def s1_exception_record(g: SignedGraph, survey: HamiltonianSignSurvey) -> dict:
    return {
        "kind": "s1-exception",
        "graph": render_sgt(g),
        "classification": survey.classification,
        "counts": {"negative": survey.negative_count, "positive": survey.positive_count},
    }


def _require_circle(g: SignedGraph, c: Circle) -> Circle:
    # re-derive from the vertex order so circles of another graph are rejected
    fresh = Circle.from_vertices(g, c.vertices)
    if fresh.edges != c.edges:
        raise GraphError(f"{c.label} is not a circle of this graph")
    return fresh


def classify(kappa: int, nverts: int) -> str:
    if nverts == 0:
        return CONNECTIVITY_SCALE["empty_residue"]
    if nverts == 1:
        return CONNECTIVITY_SCALE["single_vertex_residue"]
    return CLASSES[min(kappa, 3)]


@dataclass(frozen=True)
class RemovalClassification:
    circle: Circle
    edge_removal: str
    vertex_removal: str
    edge_connectivity: int
    vertex_connectivity: int
    metadata: dict = field(default_factory=lambda: dict(CONNECTIVITY_SCALE))

    def to_json(self) -> dict:
        return {
            "circle": self.circle.label,
            "sign": "+" if self.circle.sign > 0 else "-",
            "edge_removal": self.edge_removal,
            "vertex_removal": self.vertex_removal,
            "edge_residue_connectivity": self.edge_connectivity,
            "vertex_residue_connectivity": self.vertex_connectivity,
            "metadata": self.metadata,
        }


def removal_connectivity(g: SignedGraph, c: Circle) -> RemovalClassification:
    """Classify ``g - E(c)`` (all vertices kept) and ``g - V(c)`` by vertex connectivity."""
    c = _require_circle(g, c)
    on = set(c.edges)
    k_edge = vertex_connectivity(g, edges=[e for e in range(g.m) if e not in on])
    rest = [v for v in range(g.n) if v not in set(c.vertices)]
    k_vert = vertex_connectivity(g, vertices=rest)
    return RemovalClassification(c, classify(k_edge, g.n), classify(k_vert, len(rest)), k_edge, k_vert)


def removal_scan(g: SignedGraph, sign: int | None = None, budget: int = DEFAULT_CIRCLE_BUDGET) -> dict:
    """For each class, the first circle of the given sign whose residue lands in it."""
    first = {"edge_removal": {k: None for k in CLASSES}, "vertex_removal": {k: None for k in CLASSES}}
    for c in enumerate_circles(g, sign=sign, budget=budget):
        r = removal_connectivity(g, c)
        for side, cls in (("edge_removal", r.edge_removal), ("vertex_removal", r.vertex_removal)):
            if first[side][cls] is None:
                first[side][cls] = c.label
    return {"sign": None if sign is None else ("+" if sign > 0 else "-"), **first, "metadata": dict(CONNECTIVITY_SCALE)}


@dataclass(frozen=True)
class Bridge:
    attachments: tuple[int, ...]
    internal: tuple[int, ...]
    edges: tuple[int, ...]

    def to_json(self) -> dict:
        return {"attachments": list(self.attachments), "internal": list(self.internal), "edges": list(self.edges)}


@dataclass(frozen=True)
class BridgeReport:
    circle: Circle
    chords: tuple[int, ...]
    bridges: tuple[Bridge, ...]

    def to_json(self, g: SignedGraph | None = None) -> dict:
        return {
            "circle": self.circle.label,
            "chords": [g.edge_label(e) for e in self.chords] if g is not None else list(self.chords),
            "bridges": [b.to_json() for b in self.bridges],
        }


def circle_bridges(g: SignedGraph, c: Circle) -> BridgeReport:
    """Bridges of ``c`` in Tutte's sense: each chord on its own, and each component of
    ``g - V(c)`` with the edges joining it to ``c``. Edgeless components are omitted."""
    c = _require_circle(g, c)
    on_v = set(c.vertices)
    on_e = set(c.edges)
    chords = tuple(e for e, (u, v, _) in enumerate(g.edges) if e not in on_e and u in on_v and v in on_v)
    found = [Bridge(g.edges[e][:2], (), (e,)) for e in chords]
    seen = set(on_v)
    for r in range(g.n):
        if r in seen:
            continue
        comp, stack = {r}, [r]
        seen.add(r)
        while stack:
            x = stack.pop()
            for w in g.neighbors[x]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        eids = tuple(sorted({e for x in comp for _, e in g.adjacency[x]}))
        if not eids:
            continue
        att = tuple(sorted({w for x in comp for w in g.neighbors[x] if w in on_v}))
        found.append(Bridge(att, tuple(sorted(comp)), eids))
    found.sort(key=lambda b: b.edges)
    return BridgeReport(c, chords, tuple(found))
