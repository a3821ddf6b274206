"""Negative-circle counts over all switching classes of a fixed graph.

One signature per switching class: the edges of a BFS spanning forest are
positive and the remaining ``m - n + c`` edges range over all sign patterns. The
class label is that pattern written as ``+``/``-`` characters in edge-id order
of the non-forest edges.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .circles import DEFAULT_CIRCLE_BUDGET, enumerate_circles, spanning_forest
from .errors import BudgetExceeded
from .graph import MINUS, PLUS, SignedGraph
from .optimization import DEFAULT_CLASS_BUDGET


def cotree_edges(graph: SignedGraph) -> list[int]:
    _, pedge, _ = spanning_forest(graph)
    tree = {e for e in pedge if e is not None}
    return [e for e in range(graph.m) if e not in tree]


def class_count(graph: SignedGraph) -> int:
    return 2 ** (graph.m - graph.n + len(graph.components()))


def iter_signatures(graph: SignedGraph, max_classes: int = DEFAULT_CLASS_BUDGET) -> Iterator[tuple[str, SignedGraph]]:
    """``(label, signed graph)`` for one representative of each switching class."""
    cot = cotree_edges(graph)
    if 2 ** len(cot) > max_classes:
        raise BudgetExceeded(f"2^{len(cot)} switching classes exceed the budget {max_classes}")
    for pattern in range(2 ** len(cot)):
        signs = [PLUS] * graph.m
        label = []
        for i, e in enumerate(cot):
            neg = pattern >> i & 1
            label.append("-" if neg else "+")
            if neg:
                signs[e] = MINUS
        yield "".join(label), graph.with_signs(signs)


def enumerate_signatures(graph: SignedGraph, max_classes: int = DEFAULT_CLASS_BUDGET) -> list[SignedGraph]:
    return [g for _, g in iter_signatures(graph, max_classes)]


def signature_from_label(graph: SignedGraph, label: str) -> SignedGraph:
    cot = cotree_edges(graph)
    if len(label) != len(cot) or set(label) - set("+-"):
        raise ValueError(f"label must be {len(cot)} '+'/'-' characters")
    signs = [PLUS] * graph.m
    for e, ch in zip(cot, label):
        if ch == "-":
            signs[e] = MINUS
    return graph.with_signs(signs)


def iter_census_rows(
    graph: SignedGraph, max_classes: int = DEFAULT_CLASS_BUDGET, budget: int = DEFAULT_CIRCLE_BUDGET
) -> Iterator[tuple[str, tuple[int, ...]]]:
    """``(class label, negative circle vector)`` per class; circles are enumerated once."""
    base = graph.underlying()
    circles = enumerate_circles(base, budget=budget)
    masks = [(c.edge_mask, c.length - 3) for c in circles]
    width = max(graph.n - 2, 0)
    for label, g in iter_signatures(base, max_classes):
        neg = g.negative_mask
        counts = [0] * width
        for mk, slot in masks:
            if bin(mk & neg).count("1") & 1:
                counts[slot] += 1
        yield label, tuple(counts)


def affine_dimension(vectors) -> int:
    """Dimension of the affine hull, by exact rational rank of differences."""
    from sympy import Matrix

    vs = sorted(set(map(tuple, vectors)))
    if len(vs) <= 1:
        return 0
    v0 = vs[0]
    return Matrix([[a - b for a, b in zip(v, v0)] for v in vs[1:]]).rank()


def circle_count_spectrum(graph: SignedGraph, length: int, **kw) -> list[int]:
    """Sorted set of the numbers of negative circles of one length, over all signatures."""
    if not 3 <= length <= graph.n:
        raise ValueError(f"length must lie in [3, {graph.n}]")
    return sorted({vec[length - 3] for _, vec in iter_census_rows(graph, **kw)})


@dataclass
class CensusReport:
    graph: str
    class_count: int
    rows: list[tuple[str, tuple[int, ...]]]
    spectra: dict[int, list[int]]
    spectrum_witnesses: dict[int, dict[int, str]]
    vector_set: list[tuple[int, ...]]
    vector_witnesses: dict[tuple[int, ...], str] = field(default_factory=dict)
    affine_dimension: int = 0

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "class_count": self.class_count,
            "spectra": {str(k): v for k, v in self.spectra.items()},
            "spectrum_witnesses": {
                str(k): {str(val): lab for val, lab in w.items()} for k, w in self.spectrum_witnesses.items()
            },
            "vector_set": [list(v) for v in self.vector_set],
            "vector_witnesses": [{"vector": list(v), "class": lab} for v, lab in self.vector_witnesses.items()],
            "affine_dimension": self.affine_dimension,
        }


def vector_set_and_dimension(graph: SignedGraph, **kw) -> CensusReport:
    rows = list(iter_census_rows(graph, **kw))
    lengths = range(3, graph.n + 1)
    spectra: dict[int, list[int]] = {}
    wit: dict[int, dict[int, str]] = {}
    for l in lengths:
        seen: dict[int, str] = {}
        for label, vec in rows:
            seen.setdefault(vec[l - 3], label)
        spectra[l] = sorted(seen)
        wit[l] = {k: seen[k] for k in sorted(seen)}
    vwit: dict[tuple[int, ...], str] = {}
    for label, vec in rows:
        vwit.setdefault(vec, label)
    vecs = sorted(vwit)
    return CensusReport(
        graph=str(graph.underlying()),
        class_count=len(rows),
        rows=rows,
        spectra=spectra,
        spectrum_witnesses=wit,
        vector_set=vecs,
        vector_witnesses={v: vwit[v] for v in vecs},
        affine_dimension=affine_dimension(vecs),
    )
