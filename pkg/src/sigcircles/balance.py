"""Balance testing with certificates, blocks with balance flags, balancing edges and vertices."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .circles import Circle, spanning_forest, tree_cycle
from .graph import PLUS, SignedGraph, sign_char


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    marking: tuple[int, ...] | None = None
    witness: Circle | None = None

    def to_json(self) -> dict:
        return {
            "balanced": self.balanced,
            "marking": None if self.marking is None else [sign_char(s) for s in self.marking],
            "witness_circle": None if self.witness is None else self.witness.label,
        }


def _check(g: SignedGraph, eids: Iterable[int] | None = None, witness: bool = True) -> BalanceReport:
    """Spanning-forest marking on the edges ``eids`` (default: all) of ``g``.

    The first non-tree edge, by id, whose sign disagrees with the marking closes
    a negative circle with the forest; that circle is the witness.
    """
    allowed = range(g.m) if eids is None else sorted(set(eids))
    parent, pedge, depth = spanning_forest(g, None if eids is None else allowed)
    mark = [PLUS] * g.n
    order = sorted(range(g.n), key=depth.__getitem__)
    for v in order:
        if parent[v] >= 0:
            mark[v] = mark[parent[v]] * g.edges[pedge[v]][2]
    tree = set(pedge)
    for e in allowed:
        if e in tree:
            continue
        u, v, s = g.edges[e]
        if mark[u] * mark[v] != s:
            if not witness:
                return BalanceReport(False)
            return BalanceReport(False, witness=Circle.from_vertices(g, tree_cycle(parent, depth, u, v)))
    return BalanceReport(True, marking=tuple(mark))


def is_balanced(g: SignedGraph) -> BalanceReport:
    return _check(g)


def balanced_on(g: SignedGraph, eids: Iterable[int]) -> bool:
    """Balance of the spanning subgraph of ``g`` with edge ids ``eids``."""
    return _check(g, eids, witness=False).balanced


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    balanced: bool

    @property
    def is_isthmus(self) -> bool:
        return len(self.edges) == 1

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": list(self.edges), "balanced": self.balanced}


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: tuple[int, ...]
    isthmi: tuple[int, ...]

    def blocks_of_vertex(self, v: int) -> list[Block]:
        return [b for b in self.blocks if v in b.vertices]

    def block_of_edge(self, e: int) -> Block:
        for b in self.blocks:
            if e in b.edges:
                return b
        raise KeyError(e)

    def to_json(self) -> dict:
        return {
            "blocks": [b.to_json() for b in self.blocks],
            "cut_vertices": list(self.cut_vertices),
            "isthmi": list(self.isthmi),
        }


def _biconnected_edge_sets(g: SignedGraph) -> list[list[int]]:
    """Edge sets of the blocks (iterative Hopcroft-Tarjan on an edge stack)."""
    disc = [-1] * g.n
    low = [0] * g.n
    clock = 0
    out: list[list[int]] = []
    estack: list[int] = []
    for r in range(g.n):
        if disc[r] != -1:
            continue
        disc[r] = low[r] = clock
        clock += 1
        stack = [(r, -1, iter(g.adjacency[r]))]
        while stack:
            v, pe, it = stack[-1]
            for w, e in it:
                if e == pe:
                    continue
                if disc[w] == -1:
                    estack.append(e)
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(g.adjacency[w])))
                    break
                if disc[w] < disc[v]:
                    estack.append(e)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        comp = []
                        while True:
                            x = estack.pop()
                            comp.append(x)
                            if x == pe:
                                break
                        out.append(sorted(comp))
    return out


def blocks(g: SignedGraph) -> BlockDecomposition:
    found = []
    for eids in sorted(_biconnected_edge_sets(g)):
        vs = sorted({x for e in eids for x in g.edges[e][:2]})
        found.append(Block(tuple(vs), tuple(eids), balanced_on(g, eids)))
    count = [0] * g.n
    for b in found:
        for v in b.vertices:
            count[v] += 1
    cuts = tuple(v for v in range(g.n) if count[v] >= 2)
    isthmi = tuple(b.edges[0] for b in found if b.is_isthmus)
    return BlockDecomposition(tuple(found), cuts, isthmi)


def is_two_connected(g: SignedGraph) -> bool:
    """Connected, at least 3 vertices, one block."""
    if g.n < 3:
        return False
    bd = blocks(g)
    return len(bd.blocks) == 1 and len(bd.blocks[0].vertices) == g.n


def balancing_edges(g: SignedGraph) -> tuple[int, ...]:
    """Edges ``e`` with ``g`` unbalanced and ``g - e`` balanced.

    Such an edge lies on every negative circle, so only the edges of one
    negative circle need retesting.
    """
    rep = is_balanced(g)
    if rep.balanced:
        return ()
    return tuple(
        e for e in rep.witness.edges if balanced_on(g, (f for f in range(g.m) if f != e))
    )


def balancing_vertices(g: SignedGraph) -> tuple[int, ...]:
    rep = is_balanced(g)
    if rep.balanced:
        return ()
    out = []
    for v in sorted(rep.witness.vertices):
        keep = [e for e, (a, b, _) in enumerate(g.edges) if a != v and b != v]
        if balanced_on(g, keep):
            out.append(v)
    return tuple(out)
