"""Circle enumeration, circle signs, negative circle vectors and realizability of
prescribed negative-circle sets via the theta criterion."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import kernels
from .graph import MINUS, PLUS, GraphError, SignedGraph, sign_char

DEFAULT_CIRCLE_BUDGET = 10**6


class NotACircle(GraphError):
    pass


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a cyclic vertex sequence: smallest vertex first, smaller neighbour second."""
    k = len(seq)
    i = min(range(k), key=seq.__getitem__)
    fwd = [seq[(i + j) % k] for j in range(k)]
    if k > 2 and fwd[-1] < fwd[1]:
        fwd = [fwd[0]] + fwd[:0:-1]
    return tuple(fwd)


@dataclass(frozen=True)
class Circle:
    """A circle of a fixed graph.

    ``vertices`` is the canonical cyclic order, ``edges`` the sorted edge ids.
    Circles of the same graph compare equal iff their edge sets are equal.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    sign: int

    @classmethod
    def from_vertices(cls, g: SignedGraph, seq: Sequence[int]) -> "Circle":
        seq = list(seq)
        if len(seq) < 3 or len(set(seq)) != len(seq):
            raise NotACircle(f"{'-'.join(map(str, seq))} is not a circle")
        try:
            eids = [g.edge_id(a, b) for a, b in zip(seq, seq[1:] + seq[:1])]
        except GraphError as exc:
            raise NotACircle(f"{'-'.join(map(str, seq))} is not a circle of the graph: {exc}") from None
        sign = PLUS
        for e in eids:
            sign *= g.edges[e][2]
        return cls(canonical_cycle(seq), tuple(sorted(eids)), sign)

    @classmethod
    def parse(cls, g: SignedGraph, text: str) -> "Circle":
        """Parse ``0-1-2`` (an optional trailing sign annotation is ignored)."""
        token = text.split()[0]
        try:
            seq = [int(x) for x in token.split("-")]
        except ValueError:
            raise NotACircle(f"cannot read circle {text!r}") from None
        return cls.from_vertices(g, seq)

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def label(self) -> str:
        return "-".join(map(str, self.vertices))

    @cached_property
    def edge_mask(self) -> int:
        mask = 0
        for e in self.edges:
            mask |= 1 << e
        return mask

    @cached_property
    def vertex_mask(self) -> int:
        mask = 0
        for v in self.vertices:
            mask |= 1 << v
        return mask

    def sort_key(self) -> tuple:
        return (self.length, self.vertices)

    def to_json(self) -> dict:
        return {"cycle": self.label, "edges": list(self.edges), "length": self.length, "sign": sign_char(self.sign)}

    def __str__(self) -> str:
        return f"{self.label} ({sign_char(self.sign)})"


@lru_cache(maxsize=512)
def _raw_cycles(n: int, neighbors: tuple, length_max: int, budget: int) -> tuple[tuple[int, ...], ...]:
    cycles = kernels.simple_cycles(n, [list(a) for a in neighbors], length_max, budget)
    cycles.sort(key=lambda c: (len(c), c))
    return tuple(cycles)


@lru_cache(maxsize=512)
def _all_circles(g: SignedGraph, length_max: int, budget: int) -> tuple[Circle, ...]:
    idx = g.edge_index
    out = []
    for cyc in _raw_cycles(g.n, g.neighbors, length_max, budget):
        eids = []
        sign = PLUS
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            e = idx[(a, b) if a < b else (b, a)]
            eids.append(e)
            sign *= g.edges[e][2]
        eids.sort()
        out.append(Circle(cyc, tuple(eids), sign))
    return tuple(out)


def is_chordless(g: SignedGraph, c: Circle) -> bool:
    vs = set(c.vertices)
    induced = sum(1 for v in c.vertices for w in g.neighbors[v] if w in vs) // 2
    return induced == c.length


def enumerate_circles(
    g: SignedGraph,
    sign: int | None = None,
    chordless: bool = False,
    length_max: int | None = None,
    budget: int = DEFAULT_CIRCLE_BUDGET,
) -> list[Circle]:
    """Every circle of ``g`` passing the filters, sorted by (length, vertex cycle).

    Raises :class:`~sigcircles.errors.BudgetExceeded` when more than ``budget``
    circles (before sign/chord filtering) exist within ``length_max``.
    """
    circles = _all_circles(g, length_max or 0, budget)
    return [
        c
        for c in circles
        if (sign is None or c.sign == sign) and (not chordless or is_chordless(g, c))
    ]


def circle_from_edges(g: SignedGraph, edge_ids: Iterable[int]) -> Circle:
    eids = sorted(set(edge_ids))
    if len(eids) < 3:
        raise NotACircle("a circle needs at least 3 edges")
    incident: dict[int, list[int]] = {}
    for e in eids:
        if not 0 <= e < g.m:
            raise NotACircle(f"unknown edge id {e}")
        u, v, _ = g.edges[e]
        incident.setdefault(u, []).append(v)
        incident.setdefault(v, []).append(u)
    if any(len(ws) != 2 for ws in incident.values()):
        raise NotACircle("edge set has a vertex of degree other than 2")
    start = min(incident)
    seq, prev, cur = [start], None, start
    while True:
        a, b = incident[cur]
        nxt = a if a != prev else b
        if nxt == start:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
    if len(seq) != len(incident):
        raise NotACircle("edge set is disconnected")
    return Circle.from_vertices(g, seq)


def circle_sign(g: SignedGraph, edge_ids: Iterable[int]) -> int:
    return circle_from_edges(g, edge_ids).sign


def negative_circle_vector(g: SignedGraph, budget: int = DEFAULT_CIRCLE_BUDGET) -> tuple[int, ...]:
    """``(c_3, ..., c_n)``: counts of negative circles by length."""
    counts = [0] * max(g.n - 2, 0)
    for c in enumerate_circles(g, budget=budget):
        if c.sign == MINUS:
            counts[c.length - 3] += 1
    return tuple(counts)


# -- realizability ----------------------------------------------------------

def spanning_forest(g: SignedGraph, eids: Iterable[int] | None = None) -> tuple[list[int], list[int | None], list[int]]:
    """BFS forest over the given edges, roots taken in vertex order.

    Returns ``(parent, parent_edge, depth)``; roots have parent ``-1``.
    """
    allowed = None if eids is None else set(eids)
    parent = [-2] * g.n
    pedge: list[int | None] = [None] * g.n
    depth = [0] * g.n
    for r in range(g.n):
        if parent[r] != -2:
            continue
        parent[r] = -1
        queue = [r]
        for x in queue:
            for w, e in g.adjacency[x]:
                if parent[w] == -2 and (allowed is None or e in allowed):
                    parent[w] = x
                    pedge[w] = e
                    depth[w] = depth[x] + 1
                    queue.append(w)
    return parent, pedge, depth


def tree_cycle(parent: list[int], depth: list[int], a: int, b: int) -> list[int]:
    """Vertex sequence of the fundamental circle closed by a non-tree edge ``ab``."""
    left, right = [a], [b]
    x, y = a, b
    while depth[x] > depth[y]:
        x = parent[x]
        left.append(x)
    while depth[y] > depth[x]:
        y = parent[y]
        right.append(y)
    while x != y:
        x, y = parent[x], parent[y]
        left.append(x)
        right.append(y)
    right.pop()
    return left + right[::-1]


def _keys(g: SignedGraph, b: Iterable) -> frozenset[tuple[int, ...]]:
    keys = set()
    for item in b:
        if isinstance(item, Circle):
            keys.add(item.edges)
        elif isinstance(item, str):
            keys.add(Circle.parse(g, item).edges)
        else:
            keys.add(circle_from_edges(g, item).edges)
    return frozenset(keys)


def read_circle_set(g: SignedGraph, text: str) -> frozenset[tuple[int, ...]]:
    """One circle per line as ``0-1-2``; blank and ``#`` lines ignored."""
    lines = [ln.strip() for ln in text.splitlines()]
    return _keys(g, [ln for ln in lines if ln and not ln.startswith("#")])


def _checked_keys(base: SignedGraph, b: Iterable, budget: int) -> tuple[list[Circle], frozenset]:
    keys = _keys(base, b)
    circles = enumerate_circles(base, budget=budget)
    known = {c.edges for c in circles}
    for k in keys:
        if k not in known:
            raise NotACircle(f"edge set {list(k)} is not a circle of the graph")
    return circles, keys


def realize_circle_set(
    graph: SignedGraph, b: Iterable, budget: int = DEFAULT_CIRCLE_BUDGET, sign: int = MINUS
) -> SignedGraph | None:
    """A signature of ``graph`` whose circles of the given sign are exactly ``b``, or ``None``.

    Tree edges of a BFS spanning forest are positive; a non-tree edge is negative
    iff its fundamental circle is to be negative. The result is checked against a
    full enumeration. Members of ``b`` may be :class:`Circle` objects, ``"0-1-2"``
    strings or edge-id collections.
    """
    base = graph.underlying()
    circles, keys = _checked_keys(base, b, budget)
    if sign == PLUS:
        keys = frozenset(c.edges for c in circles) - keys
    parent, pedge, depth = spanning_forest(base)
    tree = {e for e in pedge if e is not None}
    signs = [PLUS] * base.m
    for e, (u, v, _) in enumerate(base.edges):
        if e in tree:
            continue
        fc = Circle.from_vertices(base, tree_cycle(parent, depth, u, v))
        if fc.edges in keys:
            signs[e] = MINUS
    neg = 0
    for e, s in enumerate(signs):
        if s < 0:
            neg |= 1 << e
    realized = {c.edges for c in circles if bin(c.edge_mask & neg).count("1") & 1}
    if realized != keys:
        return None
    return base.with_signs(signs)


@lru_cache(maxsize=256)
def theta_triples(graph: SignedGraph, budget: int = DEFAULT_CIRCLE_BUDGET) -> tuple[tuple[int, int, int], ...]:
    """Index triples (into ``enumerate_circles(graph)``) of the three circles of each theta.

    A pair of circles forms a theta when their common edges make one nonempty
    path and they share no vertex off that path; the third circle is the
    symmetric difference. Each theta is listed once, as its three sorted indices.
    """
    circles = enumerate_circles(graph.underlying(), budget=budget)
    by_mask = {c.edge_mask: i for i, c in enumerate(circles)}
    out = set()
    for i, ci in enumerate(circles):
        for j in range(i + 1, len(circles)):
            cj = circles[j]
            common = ci.edge_mask & cj.edge_mask
            if not common:
                continue
            shared_v = ci.vertex_mask & cj.vertex_mask
            ne = bin(common).count("1")
            path_v = 0
            e = common
            while e:
                low = e & -e
                u, v, _ = graph.edges[low.bit_length() - 1]
                path_v |= (1 << u) | (1 << v)
                e ^= low
            if bin(path_v).count("1") != ne + 1 or path_v != shared_v:
                continue
            k = by_mask[ci.edge_mask ^ cj.edge_mask]
            out.add(tuple(sorted((i, j, k))))
    return tuple(sorted(out))


@dataclass(frozen=True)
class ThetaCheck:
    holds: bool
    violating_theta: tuple[Circle, Circle, Circle] | None = None

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "violating_theta": None if self.violating_theta is None else [c.label for c in self.violating_theta],
        }


def verify_theta_criterion(
    graph: SignedGraph, b: Iterable, budget: int = DEFAULT_CIRCLE_BUDGET, sign: int = MINUS
) -> ThetaCheck:
    """Theta test for a prescribed set of circles of one sign.

    The signs of a theta's three circles multiply to ``+``, so a negative set meets
    every theta in zero or two circles and a positive set in one or three. With
    ``sign=MINUS`` (the default) ``b`` is the prescribed negative set; with
    ``sign=PLUS`` it is the prescribed positive set.
    """
    base = graph.underlying()
    circles, keys = _checked_keys(base, b, budget)
    want = 1 if sign == PLUS else 0
    member = [c.edges in keys for c in circles]
    for i, j, k in theta_triples(base, budget):
        if (member[i] + member[j] + member[k]) % 2 != want:
            return ThetaCheck(False, (circles[i], circles[j], circles[k]))
    return ThetaCheck(True)
