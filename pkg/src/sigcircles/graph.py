"""Signed graph data model, SGT text format, generators and switching.

Vertices are the integers ``0..n-1``. Edges are stored as ``(u, v, sign)``
with ``u < v``, sorted lexicographically; an edge id is the index of the edge
in that order. Signs are the integers ``+1`` and ``-1``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

PLUS = 1
MINUS = -1

Edge = tuple[int, int, int]


class GraphError(ValueError):
    """Invalid graph data (bad vertex, loop, duplicate edge, bad parameters)."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def parse_sign(token: str) -> int:
    """Accept ``+``/``-`` and a few spelled-out aliases."""
    t = token.strip().lower()
    if t in ("+", "+1", "1", "pos", "positive", "plus"):
        return PLUS
    if t in ("-", "-1", "−", "neg", "negative", "minus"):
        return MINUS
    raise GraphError(f"bad sign token {token!r}")


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = []
        for u, v, s in self.edges:
            if s not in (PLUS, MINUS):
                raise GraphError(f"edge {u}-{v}: sign must be +1 or -1, got {s!r}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {u}-{v}: vertex out of range [0, {self.n})")
            if u == v:
                raise GraphError(f"edge {u}-{v}: loop")
            norm.append((min(u, v), max(u, v), s))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a[:2] == b[:2]:
                raise GraphError(f"edge {a[0]}-{a[1]}: duplicate edge")
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]], sign: int = PLUS) -> "SignedGraph":
        return cls(n, tuple((u, v, sign) for u, v in pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {(u, v): i for i, (u, v, _) in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """``adjacency[v]`` lists ``(neighbour, edge id)`` pairs, sorted by neighbour."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v, _) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(w for w, _ in a) for a in self.adjacency)

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tuple(s for _, _, s in self.edges)

    @cached_property
    def negative_mask(self) -> int:
        """Bit ``i`` set iff edge ``i`` is negative."""
        mask = 0
        for i, (_, _, s) in enumerate(self.edges):
            if s < 0:
                mask |= 1 << i
        return mask

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, _ in self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise GraphError(f"no edge {u}-{v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def sign(self, eid: int) -> int:
        return self.edges[eid][2]

    def edge_label(self, eid: int) -> str:
        u, v, _ = self.edges[eid]
        return f"{u}-{v}"

    def underlying(self) -> "SignedGraph":
        """The same graph with every edge positive."""
        return SignedGraph(self.n, tuple((u, v, PLUS) for u, v, _ in self.edges))

    def with_signs(self, signs: Sequence[int]) -> "SignedGraph":
        if len(signs) != self.m:
            raise GraphError(f"expected {self.m} signs, got {len(signs)}")
        return SignedGraph(self.n, tuple((u, v, s) for (u, v, _), s in zip(self.edges, signs)))

    def without_edges(self, eids: Iterable[int]) -> "SignedGraph":
        """Delete edges; vertices are kept, remaining edges are renumbered."""
        drop = set(eids)
        return SignedGraph(self.n, tuple(e for i, e in enumerate(self.edges) if i not in drop))

    def without_vertices(self, vs: Iterable[int]) -> "SignedGraph":
        """Delete the edges at ``vs``; the vertices stay as isolated points so labels are stable."""
        drop = set(vs)
        return SignedGraph(self.n, tuple(e for e in self.edges if e[0] not in drop and e[1] not in drop))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for r in range(self.n):
            if seen[r]:
                continue
            seen[r] = True
            comp, stack = [r], [r]
            while stack:
                x = stack.pop()
                for w in self.neighbors[x]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def __str__(self) -> str:
        return render_sgt(self).strip().replace("\n", "; ")


def parse_signed_graph(text: str) -> SignedGraph:
    """Parse SGT text: ``#`` comments, header ``n m``, then ``m`` lines ``u v s``."""
    header = None
    edges: list[Edge] = []
    seen: dict[tuple[int, int], int] = {}
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(lineno, "header must be 'n m'")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(lineno, "header must contain two integers") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative count in header")
            header = (n, m, lineno)
            continue
        if len(parts) != 3:
            raise ParseError(lineno, "edge line must be 'u v s'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, "vertex is not an integer") from None
        if parts[2] not in ("+", "-"):
            raise ParseError(lineno, f"bad sign token {parts[2]!r}")
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range [0, {n})")
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key[0]}-{key[1]} (first on line {seen[key]})")
        seen[key] = lineno
        edges.append((key[0], key[1], PLUS if parts[2] == "+" else MINUS))
    if header is None:
        raise ParseError(len(lines) + 1, "missing header")
    if len(edges) != header[1]:
        raise ParseError(header[2], f"header announces {header[1]} edges, found {len(edges)}")
    return SignedGraph(header[0], tuple(edges))


def render_sgt(g: SignedGraph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v} {sign_char(s)}" for u, v, s in g.edges)
    return "\n".join(out) + "\n"


# -- generators -------------------------------------------------------------

def _ints(arg: str, count: int | None, family: str) -> list[int]:
    try:
        vals = [int(x) for x in arg.split(",")] if arg else []
    except ValueError:
        raise GraphError(f"{family}: parameters must be integers, got {arg!r}") from None
    if count is not None and len(vals) != count:
        raise GraphError(f"{family}: expected {count} parameter(s), got {arg!r}")
    return vals


def family_pairs(family: str, rng: random.Random | None = None) -> tuple[int, list[tuple[int, int]]]:
    """Vertex count and edge list for a family spec such as ``kn:4`` or ``theta:1,2,2``."""
    name, _, arg = family.partition(":")
    name = name.strip().lower()
    if name == "kn":
        (n,) = _ints(arg, 1, name)
        if n < 1:
            raise GraphError("kn: need n >= 1")
        return n, list(combinations(range(n), 2))
    if name == "krs":
        r, s = _ints(arg, 2, name)
        if r < 1 or s < 1:
            raise GraphError("krs: need r, s >= 1")
        return r + s, [(i, r + j) for i in range(r) for j in range(s)]
    if name == "cycle":
        (n,) = _ints(arg, 1, name)
        if n < 3:
            raise GraphError("cycle: need n >= 3")
        return n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    if name == "path":
        (n,) = _ints(arg, 1, name)
        if n < 1:
            raise GraphError("path: need n >= 1")
        return n, [(i, i + 1) for i in range(n - 1)]
    if name == "theta":
        lens = _ints(arg, 3, name)
        if min(lens) < 1 or sorted(lens)[1] < 2:
            raise GraphError("theta: path lengths must be >= 1 with at most one of length 1")
        # terminals 0 and 1; internal vertices numbered consecutively
        pairs, nxt = [], 2
        for k in lens:
            prev = 0
            for _ in range(k - 1):
                pairs.append((prev, nxt))
                prev = nxt
                nxt += 1
            pairs.append((prev, 1))
        return nxt, pairs
    if name == "gnp":
        try:
            n_s, p_s = arg.split(",")
            n, p = int(n_s), float(p_s)
        except ValueError:
            raise GraphError(f"gnp: expected 'gnp:n,p', got {family!r}") from None
        if n < 0 or not 0.0 <= p <= 1.0:
            raise GraphError("gnp: need n >= 0 and 0 <= p <= 1")
        rng = rng or random.Random(0)
        return n, [e for e in combinations(range(n), 2) if rng.random() < p]
    raise GraphError(f"unknown graph family {family!r}")


def signing_signs(signing: str, m: int, rng: random.Random) -> list[int]:
    """Signs for ``m`` edges in edge-id order.

    ``random:p`` draws ``rng.random() < p`` once per edge, in edge-id order, from a
    :class:`random.Random` seeded with the generator seed.
    """
    name, _, arg = signing.partition(":")
    name = name.strip().lower()
    if name in ("all-plus", "plus", "+"):
        return [PLUS] * m
    if name in ("all-minus", "minus", "-"):
        return [MINUS] * m
    if name == "list":
        toks = arg.replace(",", "")
        if len(toks) != m or any(c not in "+-" for c in toks):
            raise GraphError(f"list signing needs exactly {m} '+'/'-' characters")
        return [PLUS if c == "+" else MINUS for c in toks]
    if name == "random":
        try:
            p = float(arg)
        except ValueError:
            raise GraphError(f"random signing needs a probability, got {arg!r}") from None
        if not 0.0 <= p <= 1.0:
            raise GraphError("random signing probability must lie in [0, 1]")
        return [MINUS if rng.random() < p else PLUS for _ in range(m)]
    raise GraphError(f"unknown signing {signing!r}")


def generate_graph(family: str, signing: str = "all-plus", seed: int | None = None) -> SignedGraph:
    """Build a signed graph from a family spec and a signing spec.

    One ``random.Random(seed)`` stream serves both the structure (``gnp``) and a
    ``random:p`` signing, so a fixed seed gives a fixed graph.
    """
    rng = random.Random(0 if seed is None else seed)
    n, pairs = family_pairs(family, rng)
    base = SignedGraph.from_pairs(n, pairs)
    return base.with_signs(signing_signs(signing, base.m, rng))


def apply_switching(g: SignedGraph, x: Iterable[int]) -> SignedGraph:
    xs = set(x)
    for v in xs:
        if not 0 <= v < g.n:
            raise GraphError(f"switching vertex {v} out of range [0, {g.n})")
    return SignedGraph(g.n, tuple((u, v, -s if (u in xs) != (v in xs) else s) for u, v, s in g.edges))


def negate_all(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, tuple((u, v, -s) for u, v, s in g.edges))


@dataclass(frozen=True)
class SwitchingSet:
    vertices: frozenset[int] = field(default_factory=frozenset)

    def __xor__(self, other: "SwitchingSet") -> "SwitchingSet":
        return SwitchingSet(self.vertices ^ other.vertices)

    def apply(self, g: SignedGraph) -> SignedGraph:
        return apply_switching(g, self.vertices)


def to_networkx(g: SignedGraph, vertices: Iterable[int] | None = None):
    """Underlying graph as a :class:`networkx.Graph`; edges carry ``sign`` and ``eid``."""
    import networkx as nx

    keep = set(range(g.n)) if vertices is None else set(vertices)
    h = nx.Graph()
    h.add_nodes_from(sorted(keep))
    for i, (u, v, s) in enumerate(g.edges):
        if u in keep and v in keep:
            h.add_edge(u, v, sign=s, eid=i)
    return h


def vertex_connectivity(g: SignedGraph, vertices: Iterable[int] | None = None, edges: Iterable[int] | None = None) -> int:
    """Vertex connectivity of the underlying graph (restricted to ``vertices``/``edges`` if given)."""
    import networkx as nx

    h = to_networkx(g, vertices)
    if edges is not None:
        keep = set(edges)
        h.remove_edges_from([(u, v) for u, v, d in h.edges(data=True) if d["eid"] not in keep])
    if h.number_of_nodes() == 0:
        return 0
    return nx.node_connectivity(h)
