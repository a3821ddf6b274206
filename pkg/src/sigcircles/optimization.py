"""Exact frustration index/number, circle packing, covering and decomposition.

Packing, covering and decomposition search the explicit list of circles of the
requested sign. Circles are ordered by their sorted edge ids, and every search
returns the lexicographically least optimal witness in that order.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from . import kernels
from .balance import balanced_on, is_balanced
from .circles import DEFAULT_CIRCLE_BUDGET, Circle, enumerate_circles
from .errors import BudgetExceeded
from .graph import MINUS, GraphError, SignedGraph, sign_char

DEFAULT_CLASS_BUDGET = 2**22
DEFAULT_NODE_BUDGET = 10**7


class _Clock:
    """Search-node counter with an optional wall-time limit."""

    def __init__(self, nodes: int, seconds: float | None):
        self.left = nodes
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("search node budget exhausted")
        if self.deadline is not None and self.left % 4096 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("search wall-time budget exhausted")


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


# -- frustration ------------------------------------------------------------

@dataclass(frozen=True)
class FrustrationResult:
    index: int
    number: int
    edge_witness: tuple[int, ...]
    vertex_witness: tuple[int, ...]
    switching: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "number": self.number,
            "edge_witness": list(self.edge_witness),
            "vertex_witness": list(self.vertex_witness),
            "switching": list(self.switching),
        }


def frustration_index(g: SignedGraph, max_classes: int = DEFAULT_CLASS_BUDGET) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """``(l, edge witness, switching set)``.

    ``l`` is the least number of negative edges over all switchings; the
    negative edges of a minimising switching form a minimum balancing edge set.
    """
    if g.n > 1 and 2 ** (g.n - 1) > max_classes:
        raise BudgetExceeded(f"2^{g.n - 1} switchings exceed the class budget {max_classes}")
    eu = [u for u, _, _ in g.edges]
    ev = [v for _, v, _ in g.edges]
    count, flags, mask = kernels.min_switching(g.n, eu, ev, list(g.signs))
    witness = tuple(e for e, f in enumerate(flags) if f)
    return count, witness, tuple(_bits(mask))


def frustration_number(g: SignedGraph) -> tuple[int, tuple[int, ...]]:
    """``(l0, vertex witness)`` by vertex subsets of increasing size, in lexicographic order."""
    rep = is_balanced(g)
    if rep.balanced:
        return 0, ()
    hit = set(rep.witness.vertices)
    incident = [set() for _ in range(g.n)]
    for e, (u, v, _) in enumerate(g.edges):
        incident[u].add(e)
        incident[v].add(e)
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if hit.isdisjoint(combo):
                continue
            dropped = set().union(*(incident[v] for v in combo))
            if balanced_on(g, (e for e in range(g.m) if e not in dropped)):
                return k, combo
    raise AssertionError("deleting every vertex must balance")


def frustration(g: SignedGraph, max_classes: int = DEFAULT_CLASS_BUDGET) -> FrustrationResult:
    index, ew, sw = frustration_index(g, max_classes)
    number, vw = frustration_number(g)
    return FrustrationResult(index, number, ew, vw, sw)


# -- packing ----------------------------------------------------------------

@dataclass(frozen=True)
class PackingResult:
    disjoint: str
    sign: int
    size: int
    circles: tuple[Circle, ...]

    def to_json(self) -> dict:
        return {
            "disjoint": self.disjoint,
            "sign": sign_char(self.sign),
            "size": self.size,
            "circles": [c.label for c in self.circles],
        }


def _candidates(g: SignedGraph, sign: int, circles, budget: int) -> list[Circle]:
    pool = enumerate_circles(g, budget=budget) if circles is None else circles
    return sorted((c for c in pool if c.sign == sign), key=lambda c: c.edges)


def _check_mode(disjoint: str, choices: tuple[str, ...]) -> None:
    if disjoint not in choices:
        raise GraphError(f"mode must be one of {choices}, got {disjoint!r}")


def pack_circles(
    g: SignedGraph,
    disjoint: str = "vertex",
    sign: int = MINUS,
    circles=None,
    budget: int = DEFAULT_CIRCLE_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
    seconds: float | None = None,
) -> PackingResult:
    """Maximum set of pairwise vertex- or edge-disjoint circles of one sign.

    Depth-first branch and bound over the candidate list. A greedy packing seeds
    the bound; subtrees are cut when the number of remaining compatible
    candidates, or the free elements they cover divided by the shortest
    candidate length, cannot beat the incumbent.
    """
    _check_mode(disjoint, ("vertex", "edge"))
    cand = _candidates(g, sign, circles, budget)
    masks = [c.vertex_mask if disjoint == "vertex" else c.edge_mask for c in cand]
    if not cand:
        return PackingResult(disjoint, sign, 0, ())
    used = 0
    greedy = 0
    for mk in masks:
        if not mk & used:
            used |= mk
            greedy += 1
    best: list = [greedy - 1, None]
    clock = _Clock(node_budget, seconds)
    chosen: list[int] = []

    def search(start: int, used: int):
        clock.tick()
        if len(chosen) > best[0]:
            best[0] = len(chosen)
            best[1] = list(chosen)
        free = [i for i in range(start, len(cand)) if not masks[i] & used]
        if not free:
            return
        union = 0
        shortest = 1 << 30
        for i in free:
            union |= masks[i]
            shortest = min(shortest, _popcount(masks[i]))
        if len(chosen) + min(len(free), _popcount(union) // shortest) <= best[0]:
            return
        for pos, i in enumerate(free):
            if len(chosen) + len(free) - pos <= best[0]:
                break
            chosen.append(i)
            search(i + 1, used | masks[i])
            chosen.pop()

    search(0, 0)
    return PackingResult(disjoint, sign, best[0], tuple(cand[i] for i in best[1]))


# -- covering ---------------------------------------------------------------

@dataclass(frozen=True)
class CoverResult:
    target: str
    sign: int
    size: int | None
    circles: tuple[Circle, ...]
    infeasible_subjects: tuple[int, ...] = ()

    @property
    def feasible(self) -> bool:
        return not self.infeasible_subjects

    def to_json(self, g: SignedGraph | None = None) -> dict:
        subj = list(self.infeasible_subjects)
        if g is not None and self.target == "edges":
            subj = [g.edge_label(e) for e in subj]
        return {
            "target": self.target,
            "sign": sign_char(self.sign),
            "feasible": self.feasible,
            "size": self.size,
            "circles": [c.label for c in self.circles],
            "infeasible_subjects": subj,
        }


def cover_circles(
    g: SignedGraph,
    target: str = "vertices",
    sign: int = MINUS,
    circles=None,
    budget: int = DEFAULT_CIRCLE_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
    seconds: float | None = None,
) -> CoverResult:
    """Minimum number of circles of one sign covering every vertex (or edge).

    Iterative deepening on the cover size from a counting lower bound; within
    one size the search runs in lexicographic order, so the first cover found
    is the least one.
    """
    _check_mode(target, ("vertices", "edges"))
    cand = _candidates(g, sign, circles, budget)
    masks = [c.vertex_mask if target == "vertices" else c.edge_mask for c in cand]
    universe = (1 << (g.n if target == "vertices" else g.m)) - 1
    reach = 0
    for mk in masks:
        reach |= mk
    missing = universe & ~reach
    if missing:
        return CoverResult(target, sign, None, (), tuple(_bits(missing)))
    if universe == 0:
        return CoverResult(target, sign, 0, ())
    last = {}
    for i, mk in enumerate(masks):
        for x in _bits(mk):
            last[x] = i
    widest = max(_popcount(mk) for mk in masks)
    clock = _Clock(node_budget, seconds)
    chosen: list[int] = []

    def search(start: int, covered: int, slots: int) -> bool:
        clock.tick()
        rest = universe & ~covered
        if not rest:
            return True
        if slots == 0 or _popcount(rest) > slots * widest:
            return False
        for x in _bits(rest):
            if last[x] < start:
                return False
        for i in range(start, len(cand)):
            if not masks[i] & rest:
                continue
            chosen.append(i)
            if search(i + 1, covered | masks[i], slots - 1):
                return True
            chosen.pop()
        return False

    k = -(-_popcount(universe) // widest)
    while not search(0, 0, k):
        k += 1
    return CoverResult(target, sign, len(chosen), tuple(cand[i] for i in chosen))


# -- decomposition ----------------------------------------------------------

@dataclass(frozen=True)
class DecompositionResult:
    sign: int
    status: str  # "feasible", "infeasible" or "undecided"
    parts: tuple[Circle, ...] = ()
    obstruction: str | None = None
    detail: dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"

    def to_json(self) -> dict:
        return {
            "sign": sign_char(self.sign),
            "feasible": self.feasible,
            "status": self.status,
            "parts": [c.label for c in self.parts],
            "obstruction": self.obstruction,
            "detail": self.detail,
        }


def decompose_into_circles(
    g: SignedGraph,
    sign: int = MINUS,
    circles=None,
    budget: int = DEFAULT_CIRCLE_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
    seconds: float | None = None,
) -> DecompositionResult:
    """Partition the edges into circles of one sign.

    Odd degree rules a partition out immediately. Otherwise the lowest uncovered
    edge is branched on, trying the circles through it in order. A search cut
    short by the node or time budget is reported as ``undecided``.
    """
    for v in range(g.n):
        if g.degree(v) % 2:
            return DecompositionResult(sign, "infeasible", obstruction="odd-degree vertex", detail={"vertex": v})
    if g.m == 0:
        return DecompositionResult(sign, "feasible")
    try:
        cand = _candidates(g, sign, circles, budget)
    except BudgetExceeded as exc:
        return DecompositionResult(sign, "undecided", obstruction="search-exhausted", detail={"reason": str(exc)})
    through: list[list[int]] = [[] for _ in range(g.m)]
    for i, c in enumerate(cand):
        for e in c.edges:
            through[e].append(i)
    bare = [e for e in range(g.m) if not through[e]]
    if bare:
        return DecompositionResult(
            sign, "infeasible", obstruction="no-circle-partition", detail={"edge_on_no_circle": g.edge_label(bare[0])}
        )
    full = (1 << g.m) - 1
    clock = _Clock(node_budget, seconds)
    chosen: list[int] = []

    def search(used: int) -> bool:
        clock.tick()
        if used == full:
            return True
        rest = full & ~used
        e = (rest & -rest).bit_length() - 1
        for i in through[e]:
            if cand[i].edge_mask & used:
                continue
            chosen.append(i)
            if search(used | cand[i].edge_mask):
                return True
            chosen.pop()
        return False

    try:
        found = search(0)
    except BudgetExceeded as exc:
        return DecompositionResult(sign, "undecided", obstruction="search-exhausted", detail={"reason": str(exc)})
    if not found:
        return DecompositionResult(sign, "infeasible", obstruction="no-circle-partition")
    return DecompositionResult(sign, "feasible", tuple(cand[i] for i in chosen))


# -- bounds -----------------------------------------------------------------

def bounds_report(g: SignedGraph, budget: int = DEFAULT_CIRCLE_BUDGET) -> dict:
    """Negative packings against l0 and l, plus the four cover minima (``None`` when infeasible)."""
    circles = enumerate_circles(g, budget=budget)
    fr = frustration(g)
    pv = pack_circles(g, "vertex", MINUS, circles).size
    pe = pack_circles(g, "edge", MINUS, circles).size
    covers = {}
    for target in ("vertices", "edges"):
        for s in (MINUS, 1):
            covers[f"{target}{sign_char(s)}"] = cover_circles(g, target, s, circles).size
    return {
        "vertex_packing_negative": pv,
        "frustration_number": fr.number,
        "vertex_equality": pv == fr.number,
        "edge_packing_negative": pe,
        "frustration_index": fr.index,
        "edge_equality": pe == fr.index,
        "vertex_packing_positive": pack_circles(g, "vertex", 1, circles).size,
        "edge_packing_positive": pack_circles(g, "edge", 1, circles).size,
        "cover_minima": covers,
    }
