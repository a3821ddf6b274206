"""Which edges and vertices lie on negative or positive circles.

Flags come from exhaustive circle enumeration. Membership in a negative circle
is also computed from the block structure (an element lies on a negative circle
exactly when it lies in an unbalanced block) and the two answers are compared.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .balance import balanced_on, balancing_edges, blocks, is_balanced, is_two_connected
from .circles import DEFAULT_CIRCLE_BUDGET, Circle, enumerate_circles
from .graph import MINUS, PLUS, GraphError, SignedGraph, render_sgt, vertex_connectivity

CONJECTURES = ("E5", "V4", "VP4-theorem", "E2-3conn", "EP2-3conn", "E2-nobal")

# Elements on no circle are not "only negative"/"only positive".
NO_CIRCLE_CONVENTION = "elements on no circle have only_negative = only_positive = false"


@dataclass(frozen=True)
class Subject:
    kind: str  # "edge" or "vertex"
    index: int

    def label(self, g: SignedGraph) -> str:
        return g.edge_label(self.index) if self.kind == "edge" else str(self.index)

    def on(self, c: Circle) -> bool:
        return (c.edge_mask if self.kind == "edge" else c.vertex_mask) >> self.index & 1 == 1


def parse_subject(g: SignedGraph, text: str) -> Subject:
    """``"u-v"`` names an edge, a bare integer names a vertex."""
    text = text.strip()
    try:
        if "-" in text:
            u, v = (int(x) for x in text.split("-"))
            return Subject("edge", g.edge_id(u, v))
        v = int(text)
    except ValueError:
        raise GraphError(f"cannot read subject {text!r}") from None
    if not 0 <= v < g.n:
        raise GraphError(f"unknown vertex {v}")
    return Subject("vertex", v)


@dataclass(frozen=True)
class IncidenceProfile:
    subject: str
    kind: str
    in_negative: bool
    in_positive: bool
    unique_negative: bool
    unique_positive: bool
    only_negative: bool
    only_positive: bool
    structural_in_negative: bool
    negative_witnesses: tuple[Circle, ...] = ()
    positive_witnesses: tuple[Circle, ...] = ()

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "kind": self.kind,
            "flags": {
                "in_negative": self.in_negative,
                "in_positive": self.in_positive,
                "unique_negative": self.unique_negative,
                "unique_positive": self.unique_positive,
                "only_negative": self.only_negative,
                "only_positive": self.only_positive,
            },
            "structural_in_negative": self.structural_in_negative,
            "witnesses": {
                "negative": [c.label for c in self.negative_witnesses],
                "positive": [c.label for c in self.positive_witnesses],
            },
        }


def _profile(g: SignedGraph, subj: Subject, budget: int) -> IncidenceProfile:
    through = [c for c in enumerate_circles(g, budget=budget) if subj.on(c)]
    neg = [c for c in through if c.sign == MINUS]
    pos = [c for c in through if c.sign == PLUS]
    bd = blocks(g)
    if subj.kind == "edge":
        structural = not bd.block_of_edge(subj.index).balanced
    else:
        structural = any(not b.balanced for b in bd.blocks_of_vertex(subj.index))
    if structural != bool(neg):
        raise AssertionError(f"block law disagrees with enumeration at {subj.label(g)}")
    return IncidenceProfile(
        subject=subj.label(g),
        kind=subj.kind,
        in_negative=bool(neg),
        in_positive=bool(pos),
        unique_negative=len(neg) == 1,
        unique_positive=len(pos) == 1,
        only_negative=bool(neg) and not pos,
        only_positive=bool(pos) and not neg,
        structural_in_negative=structural,
        negative_witnesses=tuple(neg[:2]),
        positive_witnesses=tuple(pos[:2]),
    )


def edge_profile(g: SignedGraph, e: int, budget: int = DEFAULT_CIRCLE_BUDGET) -> IncidenceProfile:
    if not 0 <= e < g.m:
        raise GraphError(f"unknown edge id {e}")
    return _profile(g, Subject("edge", e), budget)


def vertex_profile(g: SignedGraph, v: int, budget: int = DEFAULT_CIRCLE_BUDGET) -> IncidenceProfile:
    if not 0 <= v < g.n:
        raise GraphError(f"unknown vertex {v}")
    return _profile(g, Subject("vertex", v), budget)


def pair_common_circle(
    g: SignedGraph, a: Subject, b: Subject, want: int, budget: int = DEFAULT_CIRCLE_BUDGET
) -> Circle | None:
    """First circle (in enumeration order) of sign ``want`` through both subjects."""
    if a == b:
        raise GraphError("pair subjects must differ")
    for s in (a, b):
        limit = g.m if s.kind == "edge" else g.n
        if not 0 <= s.index < limit:
            raise GraphError(f"unknown {s.kind} {s.index}")
    for c in enumerate_circles(g, sign=want, budget=budget):
        if a.on(c) and b.on(c):
            return c
    return None


# -- conjecture harness -----------------------------------------------------

@dataclass(frozen=True)
class ConjectureReport:
    conjecture: str
    instance: str
    applicable: bool
    oracle_set: tuple[str, ...]
    predicted_set: tuple[str, ...]
    counterexample: str | None
    metadata: dict = field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        return self.oracle_set == self.predicted_set

    def to_json(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "instance": self.instance,
            "applicable": self.applicable,
            "oracle_set": list(self.oracle_set),
            "predicted_set": list(self.predicted_set),
            "agrees": self.agrees,
            "counterexample": self.counterexample,
            "metadata": self.metadata,
        }


def _report(g, cid, applicable, oracle, predicted, order, label, metadata) -> ConjectureReport:
    oracle_l = tuple(label(x) for x in sorted(oracle, key=order))
    pred_l = tuple(label(x) for x in sorted(predicted, key=order))
    diff = sorted(set(oracle) ^ set(predicted), key=order)
    return ConjectureReport(
        conjecture=cid,
        instance=render_sgt(g).strip().replace("\n", "; "),
        applicable=applicable,
        oracle_set=oracle_l,
        predicted_set=pred_l,
        counterexample=label(diff[0]) if diff else None,
        metadata=metadata,
    )


def _pair_sets(g: SignedGraph, sign: int, budget: int) -> set[tuple[int, int]]:
    pairs = set()
    for c in enumerate_circles(g, sign=sign, budget=budget):
        pairs.update(combinations(c.edges, 2))
    return pairs


def conjecture_report(g: SignedGraph, cid: str, budget: int = DEFAULT_CIRCLE_BUDGET) -> ConjectureReport:
    """Compare an enumeration oracle set with the set a conjecture predicts.

    E5        edges only on negative circles  vs  isthmi plus balancing edges
    V4        vertices only on negative circles  vs  vertices lying in some
              unbalanced block, divalent and balancing in each unbalanced block
              containing them, and in no balanced block that has a circle
    VP4-theorem  vertices only on positive circles  vs  vertices on some circle
              whose blocks are all balanced
    E2-3conn  edge pairs on a common negative circle  vs  all pairs, when the
              graph is 3-connected and unbalanced
    EP2-3conn the positive analogue, when the graph is 3-connected
    E2-nobal  as E2-3conn but the hypothesis is 2-connected with no balancing edge

    When a hypothesis fails the report is marked not applicable and the
    prediction is taken to be the oracle set.
    """
    if cid not in CONJECTURES:
        raise GraphError(f"unknown conjecture id {cid!r}; expected one of {', '.join(CONJECTURES)}")
    circles = enumerate_circles(g, budget=budget)
    bd = blocks(g)
    meta: dict = {"no_circle_convention": NO_CIRCLE_CONVENTION}

    if cid in ("E5", "V4", "VP4-theorem"):
        kind = "edge" if cid == "E5" else "vertex"
        size = g.m if kind == "edge" else g.n
        neg = [False] * size
        pos = [False] * size
        for c in circles:
            flags = neg if c.sign == MINUS else pos
            for x in c.edges if kind == "edge" else c.vertices:
                flags[x] = True
        on_circle = [neg[x] or pos[x] for x in range(size)]
        order = int
        label = g.edge_label if kind == "edge" else str

        if cid == "E5":
            oracle = {e for e in range(size) if neg[e] and not pos[e]}
            predicted = set(bd.isthmi) | set(balancing_edges(g))
            applicable = g.n > 0 and len(g.components()) == 1
            vacuous = oracle | {e for e in range(size) if not on_circle[e]}
            meta["agrees_if_no_circle_counts_as_only_negative"] = vacuous == predicted
            meta["predicate"] = "isthmi and balancing edges"
            return _report(g, cid, applicable, oracle, predicted, order, label, meta)

        if cid == "V4":
            oracle = {v for v in range(size) if neg[v] and not pos[v]}
            predicted = set()
            for v in range(size):
                mine = [b for b in bd.blocks_of_vertex(v) if not b.is_isthmus]
                if not mine or any(b.balanced for b in mine):
                    continue
                ok = True
                for b in mine:
                    deg = sum(1 for e in b.edges if v in g.edges[e][:2])
                    rest = [e for e in b.edges if v not in g.edges[e][:2]]
                    if deg != 2 or not balanced_on(g, rest):
                        ok = False
                        break
                if ok:
                    predicted.add(v)
            meta["predicate"] = (
                "in an unbalanced block, divalent and balancing in every unbalanced block "
                "containing it, in no balanced block with a circle"
            )
            return _report(g, cid, True, oracle, predicted, order, label, meta)

        oracle = {v for v in range(size) if pos[v] and not neg[v]}
        predicted = {
            v for v in range(size) if on_circle[v] and all(b.balanced for b in bd.blocks_of_vertex(v))
        }
        meta["predicate"] = "on a circle and only in balanced blocks"
        return _report(g, cid, True, oracle, predicted, order, label, meta)

    two_conn = is_two_connected(g)
    kappa = vertex_connectivity(g) if two_conn else None
    three_conn = two_conn and g.n >= 4 and kappa >= 3
    unbalanced = not is_balanced(g).balanced
    meta.update({"two_connected": two_conn, "three_connected": three_conn, "unbalanced": unbalanced})
    if cid == "E2-3conn":
        sign, applicable = MINUS, three_conn and unbalanced
    elif cid == "EP2-3conn":
        sign, applicable = PLUS, three_conn
    else:
        sign = MINUS
        no_bal = unbalanced and not balancing_edges(g)
        meta["has_balancing_edge"] = unbalanced and not no_bal
        applicable = two_conn and no_bal
    oracle = _pair_sets(g, sign, budget)
    predicted = set(combinations(range(g.m), 2)) if applicable else set(oracle)

    def label(p):
        return f"{g.edge_label(p[0])}/{g.edge_label(p[1])}"

    return _report(g, cid, applicable, oracle, predicted, tuple, label, meta)
