from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from conftest import signed_graphs
from oracles import brute_circle_signs, nx_graph, parity_balanced
from sigcircles.corpus import bowtie
from sigcircles.graph import MINUS, PLUS, GraphError, SignedGraph, generate_graph
from sigcircles.incidence import (
    CONJECTURES,
    Subject,
    conjecture_report,
    edge_profile,
    pair_common_circle,
    parse_subject,
    vertex_profile,
)

FLAGS = ("in_negative", "in_positive", "unique_negative", "unique_positive", "only_negative", "only_positive")


def _flags(p):
    return {k: getattr(p, k) for k in FLAGS}


def _brute_flags(signs):
    neg = signs.count(MINUS)
    pos = signs.count(PLUS)
    return {
        "in_negative": neg > 0,
        "in_positive": pos > 0,
        "unique_negative": neg == 1,
        "unique_positive": pos == 1,
        "only_negative": neg > 0 and pos == 0,
        "only_positive": pos > 0 and neg == 0,
    }


@given(signed_graphs(n_max=7))
def test_profiles_match_brute_force(g):
    circles = brute_circle_signs(g)
    for e, (u, v, _) in enumerate(g.edges):
        p = edge_profile(g, e)
        assert _flags(p) == _brute_flags([s for c, s in circles.items() if (u, v) in c])
        assert p.structural_in_negative == p.in_negative
        assert len(p.negative_witnesses) <= 2 and all(w.sign == MINUS for w in p.negative_witnesses)
    for x in range(g.n):
        p = vertex_profile(g, x)
        assert _flags(p) == _brute_flags([s for c, s in circles.items() if any(x in pr for pr in c)])
        assert p.structural_in_negative == p.in_negative
        if p.unique_negative:
            assert p.in_negative
        if p.only_negative:
            assert not p.in_positive


@given(signed_graphs(n_max=7))
def test_only_positive_iff_balanced_block_with_circle(g):
    from sigcircles.balance import blocks

    bd = blocks(g)
    for e in range(g.m):
        b = bd.block_of_edge(e)
        assert edge_profile(g, e).only_positive == (b.balanced and not b.is_isthmus)


def test_profile_examples():
    k3 = generate_graph("kn:3", "all-minus")
    p = edge_profile(k3, 0)
    assert p.in_negative and p.unique_negative and not p.in_positive
    bt = bowtie(PLUS, MINUS)
    p = edge_profile(bt, bt.edge_id(0, 1))
    assert not p.in_negative and p.only_positive
    c4 = generate_graph("cycle:4", "list:-+++")
    for e in range(4):
        p = edge_profile(c4, e)
        assert p.only_negative and p.unique_negative
    k4 = generate_graph("kn:4", "all-minus")
    for v in range(4):
        p = vertex_profile(k4, v)
        assert p.in_negative and p.in_positive
    assert vertex_profile(bowtie(), 2).only_negative
    iso = SignedGraph(4, ((0, 1, -1), (1, 2, -1), (0, 2, -1)))
    assert not any(_flags(vertex_profile(iso, 3)).values())
    pendant = SignedGraph(4, ((0, 1, -1), (1, 2, -1), (0, 2, -1), (2, 3, 1)))
    assert not any(_flags(edge_profile(pendant, 3)).values())
    assert not any(_flags(vertex_profile(pendant, 3)).values())


def test_profile_errors():
    k3 = generate_graph("kn:3")
    with pytest.raises(GraphError):
        edge_profile(k3, 3)
    with pytest.raises(GraphError):
        vertex_profile(k3, -1)
    with pytest.raises(GraphError):
        parse_subject(k3, "0-5")
    with pytest.raises(GraphError):
        parse_subject(k3, "x")
    assert parse_subject(k3, "2-1") == Subject("edge", 2)
    assert parse_subject(k3, "1") == Subject("vertex", 1)


def test_pair_examples():
    k4 = generate_graph("kn:4", "all-minus")
    a, b = parse_subject(k4, "0-1"), parse_subject(k4, "2-3")
    assert pair_common_circle(k4, a, b, MINUS) is None
    c = pair_common_circle(k4, a, b, PLUS)
    assert c.label == "0-1-2-3" and c.sign == PLUS
    k3 = generate_graph("kn:3", "all-minus")
    assert pair_common_circle(k3, Subject("vertex", 0), Subject("vertex", 1), MINUS).label == "0-1-2"
    with pytest.raises(GraphError):
        pair_common_circle(k3, Subject("vertex", 0), Subject("vertex", 0), MINUS)
    with pytest.raises(GraphError):
        pair_common_circle(k3, Subject("vertex", 0), Subject("edge", 9), MINUS)


@given(signed_graphs(n_max=6))
def test_pairs_match_brute_force(g):
    circles = brute_circle_signs(g)
    for e, f in combinations(range(g.m), 2):
        pe, pf = g.pairs[e], g.pairs[f]
        for want in (MINUS, PLUS):
            expect = any(s == want and pe in c and pf in c for c, s in circles.items())
            got = pair_common_circle(g, Subject("edge", e), Subject("edge", f), want)
            assert (got is not None) == expect
            if got is not None:
                assert got.sign == want and e in got.edges and f in got.edges


def test_conjecture_examples():
    c4 = generate_graph("cycle:4", "list:-+++")
    r = conjecture_report(c4, "E5")
    assert r.agrees and r.oracle_set == r.predicted_set == ("0-1", "0-3", "1-2", "2-3")
    r = conjecture_report(bowtie(PLUS, MINUS), "VP4-theorem")
    assert r.agrees and r.oracle_set == ("0", "1")
    r = conjecture_report(generate_graph("kn:4", "all-minus"), "E2-3conn")
    assert r.applicable and not r.agrees
    assert r.counterexample == "0-1/2-3"
    assert r.metadata["three_connected"]
    with pytest.raises(GraphError):
        conjecture_report(c4, "E9")


def _brute_balancing_edges(g):
    return {g.edge_label(e) for e in range(g.m)
            if parity_balanced(g.n, [x for i, x in enumerate(g.edges) if i != e])}


@given(signed_graphs(n_min=1, n_max=7))
def test_conjecture_reports_consistent(g):
    circles = brute_circle_signs(g)
    for cid in CONJECTURES:
        r = conjecture_report(g, cid)
        assert r.agrees == (r.oracle_set == r.predicted_set)
        assert (r.counterexample is None) == r.agrees
        if not r.applicable and cid in ("E2-3conn", "EP2-3conn", "E2-nobal"):
            assert r.agrees
        js = r.to_json()
        assert js["agrees"] == r.agrees and js["conjecture"] == cid
    # E5 oracle: edges only on negative circles; prediction: isthmi plus balancing edges
    r = conjecture_report(g, "E5")
    only_neg = {g.edge_label(e) for e in range(g.m)
                if _brute_flags([s for c, s in circles.items() if g.pairs[e] in c])["only_negative"]}
    assert set(r.oracle_set) == only_neg
    h = nx_graph(g)
    isthmi = {f"{min(u, v)}-{max(u, v)}" for u, v in nx.bridges(h)}
    balancing = _brute_balancing_edges(g) if not parity_balanced(g.n, g.edges) else set()
    assert set(r.predicted_set) == isthmi | balancing
    # EP2 oracle: pairs on a common positive circle
    r = conjecture_report(g, "EP2-3conn")
    if not r.applicable:
        expect = {f"{g.edge_label(e)}/{g.edge_label(f)}" for e, f in combinations(range(g.m), 2)
                  if any(s == PLUS and g.pairs[e] in c and g.pairs[f] in c for c, s in circles.items())}
        assert set(r.oracle_set) == expect


def test_disagreement_is_produced_and_serialized(tmp_path):
    import json

    r = conjecture_report(generate_graph("kn:4", "all-minus"), "E2-3conn")
    log = tmp_path / "log.jsonl"
    log.write_text(json.dumps(r.to_json()) + "\n")
    back = json.loads(log.read_text())
    assert back["agrees"] is False and back["counterexample"] == "0-1/2-3"
