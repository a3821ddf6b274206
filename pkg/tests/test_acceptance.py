"""Acceptance criteria. A summary line per criterion is printed at the end of the run."""
import json
import os
import random
import subprocess
import sys
import time
from itertools import combinations

import networkx as nx
import pytest

from cli_cases import CASES
from oracles import deletion_frustration_index, deletion_frustration_number, parity_balanced
from sigcircles.balance import blocks, is_balanced
from sigcircles.census import circle_count_spectrum, vector_set_and_dimension
from sigcircles.circles import enumerate_circles, negative_circle_vector, realize_circle_set, verify_theta_criterion
from sigcircles.cli import run_command
from sigcircles.corpus import bowtie, fixture_corpus
from sigcircles.graph import MINUS, PLUS, SignedGraph, apply_switching, generate_graph
from sigcircles.optimization import bounds_report, decompose_into_circles, frustration, pack_circles
from sigcircles.structure import hamiltonian_sign_survey

acceptance = pytest.mark.acceptance


@acceptance(1, "balance agrees with circle signs over all signatures, n <= 5")
def test_balance_all_signatures():
    start = time.perf_counter()
    checked = 0
    for n in range(6):
        pairs = list(combinations(range(n), 2))
        for emask in range(2 ** len(pairs)):
            base = SignedGraph.from_pairs(n, [p for i, p in enumerate(pairs) if emask >> i & 1])
            circle_masks = [c.edge_mask for c in enumerate_circles(base)]
            for smask in range(2 ** base.m):
                g = base.with_signs([MINUS if smask >> e & 1 else PLUS for e in range(base.m)])
                all_positive = not any(bin(cm & smask).count("1") & 1 for cm in circle_masks)
                assert is_balanced(g).balanced == all_positive
                checked += 1
    assert checked == sum(3 ** (n * (n - 1) // 2) for n in range(6))
    assert time.perf_counter() - start < 10


@acceptance(2, "negative circle membership iff unbalanced block, fixture corpus")
def test_harary_block_law():
    corpus = fixture_corpus()
    assert len(corpus) >= 50 and all(g.n <= 10 for _, g in corpus)
    for _, g in corpus:
        neg = [c for c in enumerate_circles(g) if c.sign == MINUS]
        on_e = {e for c in neg for e in c.edges}
        on_v = {v for c in neg for v in c.vertices}
        bd = blocks(g)
        for e in range(g.m):
            assert (e in on_e) == (not bd.block_of_edge(e).balanced)
        for v in range(g.n):
            assert (v in on_v) == any(not b.balanced for b in bd.blocks_of_vertex(v))


@acceptance(3, "realizable iff theta criterion, all graphs with <= 10 circles (n <= 7)")
def test_theta_criterion():
    start = time.perf_counter()
    graphs = 0
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > 7:
            break
        g = SignedGraph.from_pairs(h.number_of_nodes(), h.edges())
        cs = enumerate_circles(g)
        if len(cs) > 10:
            continue
        graphs += 1
        for mask in range(2 ** len(cs)):
            b = [c for i, c in enumerate(cs) if mask >> i & 1]
            sig = realize_circle_set(g, b)
            assert (sig is not None) == verify_theta_criterion(g, b).holds
            if sig is not None:
                assert {c.edges for c in enumerate_circles(sig, sign=MINUS)} == {c.edges for c in b}
    assert graphs > 500
    assert time.perf_counter() - start < 60


def _check_frustration(g):
    fr = frustration(g)
    assert fr.index == deletion_frustration_index(g)
    assert fr.number == deletion_frustration_number(g)
    assert parity_balanced(g.n, [x for i, x in enumerate(g.edges) if i not in fr.edge_witness])
    assert parity_balanced(g.n, [x for x in g.edges if x[0] not in fr.vertex_witness and x[1] not in fr.vertex_witness])
    assert len(fr.edge_witness) == fr.index and len(fr.vertex_witness) == fr.number


@acceptance(4, "switching minimum equals deletion minimum")
def test_frustration_equivalence():
    for _, g in fixture_corpus():
        if g.n <= 6:
            _check_frustration(g)
    rng = random.Random(404)
    for i in range(100):
        n = rng.randint(3, 10)
        g = generate_graph(f"gnp:{n},{0.5 if n <= 6 else 0.3}", "random:0.5", seed=rng.randrange(2**31))
        _check_frustration(g)
    k4 = frustration(generate_graph("kn:4", "all-minus"))
    k3 = frustration(generate_graph("kn:3", "all-minus"))
    assert (k4.index, k4.number) == (2, 2)
    assert (k3.index, k3.number) == (1, 1)


@acceptance(5, "negative packings bounded by l0 and l; strict and equality instances")
def test_packing_bounds():
    for _, g in fixture_corpus():
        b = bounds_report(g)
        assert b["vertex_packing_negative"] <= b["frustration_number"]
        assert b["edge_packing_negative"] <= b["frustration_index"]
    k4 = bounds_report(generate_graph("kn:4", "all-minus"))
    assert not k4["vertex_equality"] and not k4["edge_equality"]
    k3 = bounds_report(generate_graph("kn:3", "all-minus"))
    assert k3["vertex_equality"] and k3["edge_equality"]


@acceptance(6, "decomposition soundness")
def test_decomposition():
    for _, g in fixture_corpus():
        for sign in (MINUS, PLUS):
            r = decompose_into_circles(g, sign)
            assert r.status != "undecided"
            if r.feasible:
                edges = sorted(e for c in r.parts for e in c.edges)
                assert edges == list(range(g.m))
                assert all(c.sign == sign for c in r.parts)
    for sign in (MINUS, PLUS):
        r = decompose_into_circles(generate_graph("kn:4", "all-minus"), sign)
        assert r.status == "infeasible" and r.obstruction == "odd-degree vertex"
    r = decompose_into_circles(bowtie(), MINUS)
    assert r.feasible and len(r.parts) == 2 and all(c.sign == MINUS for c in r.parts)


@acceptance(7, "census spectra and affine dimensions")
def test_census():
    assert circle_count_spectrum(generate_graph("kn:4"), 3) == [0, 2, 4]
    for n in (3, 4):
        assert vector_set_and_dimension(generate_graph(f"kn:{n}")).affine_dimension == n - 2
    start = time.perf_counter()
    assert vector_set_and_dimension(generate_graph("kn:5")).affine_dimension == 3
    assert time.perf_counter() - start < 60
    assert vector_set_and_dimension(generate_graph("krs:2,3")).affine_dimension == 1


@acceptance(8, "conjecture sweep over K_n classes and fixtures")
def test_sweep(tmp_path):
    import io

    log = tmp_path / "sweep.jsonl"
    out = io.StringIO()
    argv = ["sweep", "--gen", "kn:3", "--gen", "kn:4", "--gen", "kn:5", "--all-classes", "--fixtures",
            "--log", str(log), "--json"]
    assert run_command(argv, out, io.StringIO()) == 0
    summary = json.loads(out.getvalue())
    records = [json.loads(line) for line in log.read_text().splitlines()]
    per_instance = [r for r in records if r["kind"] == "conjectures"]
    assert len(per_instance) == summary["instances"] >= 2 + 8 + 64
    assert all(set(r["results"]) and all("agrees" in v for v in r["results"].values()) for r in per_instance)
    (k4,) = [r for r in per_instance if r["instance"] == "kn:4 all-minus"]
    assert k4["results"]["E2-3conn"] == {"applicable": True, "agrees": False, "counterexample": "0-1/2-3"}
    assert k4["s1"]["classification"] == "positive-only" and k4["s1"]["exception"]
    exceptions = [r for r in records if r["kind"] == "s1-exception"]
    assert exceptions and any(r["instance"] == "kn:4 all-minus" for r in exceptions)
    assert summary["s1_exceptions"] == len(exceptions)


@acceptance(9, "switching invariance over 1000 seeded pairs")
def test_switching_invariance():
    rng = random.Random(9)

    def invariants(g):
        fr = frustration(g)
        sv = hamiltonian_sign_survey(g)
        return (
            negative_circle_vector(g),
            fr.index,
            fr.number,
            pack_circles(g, "vertex", MINUS).size,
            pack_circles(g, "edge", MINUS).size,
            pack_circles(g, "vertex", PLUS).size,
            pack_circles(g, "edge", PLUS).size,
            sv.negative_count,
            sv.positive_count,
        )

    for _ in range(1000):
        n = rng.randint(4, 7)
        g = generate_graph(f"gnp:{n},0.6", "random:0.5", seed=rng.randrange(2**31))
        x = {v for v in range(n) if rng.random() < 0.5}
        assert invariants(g) == invariants(apply_switching(g, x))


@acceptance(10, "CLI JSON output byte-identical across runs")
def test_cli_determinism():
    env = dict(os.environ)
    outputs = []
    for hashseed in ("1", "2"):
        env["PYTHONHASHSEED"] = hashseed
        run = []
        for argv, code in CASES:
            p = subprocess.run([sys.executable, "-m", "sigcircles.cli", *argv, "--json"],
                               capture_output=True, env=env)
            assert p.returncode == code
            run.append(p.stdout)
        outputs.append(run)
    assert outputs[0] == outputs[1]
