import pytest
from hypothesis import given

from conftest import graph_and_switching, signed_graphs
from sigcircles.circles import negative_circle_vector
from sigcircles.census import (
    affine_dimension,
    circle_count_spectrum,
    class_count,
    cotree_edges,
    enumerate_signatures,
    iter_census_rows,
    signature_from_label,
    vector_set_and_dimension,
)
from sigcircles.errors import BudgetExceeded
from sigcircles.graph import MINUS, PLUS, SignedGraph, apply_switching, generate_graph


def test_class_counts():
    assert len(enumerate_signatures(generate_graph("kn:3"))) == 2
    assert len(enumerate_signatures(generate_graph("cycle:4"))) == 2
    assert len(enumerate_signatures(generate_graph("kn:4"))) == 8
    two = SignedGraph.from_pairs(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert class_count(two) == 4 == len(enumerate_signatures(two))


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_signatures(generate_graph("kn:6"), max_classes=100)


def test_spectrum_examples():
    assert circle_count_spectrum(generate_graph("kn:3"), 3) == [0, 1]
    assert circle_count_spectrum(generate_graph("kn:4"), 3) == [0, 2, 4]
    assert circle_count_spectrum(generate_graph("cycle:4"), 4) == [0, 1]
    with pytest.raises(ValueError):
        circle_count_spectrum(generate_graph("kn:4"), 5)


def test_vector_set_examples():
    r = vector_set_and_dimension(generate_graph("kn:3"))
    assert r.vector_set == [(0,), (1,)] and r.affine_dimension == 1
    assert vector_set_and_dimension(generate_graph("kn:4")).affine_dimension == 2
    assert vector_set_and_dimension(generate_graph("krs:2,3")).affine_dimension == 1


def test_affine_dimension():
    assert affine_dimension([]) == 0
    assert affine_dimension([(1, 2)]) == 0
    assert affine_dimension([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_dimension([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2


def _all_signature_vectors(g):
    vecs = set()
    for mask in range(2 ** g.m):
        vecs.add(negative_circle_vector(g.with_signs([MINUS if mask >> i & 1 else PLUS for i in range(g.m)])))
    return vecs


@pytest.mark.parametrize("family", ["kn:3", "cycle:4", "kn:4", "theta:1,2,2"])
def test_classes_agree_with_all_signatures(family):
    g = generate_graph(family)
    r = vector_set_and_dimension(g)
    assert set(r.vector_set) == _all_signature_vectors(g)


def test_witnesses_reevaluate():
    g = generate_graph("kn:5")
    r = vector_set_and_dimension(g)
    assert r.class_count == 64
    for v, label in r.vector_witnesses.items():
        assert negative_circle_vector(signature_from_label(g, label)) == v
    for length, table in r.spectrum_witnesses.items():
        for value, label in table.items():
            assert negative_circle_vector(signature_from_label(g, label))[length - 3] == value
    assert r.affine_dimension == 3


@given(signed_graphs(n_max=6))
def test_census_rows_match_direct_count(g):
    rows = list(iter_census_rows(g))
    assert len(rows) == class_count(g)
    labels = [lab for lab, _ in rows]
    assert len(set(labels)) == len(labels)
    for label, vec in rows:
        sig = signature_from_label(g, label)
        assert negative_circle_vector(sig) == vec
        assert all(sig.sign(e) == PLUS for e in range(g.m) if e not in cotree_edges(g))
    assert affine_dimension(v for _, v in rows) <= max(g.n - 2, 0)


@given(signed_graphs(n_max=6))
def test_every_signature_is_switching_equivalent_to_a_representative(g):
    reps = {tuple(s.signs) for s in enumerate_signatures(g)}
    # switch g so the forest is positive; the result must be one of the representatives
    from sigcircles.circles import spanning_forest

    parent, pedge, _ = spanning_forest(g)
    flip = set()
    sgn = [0] * g.n
    order = sorted(range(g.n), key=lambda v: _depth(parent, v))
    for v in order:
        if parent[v] < 0:
            sgn[v] = 1
        else:
            sgn[v] = sgn[parent[v]] * g.sign(pedge[v])
        if sgn[v] < 0:
            flip.add(v)
    assert tuple(apply_switching(g, flip).signs) in reps


def _depth(parent, v):
    d = 0
    while parent[v] >= 0:
        v = parent[v]
        d += 1
    return d


@given(graph_and_switching(n_max=8))
def test_vector_invariant_under_sampled_switching(gx):
    g, x = gx
    assert negative_circle_vector(g) == negative_circle_vector(apply_switching(g, x))


def test_label_errors():
    with pytest.raises(ValueError):
        signature_from_label(generate_graph("kn:4"), "+-")
    with pytest.raises(ValueError):
        signature_from_label(generate_graph("kn:4"), "+x+")
