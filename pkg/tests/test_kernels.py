import os
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import signed_graphs
from sigcircles import _pykernels, kernels
from sigcircles.errors import BudgetExceeded
from sigcircles.graph import generate_graph

ckernels = pytest.importorskip("sigcircles._ckernels")
BACKENDS = [_pykernels, ckernels]


def _args(g):
    return g.n, [list(a) for a in g.neighbors]


@given(signed_graphs(n_max=8))
def test_backends_agree_on_cycles(g):
    n, adj = _args(g)
    assert _pykernels.simple_cycles(n, adj, 0, 10**6) == ckernels.simple_cycles(n, adj, 0, 10**6)
    assert _pykernels.simple_cycles(n, adj, 4, 10**6) == ckernels.simple_cycles(n, adj, 4, 10**6)


@given(signed_graphs(n_max=8))
def test_backends_agree_on_hamiltonian(g):
    n, adj = _args(g)
    assert _pykernels.hamiltonian_cycles(n, adj, 10**6) == ckernels.hamiltonian_cycles(n, adj, 10**6)


@given(signed_graphs(n_max=9))
def test_backends_agree_on_switching(g):
    eu = [u for u, _, _ in g.edges]
    ev = [v for _, v, _ in g.edges]
    es = list(g.signs)
    assert _pykernels.min_switching(g.n, eu, ev, es) == ckernels.min_switching(g.n, eu, ev, es)


@pytest.mark.parametrize("mod", BACKENDS)
@pytest.mark.parametrize("family, count, ham", [("kn:4", 7, 3), ("kn:5", 37, 12), ("kn:6", 197, 60), ("krs:3,3", 15, 6),
                                                  ("cycle:7", 1, 1), ("path:5", 0, 0)])
def test_known_counts(mod, family, count, ham):
    g = generate_graph(family)
    n, adj = _args(g)
    assert len(mod.simple_cycles(n, adj, 0, 10**6)) == count
    assert len(mod.hamiltonian_cycles(n, adj, 10**6)) == ham


@pytest.mark.parametrize("mod", BACKENDS)
def test_cycle_budget(mod):
    n, adj = _args(generate_graph("kn:6"))
    with pytest.raises(BudgetExceeded):
        mod.simple_cycles(n, adj, 0, 100)
    with pytest.raises(BudgetExceeded):
        mod.hamiltonian_cycles(n, adj, 10)


@pytest.mark.parametrize("mod", BACKENDS)
def test_min_switching_tiny(mod):
    assert mod.min_switching(0, [], [], []) == (0, (), 0)
    assert mod.min_switching(2, [0], [1], [-1]) == (0, (False,), 0b10)


def test_pure_backend_env():
    code = "import sigcircles.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, SIGCIRCLES_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    env.pop("SIGCIRCLES_PURE")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "cython"
