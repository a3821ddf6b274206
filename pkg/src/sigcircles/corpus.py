"""Named fixture graphs: structured families plus seeded random instances."""
from __future__ import annotations

from itertools import combinations

from .graph import MINUS, PLUS, SignedGraph, generate_graph


def bowtie(first: int = MINUS, second: int = MINUS) -> SignedGraph:
    """Triangles 0-1-2 and 2-3-4 sharing vertex 2."""
    return SignedGraph(5, ((0, 1, first), (0, 2, first), (1, 2, first), (2, 3, second), (2, 4, second), (3, 4, second)))


def petersen(signs: str = "all-plus", seed: int = 0) -> SignedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _signed(10, outer + spokes + inner, signs, seed)


def wheel(k: int, signs: str = "all-plus", seed: int = 0) -> SignedGraph:
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    return _signed(k + 1, [(0, i) for i in range(1, k + 1)] + rim, signs, seed)


def prism(signs: str = "all-plus", seed: int = 0) -> SignedGraph:
    return _signed(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)], signs, seed)


def cube(signs: str = "all-plus", seed: int = 0) -> SignedGraph:
    pairs = [(a, b) for a, b in combinations(range(8), 2) if bin(a ^ b).count("1") == 1]
    return _signed(8, pairs, signs, seed)


def _signed(n, pairs, signs, seed) -> SignedGraph:
    import random

    from .graph import signing_signs

    base = SignedGraph.from_pairs(n, pairs)
    return base.with_signs(signing_signs(signs, base.m, random.Random(seed)))


def structured_fixtures() -> list[tuple[str, SignedGraph]]:
    out = []
    for n in (3, 4, 5):
        out.append((f"kn:{n} all-minus", generate_graph(f"kn:{n}", "all-minus")))
        out.append((f"kn:{n} all-plus", generate_graph(f"kn:{n}", "all-plus")))
    out.append(("kn:3 one-minus", generate_graph("kn:3", "list:-++")))
    out.append(("kn:4 one-minus", generate_graph("kn:4", "list:-+++++")))
    out.append(("kn:6 random:0.5", generate_graph("kn:6", "random:0.5", seed=1)))
    for n in (3, 4, 5, 6, 7, 8):
        out.append((f"cycle:{n} all-minus", generate_graph(f"cycle:{n}", "all-minus")))
    out.append(("cycle:4 one-minus", generate_graph("cycle:4", "list:-+++")))
    out.append(("cycle:6 one-minus", generate_graph("cycle:6", "list:-+++++")))
    out.append(("path:5", generate_graph("path:5")))
    out.append(("krs:1,4 all-minus", generate_graph("krs:1,4", "all-minus")))
    for params, signs in (("1,2,2", "all-plus"), ("1,2,2", "list:-++++"), ("2,2,2", "all-minus"),
                          ("1,2,3", "all-minus"), ("2,3,3", "random:0.5"), ("1,3,3", "list:+-+++++")):
        out.append((f"theta:{params} {signs}", generate_graph(f"theta:{params}", signs, seed=2)))
    out.append(("bowtie --", bowtie(MINUS, MINUS)))
    out.append(("bowtie -+", bowtie(MINUS, PLUS)))
    out.append(("bowtie ++", bowtie(PLUS, PLUS)))
    out.append(("krs:2,3 all-minus", generate_graph("krs:2,3", "all-minus")))
    out.append(("krs:2,3 random:0.5", generate_graph("krs:2,3", "random:0.5", seed=3)))
    out.append(("krs:3,3 all-minus", generate_graph("krs:3,3", "all-minus")))
    out.append(("krs:3,3 random:0.4", generate_graph("krs:3,3", "random:0.4", seed=4)))
    out.append(("wheel:5 random:0.5", wheel(5, "random:0.5", seed=5)))
    out.append(("wheel:4 all-minus", wheel(4, "all-minus")))
    out.append(("prism all-minus", prism("all-minus")))
    out.append(("prism random:0.5", prism("random:0.5", seed=6)))
    out.append(("cube random:0.3", cube("random:0.3", seed=7)))
    out.append(("petersen all-minus", petersen("all-minus")))
    out.append(("petersen random:0.5", petersen("random:0.5", seed=8)))
    two = SignedGraph(7, ((0, 1, -1), (1, 2, -1), (0, 2, -1), (3, 4, 1), (4, 5, -1), (5, 6, 1), (3, 6, 1)))
    out.append(("two components", two))
    out.append(("triangle with pendant path", SignedGraph(5, ((0, 1, -1), (1, 2, 1), (0, 2, 1), (2, 3, 1), (3, 4, -1)))))
    out.append(("isolated vertex", SignedGraph(4, ((0, 1, -1), (1, 2, -1), (0, 2, -1)))))
    out.append(("empty", SignedGraph(0)))
    out.append(("single vertex", SignedGraph(1)))
    return out


def random_fixtures(count: int = 30, seed: int = 2024, n_min: int = 4, n_max: int = 10) -> list[tuple[str, SignedGraph]]:
    """``gnp`` graphs with ``random:0.5`` signings; sizes cycle through ``n_min..n_max``."""
    out = []
    span = n_max - n_min + 1
    for i in range(count):
        n = n_min + i % span
        p = 0.35 if n >= 8 else 0.5
        spec = f"gnp:{n},{p}"
        out.append((f"{spec} random:0.5 seed={seed + i}", generate_graph(spec, "random:0.5", seed=seed + i)))
    return out


def fixture_corpus() -> list[tuple[str, SignedGraph]]:
    return structured_fixtures() + random_fixtures()
