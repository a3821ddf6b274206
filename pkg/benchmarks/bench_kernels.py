"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]
"""
import argparse
import json
import random
import time
from itertools import combinations

from sigcircles import _pykernels

try:
    from sigcircles import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def complete_adj(n):
    return [[w for w in range(n) if w != v] for v in range(n)]


def random_signed(n, p, seed):
    rng = random.Random(seed)
    pairs = [e for e in combinations(range(n), 2) if rng.random() < p]
    return [u for u, _ in pairs], [v for _, v in pairs], [rng.choice((1, -1)) for _ in pairs]


def cases():
    for n in (7, 8, 9):
        yield f"simple_cycles K{n}", "simple_cycles", (n, complete_adj(n), 0, 10**7)
    for n in (8, 9):
        yield f"hamiltonian_cycles K{n}", "hamiltonian_cycles", (n, complete_adj(n), 10**7)
    for n in (14, 16, 18):
        eu, ev, es = random_signed(n, 0.5, n)
        yield f"min_switching n={n} m={len(eu)}", "min_switching", (n, eu, ev, es)


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = []
    for name, kernel, inputs in cases():
        py_t, py_out = best_of(getattr(_pykernels, kernel), inputs, args.repeat)
        row = {"case": name, "python_s": round(py_t, 4), "cython_s": None, "speedup": None}
        if _ckernels is not None:
            c_t, c_out = best_of(getattr(_ckernels, kernel), inputs, args.repeat)
            if kernel != "min_switching":
                c_out, py_out = sorted(map(tuple, c_out)), sorted(map(tuple, py_out))
            if c_out != py_out:
                raise SystemExit(f"{name}: backends disagree")
            row.update(cython_s=round(c_t, 4), speedup=round(py_t / c_t, 1) if c_t else None)
        rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'case':<32} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for r in rows:
        c = "-" if r["cython_s"] is None else f"{r['cython_s']:.4f}"
        s = "-" if r["speedup"] is None else f"{r['speedup']}x"
        print(f"{r['case']:<32} {r['python_s']:>10.4f} {c:>10} {s:>8}")


if __name__ == "__main__":
    main()
