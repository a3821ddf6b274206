"""Command-line interface.

Every subcommand reads one signed graph, either an SGT file (``--input``) or a
generator spec (``--gen FAMILY --sign SIGNING [--seed N]``), and prints a human
summary or, with ``--json``, a JSON document. Exit status: 0 on success, 1 when
the question has no answer (infeasible cover, realization or decomposition), 2 on
invalid input or an exhausted budget.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .balance import balancing_edges, balancing_vertices, blocks, is_balanced
from .census import iter_census_rows, vector_set_and_dimension
from .circles import (
    DEFAULT_CIRCLE_BUDGET,
    Circle,
    enumerate_circles,
    negative_circle_vector,
    read_circle_set,
    realize_circle_set,
    verify_theta_criterion,
)
from .corpus import structured_fixtures
from .errors import BudgetExceeded
from .graph import GraphError, SignedGraph, generate_graph, parse_sign, parse_signed_graph, render_sgt, sign_char
from .incidence import CONJECTURES, Subject, conjecture_report, edge_profile, pair_common_circle, parse_subject, vertex_profile
from .optimization import (
    DEFAULT_CLASS_BUDGET,
    DEFAULT_NODE_BUDGET,
    bounds_report,
    cover_circles,
    decompose_into_circles,
    frustration,
    pack_circles,
)
from .structure import circle_bridges, hamiltonian_sign_survey, removal_connectivity, removal_scan, s1_exception_record


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _load_graph(args) -> SignedGraph:
    if args.input and args.gen:
        raise UsageError("give either --input or --gen, not both")
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            return parse_signed_graph(fh.read())
    if args.gen:
        return generate_graph(args.gen, args.sign, args.seed)
    raise UsageError("an input graph is required: --input FILE or --gen SPEC")


def _append_log(path: str | None, records) -> None:
    if not path:
        return
    with open(path, "a", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")


# -- subcommands ------------------------------------------------------------
# Each returns (exit code, json payload, human text).

def cmd_balance(g, args):
    rep = is_balanced(g)
    data = rep.to_json()
    data["balancing_edges"] = [g.edge_label(e) for e in balancing_edges(g)]
    data["balancing_vertices"] = list(balancing_vertices(g))
    if rep.balanced:
        text = "balanced; marking " + " ".join(sign_char(s) for s in rep.marking)
    else:
        text = f"unbalanced; witness {rep.witness.label}"
        if data["balancing_edges"]:
            text += "\nbalancing edges: " + ", ".join(data["balancing_edges"])
        if data["balancing_vertices"]:
            text += "\nbalancing vertices: " + ", ".join(map(str, data["balancing_vertices"]))
    return 0, data, text


def cmd_blocks(g, args):
    bd = blocks(g)
    rep = is_balanced(g)
    data = {**rep.to_json(), **bd.to_json()}
    lines = [f"{len(bd.blocks)} block(s); cut vertices {list(bd.cut_vertices)}; isthmi {[g.edge_label(e) for e in bd.isthmi]}"]
    for b in bd.blocks:
        state = "balanced" if b.balanced else "unbalanced"
        lines.append(f"  {state:<10} vertices {list(b.vertices)} edges {[g.edge_label(e) for e in b.edges]}")
    return 0, data, "\n".join(lines)


def cmd_circles(g, args):
    sign = parse_sign(args.circle_sign) if args.circle_sign else None
    cs = enumerate_circles(g, sign=sign, chordless=args.chordless, length_max=args.length_max, budget=args.budget)
    data = {"count": len(cs), "circles": [c.to_json() for c in cs]}
    text = "\n".join([f"{len(cs)} circle(s)"] + [f"  {c.label} {sign_char(c.sign)}" for c in cs])
    return 0, data, text


def cmd_vector(g, args):
    vec = negative_circle_vector(g, budget=args.budget)
    data = {"lengths": list(range(3, g.n + 1)), "vector": list(vec)}
    text = "c- = (" + ", ".join(map(str, vec)) + ")"
    return 0, data, text


def cmd_realize(g, args):
    if not args.circles:
        raise UsageError("realize needs --circles FILE")
    with open(args.circles, encoding="utf-8") as fh:
        b = read_circle_set(g, fh.read())
    check = verify_theta_criterion(g, b, budget=args.budget)
    sig = realize_circle_set(g, b, budget=args.budget)
    data = {
        "feasible": sig is not None,
        "signature": None if sig is None else render_sgt(sig),
        "theta": check.to_json(),
    }
    if sig is None:
        text = "infeasible"
        if check.violating_theta:
            text += ": theta violation " + " / ".join(c.label for c in check.violating_theta)
        return 1, data, text
    return 0, data, "feasible\n" + render_sgt(sig).rstrip()


def cmd_profile(g, args):
    if args.pair:
        a, b = (parse_subject(g, x) for x in args.pair)
        want = parse_sign(args.want)
        c = pair_common_circle(g, a, b, want, budget=args.budget)
        data = {"pair": list(args.pair), "want": sign_char(want), "circle": None if c is None else c.label}
        return 0, data, f"{args.pair[0]} & {args.pair[1]} ({sign_char(want)}): {'none' if c is None else c.label}"
    subjects: list[Subject] = []
    if args.edge:
        subjects += [parse_subject(g, x) for x in args.edge]
    if args.vertex:
        subjects += [parse_subject(g, str(x)) for x in args.vertex]
    if not subjects:
        subjects = [Subject("edge", e) for e in range(g.m)] + [Subject("vertex", v) for v in range(g.n)]
    profs = []
    for s in subjects:
        fn = edge_profile if s.kind == "edge" else vertex_profile
        profs.append(fn(g, s.index, budget=args.budget))
    data = {"profiles": [p.to_json() for p in profs]}
    head = f"{'subject':<8} {'in-':>4} {'in+':>4} {'1!-':>4} {'1!+':>4} {'only-':>6} {'only+':>6}"
    rows = [head]
    yn = {True: "y", False: "."}
    for p in profs:
        rows.append(
            f"{p.subject:<8} {yn[p.in_negative]:>4} {yn[p.in_positive]:>4} {yn[p.unique_negative]:>4} "
            f"{yn[p.unique_positive]:>4} {yn[p.only_negative]:>6} {yn[p.only_positive]:>6}"
        )
    return 0, data, "\n".join(rows)


def cmd_frustration(g, args):
    fr = frustration(g, max_classes=args.classes)
    data = fr.to_json()
    data["edge_witness"] = [g.edge_label(e) for e in fr.edge_witness]
    text = (
        f"frustration index l = {fr.index} (delete {data['edge_witness']})\n"
        f"frustration number l0 = {fr.number} (delete {list(fr.vertex_witness)})"
    )
    if args.bounds:
        data["bounds"] = bounds_report(g, budget=args.budget)
        b = data["bounds"]
        text += (
            f"\nvertex-disjoint negative packing {b['vertex_packing_negative']} vs l0 {b['frustration_number']}"
            f" ({'equal' if b['vertex_equality'] else 'strict'})"
            f"\nedge-disjoint negative packing {b['edge_packing_negative']} vs l {b['frustration_index']}"
            f" ({'equal' if b['edge_equality'] else 'strict'})"
        )
    return 0, data, text


def cmd_pack(g, args):
    res = pack_circles(g, args.disjoint, parse_sign(args.circle_sign or "-"), budget=args.budget,
                       node_budget=args.nodes, seconds=args.timeout)
    return 0, res.to_json(), f"{res.size} {args.disjoint}-disjoint circle(s): " + ", ".join(c.label for c in res.circles)


def cmd_cover(g, args):
    res = cover_circles(g, args.target, parse_sign(args.circle_sign or "-"), budget=args.budget,
                        node_budget=args.nodes, seconds=args.timeout)
    data = res.to_json(g)
    if not res.feasible:
        return 1, data, "infeasible; uncovered " + ", ".join(map(str, data["infeasible_subjects"]))
    return 0, data, f"{res.size} circle(s): " + ", ".join(c.label for c in res.circles)


def cmd_decompose(g, args):
    res = decompose_into_circles(g, parse_sign(args.circle_sign or "-"), budget=args.budget,
                                 node_budget=args.nodes, seconds=args.timeout)
    data = res.to_json()
    if res.status == "feasible":
        return 0, data, "feasible: " + ", ".join(c.label for c in res.parts)
    text = f"{res.status.upper()}: {res.obstruction}"
    return 1, data, text


def cmd_census(g, args):
    if args.csv:
        width = max(g.n - 2, 0)
        lines = ["class," + ",".join(f"c{l}" for l in range(3, 3 + width))]
        for label, vec in iter_census_rows(g, max_classes=args.classes, budget=args.budget):
            lines.append(label + "," + ",".join(map(str, vec)))
        return 0, None, "\n".join(lines)
    rep = vector_set_and_dimension(g, max_classes=args.classes, budget=args.budget)
    data = rep.to_json()
    lines = [f"{rep.class_count} switching class(es); affine dimension {rep.affine_dimension}"]
    for l, vals in rep.spectra.items():
        lines.append(f"  c{l}: {vals}")
    return 0, data, "\n".join(lines)


def cmd_survey(g, args):
    sv = hamiltonian_sign_survey(g, budget=args.budget)
    if sv.exception:
        _append_log(args.log, [s1_exception_record(g, sv)])
    text = f"{sv.classification}: {sv.negative_count} negative, {sv.positive_count} positive Hamiltonian circle(s)"
    if sv.exception:
        text += " [S1 exception]"
    return 0, sv.to_json(), text


def _circle_arg(g, args) -> Circle:
    if not args.circle:
        raise UsageError("--circle is required")
    return Circle.parse(g, args.circle)


def cmd_bridges(g, args):
    rep = circle_bridges(g, _circle_arg(g, args))
    data = rep.to_json(g)
    lines = [f"circle {rep.circle.label}: {len(rep.chords)} chord(s) {data['chords']}, {len(rep.bridges)} bridge(s)"]
    for b in rep.bridges:
        lines.append(f"  attachments {list(b.attachments)} internal {list(b.internal)} edges {[g.edge_label(e) for e in b.edges]}")
    return 0, data, "\n".join(lines)


def cmd_removal(g, args):
    if args.scan:
        sign = None if args.scan == "any" else parse_sign(args.scan)
        data = removal_scan(g, sign, budget=args.budget)
        lines = []
        for side in ("edge_removal", "vertex_removal"):
            lines.append(side + ": " + ", ".join(f"{k}={v or '-'}" for k, v in data[side].items()))
        return 0, data, "\n".join(lines)
    rc = removal_connectivity(g, _circle_arg(g, args))
    return 0, rc.to_json(), f"{rc.circle.label}: G-E(C) {rc.edge_removal}; G-V(C) {rc.vertex_removal}"


def cmd_conjectures(g, args):
    ids = args.id or list(CONJECTURES)
    reps = [conjecture_report(g, cid, budget=args.budget) for cid in ids]
    data = {"reports": [r.to_json() for r in reps]}
    _append_log(args.log, data["reports"])
    lines = []
    for r in reps:
        state = "agree" if r.agrees else f"DISAGREE at {r.counterexample}"
        lines.append(f"{r.conjecture:<12} {'' if r.applicable else '(n/a) '}{state}")
    return 0, data, "\n".join(lines)


def _sweep_item(item):
    name, sgt, budget = item
    g = parse_signed_graph(sgt)
    results = {}
    for cid in CONJECTURES:
        r = conjecture_report(g, cid, budget=budget)
        results[cid] = {"applicable": r.applicable, "agrees": r.agrees, "counterexample": r.counterexample}
    sv = hamiltonian_sign_survey(g, budget=budget)
    return name, sgt, results, sv


def _parse_range(text: str) -> range:
    a, _, b = text.partition(":")
    try:
        return range(int(a), int(b)) if b else range(int(a), int(a) + 1)
    except ValueError:
        raise UsageError(f"bad seed range {text!r}; use A:B") from None


def cmd_sweep(args):
    from .census import iter_signatures

    items = []
    for spec in args.gen or []:
        if args.all_classes:
            base = generate_graph(spec, "all-plus")
            for label, sg in iter_signatures(base, max_classes=args.classes):
                items.append((f"{spec} class {label or '(tree)'}", render_sgt(sg), args.budget))
        else:
            for seed in _parse_range(args.seeds):
                items.append((f"{spec} {args.sign} seed={seed}", render_sgt(generate_graph(spec, args.sign, seed)), args.budget))
    if args.fixtures:
        items += [(name, render_sgt(g), args.budget) for name, g in structured_fixtures()]
    if not items:
        raise UsageError("sweep needs --gen SPEC and/or --fixtures")
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            outcomes = list(pool.map(_sweep_item, items))
    else:
        outcomes = [_sweep_item(it) for it in items]
    disagreements = {cid: 0 for cid in CONJECTURES}
    first: dict = {}
    exceptions = 0
    records = []
    for name, sgt, results, sv in outcomes:
        records.append({"kind": "conjectures", "instance": name, "graph": sgt, "results": results,
                        "s1": sv.to_json()})
        for cid, r in results.items():
            if not r["agrees"]:
                disagreements[cid] += 1
                first.setdefault(cid, {"instance": name, "counterexample": r["counterexample"]})
        if sv.exception:
            exceptions += 1
            rec = s1_exception_record(parse_signed_graph(sgt), sv)
            rec["instance"] = name
            records.append(rec)
    _append_log(args.log, records)
    data = {"instances": len(outcomes), "disagreements": disagreements, "first_counterexamples": first,
            "s1_exceptions": exceptions}
    lines = [f"{len(outcomes)} instance(s); {exceptions} S1 exception(s)"]
    for cid in CONJECTURES:
        extra = f" first: {first[cid]['instance']} at {first[cid]['counterexample']}" if cid in first else ""
        lines.append(f"  {cid:<12} {disagreements[cid]} disagreement(s){extra}")
    return 0, data, "\n".join(lines)


COMMANDS = {
    "balance": (cmd_balance, "balance test with witness; balancing edges and vertices"),
    "blocks": (cmd_blocks, "blocks with balance flags (E1, V1, V2, EP5)"),
    "circles": (cmd_circles, "enumerate circles with sign / chordless filters"),
    "vector": (cmd_vector, "negative circle vector (CN)"),
    "realize": (cmd_realize, "realize a prescribed negative-circle set (Problem 1)"),
    "profile": (cmd_profile, "edge/vertex circle-membership profiles (E, EP, V, VP)"),
    "frustration": (cmd_frustration, "frustration index and number (P1, P5-8 bounds with --bounds)"),
    "pack": (cmd_pack, "maximum disjoint circle packing (P1-P8)"),
    "cover": (cmd_cover, "minimum circle cover (C1-C8)"),
    "decompose": (cmd_decompose, "decomposition into circles of one sign (D1, D2)"),
    "census": (cmd_census, "switching-class census: spectra and affine dimension (CN1-CN3)"),
    "survey": (cmd_survey, "Hamiltonian circle sign survey (S1)"),
    "bridges": (cmd_bridges, "chords and bridges of a circle (S3)"),
    "removal": (cmd_removal, "connectivity after removing a circle (S2)"),
    "conjectures": (cmd_conjectures, "conjecture reports (E2, E5, V4, VP4)"),
    "sweep": (None, "run the conjecture harness over generated instances"),
}


def _common(multi_gen: bool) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--input", "-i", metavar="FILE", help="SGT file")
    src.add_argument("--gen", metavar="SPEC", action="append" if multi_gen else "store",
                     help="kn:n, krs:r,s, cycle:n, path:n, theta:a,b,c, gnp:n,p")
    src.add_argument("--sign", default="all-plus", metavar="SPEC", help="all-plus, all-minus, list:+-.., random:p")
    src.add_argument("--seed", type=int, default=None)
    out = common.add_argument_group("output and budgets")
    out.add_argument("--json", action="store_true", help="emit JSON")
    out.add_argument("--length-max", type=int, default=None, metavar="L")
    out.add_argument("--budget", type=int, default=DEFAULT_CIRCLE_BUDGET, metavar="N", help="circle cap")
    out.add_argument("--classes", type=int, default=DEFAULT_CLASS_BUDGET, metavar="N", help="switching-class cap")
    out.add_argument("--nodes", type=int, default=DEFAULT_NODE_BUDGET, metavar="N", help="search-node cap")
    out.add_argument("--timeout", type=float, default=60.0, metavar="S", help="soft wall-time limit for searches")
    out.add_argument("--threads", type=int, default=1, metavar="T")
    out.add_argument("--log", metavar="FILE", help="append line-delimited JSON records")
    opt = common.add_argument_group("selection")
    opt.add_argument("--circle-sign", metavar="+|-", help="restrict to circles of this sign")
    opt.add_argument("--chordless", action="store_true")
    opt.add_argument("--circles", metavar="FILE", help="circle-set file, one circle per line (realize)")
    opt.add_argument("--edge", action="append", metavar="U-V")
    opt.add_argument("--vertex", action="append", type=int, metavar="V")
    opt.add_argument("--pair", nargs=2, metavar=("A", "B"), help="two subjects (U-V or V) for a common circle")
    opt.add_argument("--want", default="-", metavar="+|-")
    opt.add_argument("--disjoint", choices=("vertex", "edge"), default="vertex")
    opt.add_argument("--target", choices=("vertices", "edges"), default="vertices")
    opt.add_argument("--bounds", action="store_true", help="add packing/cover bound report")
    opt.add_argument("--csv", action="store_true", help="census rows as CSV")
    opt.add_argument("--circle", metavar="0-1-2", help="circle as a vertex cycle")
    opt.add_argument("--scan", metavar="+|-|any", help="removal: scan all circles of a sign")
    opt.add_argument("--id", action="append", choices=CONJECTURES)
    return common


def build_parser() -> argparse.ArgumentParser:
    single, multi = _common(False), _common(True)
    parser = argparse.ArgumentParser(prog="sigcircles", description="Exact circle computations on small signed graphs.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[multi if name == "sweep" else single], help=help_)
        if name == "sweep":
            p.add_argument("--all-classes", action="store_true", help="every switching class of each --gen graph")
            p.add_argument("--seeds", default="0:10", metavar="A:B")
            p.add_argument("--fixtures", action="store_true", help="include the structured fixture corpus")
    return parser


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "sweep":
            code, data, text = cmd_sweep(args)
        else:
            g = _load_graph(args)
            code, data, text = COMMANDS[args.command][0](g, args)
    except (UsageError, GraphError, BudgetExceeded, ValueError, OSError) as exc:
        if getattr(args, "json", False):
            stdout.write(_dump({"error": str(exc)}) + "\n")
        stderr.write(f"error: {exc}\n")
        return 2
    if args.json and data is not None:
        stdout.write(_dump(data) + "\n")
    else:
        stdout.write(text + "\n")
    return code


def main(argv=None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
