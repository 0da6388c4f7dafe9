"""Command-line interface.

Exit codes: 0 found/ok, 1 none found (or a verification failure),
2 input or usage error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from . import fixtures
from .formats import GraphDocument, emit_edge_list, emit_graph6, read_graph
from .graph_core import Graph
from .kstructure import check_structure_claims, grow_k_structure
from .oracle import OracleBoundExceeded, enumerate_simplicial_cliques, verify_theorem
from .recognizers import (
    Hole,
    Obstruction,
    ObstructionKind,
    SearchBudgetExceeded,
    chordal_elimination_order,
    enumerate_holes,
    find_claw,
    find_clean_obstruction,
    has_even_hole,
)
from .simplicial import EdgeDome, SimplicialCliqueResult, find_simplicial_clique

SCHEMA = 1
EXIT_OK, EXIT_NONE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def fmt_set(vertices: Iterable[int]) -> str:
    """``{0..6}`` style: runs of three or more collapse to ``a..b``."""
    vs = sorted(vertices)
    parts, i = [], 0
    while i < len(vs):
        j = i
        while j + 1 < len(vs) and vs[j + 1] == vs[j] + 1:
            j += 1
        if j - i >= 2:
            parts.append(f"{vs[i]}..{vs[j]}")
        else:
            parts.extend(str(v) for v in vs[i : j + 1])
        i = j + 1
    return "{" + ",".join(parts) + "}"


def describe_obstruction(obs: Obstruction) -> str:
    if obs.kind is ObstructionKind.CLAW:
        return f"claw, centre {obs.roles['centre']}, leaves {fmt_set(obs.roles['leaves'])}"
    return f"{obs.kind.value} on {fmt_set(obs.vertices)}"


def obstruction_json(obs: Obstruction | None):
    if obs is None:
        return None
    roles = {k: (list(v) if isinstance(v, tuple) else v) for k, v in obs.roles.items()}
    return {"kind": obs.kind.value, "vertices": sorted(obs.vertices), "roles": roles}


def result_json(res: SimplicialCliqueResult | None):
    if res is None:
        return None
    p = res.provenance
    prov = (
        {"type": "edge-dome", "edge": [p.a, p.b]}
        if isinstance(p, EdgeDome)
        else {"type": "simplicial-vertex", "vertex": p.v}
    )
    return {"clique": sorted(res.clique), "provenance": prov}


def describe_result(res: SimplicialCliqueResult) -> str:
    p = res.provenance
    via = f"dome of edge ({p.a},{p.b})" if isinstance(p, EdgeDome) else f"simplicial vertex {p.v}"
    return f"clique {fmt_set(res.clique)} via {via}"


def _sniff_format(path: str | None, data: bytes) -> str:
    if path and path != "-":
        suffix = Path(path).suffix.lower()
        if suffix in (".g6", ".graph6"):
            return "graph6"
        if suffix in (".txt", ".edges", ".el", ".edgelist"):
            return "edges"
    body = data.strip()
    if body.startswith(b">>graph6<<") or (body and b"\n" not in body and b" " not in body):
        return "graph6"
    return "edges"


def load(args) -> GraphDocument:
    path = args.input
    try:
        if path is None or path == "-":
            data = sys.stdin.buffer.read()
        else:
            data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    fmt = args.format or _sniff_format(path, data)
    try:
        return read_graph(data, fmt)
    except (ValueError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot parse {path or 'stdin'} as {fmt}: {exc}") from exc


def emit(out: TextIO, args, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        out.write(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, sort_keys=True))
        out.write("\n")
    else:
        for line in lines:
            out.write(line + "\n")


def cmd_find(args, out: TextIO) -> int:
    g = load(args).graph
    if g.n == 0:
        raise InputError("the null graph has no simplicial clique")
    if args.verify_clean:
        obs = find_clean_obstruction(g, budget=args.budget)
        if obs is not None:
            emit(
                out,
                args,
                {"found": False, "reason": "not clean", "obstruction": obstruction_json(obs)},
                [f"none: not clean ({describe_obstruction(obs)})"],
            )
            return EXIT_NONE
    res = find_simplicial_clique(g)
    if res is None:
        reason = "no simplicial vertex and no edge dome is a simplicial clique; the input is not clean"
        emit(out, args, {"found": False, "reason": reason}, [f"none: {reason}"])
        return EXIT_NONE
    emit(out, args, {"found": True, **result_json(res)}, [describe_result(res)])
    return EXIT_OK


def cmd_check(args, out: TextIO) -> int:
    g = load(args).graph
    claw = find_claw(g)
    even = has_even_hole(g, budget=args.budget)
    elim = chordal_elimination_order(g)
    obs = claw if claw is not None else find_clean_obstruction(g, budget=args.budget)

    def yes_no(cert: str | None) -> str:
        return "yes" if cert is None else f"NO ({cert})"

    lines = [
        "claw-free: " + yes_no(None if claw is None else describe_obstruction(claw)),
        "even-hole-free: " + yes_no(None if even is None else f"even hole {even}"),
        "chordal: " + yes_no(f"hole {elim}" if isinstance(elim, Hole) else None),
        "clean: " + yes_no(None if obs is None else describe_obstruction(obs)),
    ]
    payload = {
        "claw_free": claw is None,
        "claw": obstruction_json(claw),
        "even_hole_free": even is None,
        "even_hole": None if even is None else list(even.vertices),
        "chordal": not isinstance(elim, Hole),
        "elimination_order": None if isinstance(elim, Hole) else elim,
        "hole": list(elim.vertices) if isinstance(elim, Hole) else None,
        "clean": obs is None,
        "obstruction": obstruction_json(obs),
    }
    emit(out, args, payload, lines)
    return EXIT_OK


def cmd_holes(args, out: TextIO) -> int:
    g = load(args).graph
    holes = enumerate_holes(g, args.max_len, limit=args.limit, budget=args.budget)
    if args.json:
        emit(out, args, {"holes": [list(h.vertices) for h in holes]}, [])
    else:
        for h in holes:
            out.write(f"{h}\n")
    return EXIT_OK


def cmd_oracle(args, out: TextIO) -> int:
    g = load(args).graph
    try:
        rep = enumerate_simplicial_cliques(g, bound=args.bound)
    except OracleBoundExceeded as exc:
        raise InputError(str(exc)) from exc
    counts = rep.counts_by_size
    lines = [f"simplicial cliques: {len(rep)}"]
    lines += [f"size {s}: {c}" for s, c in counts.items()]
    lines += [fmt_set(c) for c in rep.cliques]
    payload = {
        "cliques": [sorted(c) for c in rep.cliques],
        "counts_by_size": {str(s): c for s, c in counts.items()},
    }
    emit(out, args, payload, lines)
    return EXIT_OK if len(rep) else EXIT_NONE


def cmd_verify(args, out: TextIO) -> int:
    g = load(args).graph
    if g.n == 0:
        raise InputError("the null graph is excluded")
    try:
        v = verify_theorem(g, bound=args.bound, budget=args.budget)
    except OracleBoundExceeded as exc:
        raise InputError(str(exc)) from exc
    claim_rows = []
    if v.clean:
        for h in v.holes:
            rep = check_structure_claims(g, grow_k_structure(g, h))
            claim_rows.append((h, rep))
            for fail in rep.failures():
                v.violations.append(f"hole {h}: claim {fail.name} fails at {fail.witness}")
    lines = [
        "clean: " + ("yes" if v.clean else f"NO ({describe_obstruction(v.obstruction)})"),
        f"chordal: {'yes' if v.chordal else 'NO'}",
        f"simplicial cliques: {len(v.oracle)}",
        "algorithm: " + (describe_result(v.result) if v.result else "none"),
        f"holes: {len(v.holes)}",
    ]
    for h, rep in claim_rows:
        status = "all claims pass" if rep.all_passed else "FAILED: " + ", ".join(
            f.name for f in rep.failures()
        )
        lines.append(f"k-structure on hole {h}: {status}")
    if not v.clean:
        lines.append("verdict: not clean, theorem not applicable")
    else:
        lines.append("verdict: OK" if v.ok else "verdict: VIOLATED")
    lines += [f"violation: {msg}" for msg in v.violations]
    payload = {
        "clean": v.clean,
        "chordal": v.chordal,
        "obstruction": obstruction_json(v.obstruction),
        "oracle_count": len(v.oracle),
        "result": result_json(v.result),
        "holes": [list(h.vertices) for h in v.holes],
        "claims": {
            str(h): {name: r.passed for name, r in rep.results.items()} for h, rep in claim_rows
        },
        "ok": v.ok,
        "violations": v.violations,
    }
    emit(out, args, payload, lines)
    return EXIT_OK if v.ok else EXIT_NONE


def _gen_graphs(args) -> list[Graph]:
    fam = fixtures.Family(args.family)
    need = {
        fixtures.Family.CYCLE: ("n",),
        fixtures.Family.COMPLEMENT_CYCLE: ("n",),
        fixtures.Family.CYCLE_SQUARE: ("n",),
        fixtures.Family.GK: ("k",),
        fixtures.Family.CYCLE_BLOWUP: ("sizes",),
        fixtures.Family.UNIT_INTERVAL_RANDOM: ("n",),
        fixtures.Family.REJECTION_CLEAN_RANDOM: ("n",),
    }.get(fam, ())
    for name in need:
        if getattr(args, name) is None:
            raise InputError(f"family {fam.value} needs --{name}")
    if fam is fixtures.Family.JEWEL:
        return [fixtures.jewel(args.k or 5).graph]
    if fam is fixtures.Family.LINE_WHEEL:
        return [fixtures.line_wheel(args.k or 6, args.i or 4).graph]
    if fam is fixtures.Family.SHORT_PRISM:
        return [fixtures.short_prism(args.t or 2).graph]
    if fam is fixtures.Family.SEVEN_ANTIHOLE:
        return [fixtures.seven_antihole().graph]
    if fam is fixtures.Family.UNIT_INTERVAL_RANDOM:
        return [
            fixtures.random_unit_interval(args.n, args.density, args.seed + j)
            for j in range(args.count)
        ]
    if fam is fixtures.Family.REJECTION_CLEAN_RANDOM:
        out = []
        for j in range(args.count):
            g, tries = fixtures.random_clean(args.n, args.edge_prob, args.seed + j, args.max_tries)
            if g is None:
                sys.stderr.write(f"random-clean: no clean sample in {tries} tries (seed {args.seed + j})\n")
            else:
                out.append(g)
        return out
    params = {
        "n": args.n,
        "k": args.k,
        "sizes": [int(s) for s in args.sizes.split(",")] if args.sizes else None,
    }
    return [fixtures.FixtureSpec(fam, {k: v for k, v in params.items() if v is not None}).build()]


def cmd_gen(args, out: TextIO) -> int:
    try:
        graphs = _gen_graphs(args)
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from exc
    fmt = args.format or "graph6"
    chunks = []
    for g in graphs:
        chunks.append(emit_graph6(g).decode("ascii") + "\n" if fmt == "graph6" else emit_edge_list(g))
    text = "".join(chunks)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK if graphs else EXIT_NONE


def bench_rows(
    sizes: Sequence[int], family: str = "unit-interval", density: float = 0.1, seed: int = 0
) -> list[tuple[int, int, float]]:
    """Time :func:`find_simplicial_clique` on one generated graph per size."""
    rows = []
    for n in sizes:
        if family == "unit-interval":
            g = fixtures.random_unit_interval(n, density, seed)
        elif family == "cycle-blowup":
            base, extra = divmod(n, 5)
            g = fixtures.cycle_blowup([base + (j < extra) for j in range(5)])
        else:
            raise ValueError(f"unknown bench family {family!r}")
        t0 = time.perf_counter()
        res = find_simplicial_clique(g)
        elapsed = time.perf_counter() - t0
        if res is None:
            raise AssertionError(f"no simplicial clique on a clean bench graph (n={n})")
        rows.append((g.n, g.m, elapsed))
    return rows


def cmd_bench(args, out: TextIO) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",")]
        rows = bench_rows(sizes, args.family, args.density, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    dest = open(args.output, "w", newline="") if args.output else out
    try:
        w = csv.writer(dest, lineterminator="\n")
        w.writerow(["n", "m", "seconds"])
        for n, m, sec in rows:
            w.writerow([n, m, f"{sec:.6f}"])
    finally:
        if args.output:
            dest.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cleangraphs", description="Simplicial cliques in clean graphs."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1, help="worker threads (only 1 is used)")
    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--input", "-i", help="input file, '-' or omitted for stdin")
    graph_in.add_argument("--format", choices=("graph6", "edges"))
    graph_in.add_argument("--budget", type=int, default=None, help="search-node budget")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("find", parents=[common, graph_in], help="find a simplicial clique")
    f.add_argument("--verify-clean", action="store_true", help="refuse unclean input")
    sub.add_parser("check", parents=[common, graph_in], help="report class membership")
    h = sub.add_parser("holes", parents=[common, graph_in], help="list holes")
    h.add_argument("--max-len", type=int)
    h.add_argument("--limit", type=int, help="maximum number of holes to emit")
    o = sub.add_parser("oracle", parents=[common, graph_in], help="brute-force simplicial cliques")
    o.add_argument("--bound", type=int, default=20)
    v = sub.add_parser("verify", parents=[common, graph_in], help="brute-force theorem check")
    v.add_argument("--bound", type=int, default=20)

    gp = sub.add_parser("gen", parents=[common], help="write a fixture graph")
    gp.add_argument("family", choices=[fam.value for fam in fixtures.Family])
    gp.add_argument("--n", type=int)
    gp.add_argument("--k", type=int)
    gp.add_argument("--i", type=int)
    gp.add_argument("--t", type=int)
    gp.add_argument("--sizes", help="comma-separated class sizes for cycle-blowup")
    gp.add_argument("--density", type=float, default=0.1)
    gp.add_argument("--edge-prob", type=float, default=0.3)
    gp.add_argument("--max-tries", type=int, default=100)
    gp.add_argument("--count", type=int, default=1)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--format", choices=("graph6", "edges"))
    gp.add_argument("--output", "-o")

    b = sub.add_parser("bench", parents=[common], help="time find on generated graphs")
    b.add_argument("--family", default="unit-interval", choices=("unit-interval", "cycle-blowup"))
    b.add_argument("--sizes", default="50,100,200,400")
    b.add_argument("--density", type=float, default=0.1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--output", "-o", help="CSV destination (default stdout)")
    return p


COMMANDS = {
    "find": cmd_find,
    "check": cmd_check,
    "holes": cmd_holes,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def run_command(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except SearchBudgetExceeded as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run_command())
