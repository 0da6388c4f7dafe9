"""Acceptance criteria, one test (or parametrized family) per criterion.

Each check appends a PASS/FAIL line to the terminal summary.  Run directly
with ``python3 tests/test_acceptance.py`` or through pytest; add ``--sweep7``
for the exhaustive seven-vertex sweep.
"""

import time

import networkx as nx
import pytest

import conftest
from cleangraphs.cli import bench_rows
from cleangraphs.fixtures import (
    complement_cycle,
    cycle_square,
    g_k,
    named_fixtures,
    random_graph,
    random_unit_interval,
)
from cleangraphs.formats import emit_graph6, parse_graph6
from cleangraphs.graph_core import build_graph
from cleangraphs.oracle import enumerate_simplicial_cliques, simplicial_cliques_by_subsets
from cleangraphs.recognizers import (
    enumerate_holes,
    find_claw,
    find_simplicial_vertex,
    has_even_hole,
)
from cleangraphs.sweep import sweep

SWEEP_LIMIT_S = 120
SWEEP7_LIMIT_S = 30 * 60
CERTIFICATE_LIMIT_S = 10
BENCH_SIZES = (50, 100, 200, 400)
BENCH_LIMIT_S = 60
N_UNIT_INTERVAL = 500
N_RANDOM = 1000


def record(name, ok, detail):
    conftest.ACCEPTANCE_LINES.append((name, ok, detail))
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="session")
def sweep6():
    t0 = time.perf_counter()
    stats = sweep(6)
    return stats, time.perf_counter() - t0


def _violations(stats, check):
    n = stats.violations[check]
    return f"{n} violations" + (f", e.g. {stats.examples[check][0]}" if n else "")


def test_c1_exhaustive_theorem(sweep6):
    stats, secs = sweep6
    ok = stats.graphs == 1 + 1 + 2 + 8 + 64 + 1024 + 32768
    ok = ok and stats.violations["algorithm"] == 0 and secs < SWEEP_LIMIT_S
    record(
        "1 exhaustive n<=6",
        ok,
        f"{stats.graphs} graphs, {stats.clean} clean, {_violations(stats, 'algorithm')}, {secs:.1f}s",
    )


def test_c2_claw_free_even_hole_free_is_clean(sweep6):
    stats, _ = sweep6
    record("2 claw-free+even-hole-free => clean", stats.violations["clean_class"] == 0,
           _violations(stats, "clean_class"))


@pytest.mark.slow
def test_c1_c2_sweep7():
    t0 = time.perf_counter()
    stats = sweep(7, 7, deep=False)
    secs = time.perf_counter() - t0
    bad = stats.violations["algorithm"] + stats.violations["clean_class"]
    record(
        "1+2 exhaustive n=7",
        stats.graphs == 2**21 and bad == 0 and secs < SWEEP7_LIMIT_S,
        f"{stats.graphs} graphs, {stats.clean} clean, {bad} violations, {secs:.0f}s",
    )


def _no_oracle(g):
    return len(enumerate_simplicial_cliques(g)) == 0


CERTIFICATES = [
    ("antihole7 claw-free", lambda: find_claw(complement_cycle(7)) is None),
    ("antihole7 oracle empty", lambda: _no_oracle(complement_cycle(7))),
    ("antihole9 claw-free", lambda: find_claw(complement_cycle(9)) is None),
    ("antihole9 oracle empty", lambda: _no_oracle(complement_cycle(9))),
    ("cycle_square9 no 4-hole", lambda: has_no_c4(cycle_square(9))),
    ("cycle_square9 claw-free", lambda: find_claw(cycle_square(9)) is None),
    ("cycle_square9 oracle empty", lambda: _no_oracle(cycle_square(9))),
    ("g3 even-hole-free", lambda: has_even_hole(g_k(3)) is None),
    ("g3 oracle empty", lambda: _no_oracle(g_k(3))),
    ("g3 claw witness", lambda: find_claw(g_k(3)) is not None),
    ("g5 even-hole-free", lambda: has_even_hole(g_k(5)) is None),
    ("g5 oracle empty", lambda: _no_oracle(g_k(5))),
    ("g5 claw witness", lambda: find_claw(g_k(5)) is not None),
]


def has_no_c4(g):
    return not any(True for _ in enumerate_holes(g, max_len=4))


@pytest.mark.parametrize("name, check", CERTIFICATES, ids=[c[0] for c in CERTIFICATES])
def test_c3_certificates(name, check):
    t0 = time.perf_counter()
    ok = bool(check())
    secs = time.perf_counter() - t0
    detail = "holds" if ok else "does not hold"
    if name == "g3 oracle empty" and not ok:
        found = sorted(sorted(c) for c in enumerate_simplicial_cliques(g_k(3)).cliques if len(c) == 1)
        detail = f"simplicial singletons {found}"
    record(f"3 certificate {name}", ok and secs < CERTIFICATE_LIMIT_S, f"{detail} ({secs:.2f}s)")


def test_c4_chordal_statement():
    misses = [
        s
        for s in range(N_UNIT_INTERVAL)
        if find_simplicial_vertex(random_unit_interval(20, 0.1, s)) is None
    ]
    record("4a unit-interval simplicial vertex", not misses,
           f"{N_UNIT_INTERVAL - len(misses)}/{N_UNIT_INTERVAL} graphs")


def test_c4_hole_dome_statement(sweep6):
    stats, _ = sweep6
    record("4b hole dome property", stats.violations["hole_dome"] == 0,
           f"{stats.holes} holes, {_violations(stats, 'hole_dome')}")


def test_c5_hole_neighbours(sweep6):
    stats, _ = sweep6
    record("5 hole-neighbour classification", stats.violations["hole_neighbours"] == 0,
           _violations(stats, "hole_neighbours"))


def test_c6_kstructure_claims(sweep6):
    stats, _ = sweep6
    record("6 k-structure claims", stats.violations["kstructure"] == 0,
           f"{stats.holes} structures, {_violations(stats, 'kstructure')}")


def test_c7_oracle_paths_agree():
    graphs = [g for g in named_fixtures().values() if g.n <= 12]
    graphs += [random_graph(s % 13, (s % 9 + 1) / 10, s) for s in range(N_RANDOM)]
    bad = sum(
        enumerate_simplicial_cliques(g).cliques != simplicial_cliques_by_subsets(g).cliques
        for g in graphs
    )
    record("7 oracle self-consistency", bad == 0, f"{len(graphs)} graphs, {bad} disagreements")


def test_c8_bench():
    rows = bench_rows(BENCH_SIZES)
    print("n,m,seconds")
    for n, m, sec in rows:
        print(f"{n},{m},{sec:.6f}")
    last = rows[-1][2]
    record("8 bench", [r[0] for r in rows] == list(BENCH_SIZES) and last < BENCH_LIMIT_S,
           f"n=400 in {last:.4f}s")


def test_c9_candidate_list(sweep6):
    stats, _ = sweep6
    record("9 candidate list", stats.violations["candidates"] == 0, _violations(stats, "candidates"))


def test_c10_graph6():
    graphs = list(named_fixtures().values())
    graphs += [random_graph(s % 40, (s % 10) / 10, s) for s in range(N_RANDOM)]
    bad = sum(parse_graph6(emit_graph6(g)).graph != g for g in graphs)
    p3 = build_graph(3, [(0, 1), (1, 2)])
    ref = nx.to_graph6_bytes(nx.path_graph(3), header=False).strip()
    ok = bad == 0 and emit_graph6(p3) == b"Bg" == ref
    record("10 graph6 fidelity", ok, f"{len(graphs)} round trips, {bad} mismatches, P3 -> {emit_graph6(p3).decode()}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-rN", *sys.argv[1:]]))
