"""Exhaustive verification over all labeled graphs on a few vertices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .graph_core import Graph, mask_of
from .kstructure import (
    check_structure_claims,
    grow_k_structure,
    insertion_candidates,
    verify_k_structure,
)
from .oracle import enumerate_simplicial_cliques, labeled_graphs
from .recognizers import (
    HoleNeighbourTag,
    classify_hole_neighbours,
    enumerate_holes,
    find_claw,
    find_clean_obstruction,
    has_even_hole,
)
from .simplicial import (
    candidate_descriptors,
    check_hole_dome_property,
    find_simplicial_clique,
    is_simplicial_clique,
    materialize,
)

CHECKS = ("algorithm", "clean_class", "hole_dome", "hole_neighbours", "kstructure", "candidates")


@dataclass
class SweepStats:
    graphs: int = 0
    clean: int = 0
    holes: int = 0
    violations: Counter = field(default_factory=Counter)
    examples: dict[str, list[str]] = field(default_factory=dict)

    def record(self, check: str, g: Graph, detail: str) -> None:
        self.violations[check] += 1
        self.examples.setdefault(check, [])
        if len(self.examples[check]) < 5:
            self.examples[check].append(f"{g!r}: {detail}")


def check_graph(g: Graph, stats: SweepStats, deep: bool = True) -> None:
    """Run every theorem-level check on one graph and tally violations.

    ``deep`` adds the per-hole checks (dome edge, hole neighbours,
    k-structure claims) and the candidate-list check on clean graphs.
    """
    stats.graphs += 1
    obs = find_clean_obstruction(g)
    if find_claw(g) is None and has_even_hole(g) is None and obs is not None:
        stats.record("clean_class", g, f"claw-free, even-hole-free but {obs.kind.value}")
    if obs is not None or g.n == 0:
        return
    stats.clean += 1
    res = find_simplicial_clique(g)
    oracle = set(enumerate_simplicial_cliques(g).cliques)
    if res is None:
        stats.record("algorithm", g, "none on a clean graph")
    elif not is_simplicial_clique(g, res.clique) or res.clique not in oracle:
        stats.record("algorithm", g, f"bad output {sorted(res.clique)}")
    if not deep:
        return
    cands = candidate_descriptors(g)
    if len(cands) > g.n * g.n or not any(materialize(g, c) in oracle for c in cands):
        stats.record("candidates", g, f"{len(cands)} candidates, none simplicial")
    for h in enumerate_holes(g):
        stats.holes += 1
        if check_hole_dome_property(g, h) is None:
            stats.record("hole_dome", g, f"hole {h}")
        for v in range(g.n):
            if v not in h.vertices:
                out = classify_hole_neighbours(g, h, v)
                if out.tag is HoleNeighbourTag.VIOLATION:
                    stats.record("hole_neighbours", g, f"hole {h}, vertex {v}")
        ks = grow_k_structure(g, h)
        ok = bool(verify_k_structure(g, ks))
        ok = ok and all(len(c & set(h.vertices)) == 1 for c in ks.classes)
        ok = ok and mask_of(h.vertices) & mask_of(ks.w) == mask_of(h.vertices)
        if not ok or insertion_candidates(g, ks):
            stats.record("kstructure", g, f"hole {h}: grown structure invalid or not maximal")
            continue
        report = check_structure_claims(g, ks)
        if not report.all_passed:
            names = ",".join(r.name for r in report.failures())
            stats.record("kstructure", g, f"hole {h}: claims {names} fail")


def sweep(max_n: int, min_n: int = 0, deep: bool = True) -> SweepStats:
    stats = SweepStats()
    for n in range(min_n, max_n + 1):
        for g in labeled_graphs(n):
            check_graph(g, stats, deep)
    return stats
