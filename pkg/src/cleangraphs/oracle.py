"""Brute-force ground truth for small graphs.

Two independent routes list every simplicial clique: a scan over all vertex
subsets (``n <= 12``) written against plain adjacency sets, and clique
expansion followed by filtering (``n <= 20``).  They cross-check each other
and anchor the tests of the polynomial algorithm.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .graph_core import Graph, bit, iter_bits
from .kstructure import check_structure_claims, grow_k_structure, verify_k_structure
from .recognizers import (
    Hole,
    Obstruction,
    chordal_elimination_order,
    enumerate_holes,
    find_clean_obstruction,
)
from .simplicial import (
    SimplicialCliqueResult,
    dome_mask,
    find_simplicial_clique,
    simplicial_clique_mask,
)

DEFAULT_BOUND = 20
SUBSET_SCAN_BOUND = 12


class OracleBoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleReport:
    cliques: tuple[frozenset[int], ...]

    @property
    def counts_by_size(self) -> dict[int, int]:
        return dict(sorted(Counter(len(c) for c in self.cliques).items()))

    def __contains__(self, item) -> bool:
        return frozenset(item) in set(self.cliques)

    def __len__(self) -> int:
        return len(self.cliques)


def _sort_key(c: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(c))


def _all_cliques(g: Graph) -> Iterator[int]:
    """Every non-empty clique as a mask, each once (extend by larger vertices only)."""
    rows = g.rows
    stack = [(bit(v), rows[v] & ~((bit(v) << 1) - 1)) for v in range(g.n)]
    while stack:
        clique, cands = stack.pop()
        yield clique
        for u in iter_bits(cands):
            stack.append((clique | bit(u), cands & rows[u] & ~((bit(u) << 1) - 1)))


def enumerate_simplicial_cliques(g: Graph, *, bound: int = DEFAULT_BOUND) -> OracleReport:
    """All simplicial cliques of ``g``, sorted lexicographically."""
    if g.n > bound:
        raise OracleBoundExceeded(f"n={g.n} exceeds the oracle bound {bound}")
    found = [
        frozenset(iter_bits(c)) for c in _all_cliques(g) if simplicial_clique_mask(g, c)
    ]
    return OracleReport(tuple(sorted(found, key=_sort_key)))


def simplicial_cliques_by_subsets(g: Graph) -> OracleReport:
    """Same answer as :func:`enumerate_simplicial_cliques`, by scanning all 2^n subsets."""
    if g.n > SUBSET_SCAN_BOUND:
        raise OracleBoundExceeded(f"subset scan limited to n <= {SUBSET_SCAN_BOUND}")
    nbrs = [set() for _ in range(g.n)]
    for u, v in g.edges():
        nbrs[u].add(v)
        nbrs[v].add(u)

    def clique(s) -> bool:
        return all(b in nbrs[a] for a, b in combinations(s, 2))

    found = []
    for size in range(1, g.n + 1):
        for s in combinations(range(g.n), size):
            if clique(s) and all(clique(sorted(nbrs[v] - set(s))) for v in s):
                found.append(frozenset(s))
    return OracleReport(tuple(sorted(found, key=_sort_key)))


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    for code in range(1 << m):
        rows = [0] * n
        c = code
        while c:
            low = c & -c
            u, v = pairs[low.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            c ^= low
        yield Graph(n, tuple(rows))


@dataclass
class Verdict:
    clean: bool
    chordal: bool
    obstruction: Obstruction | None
    oracle: OracleReport
    result: SimplicialCliqueResult | None
    holes: tuple[Hole, ...] = ()
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_theorem(
    g: Graph,
    *,
    bound: int = DEFAULT_BOUND,
    budget: int | None = None,
    structures: bool = False,
) -> Verdict:
    """Check the existence theorem and its hole statement on ``g`` by brute force.

    For clean ``g``: some simplicial clique exists and the algorithm's answer
    is one of them; if chordal, some single vertex is simplicial; every hole
    has an edge whose dome is a simplicial clique.  With ``structures`` the
    k-structure claims are checked for every hole too.  Any failure is
    listed in ``violations``.
    """
    if g.n == 0:
        raise ValueError("the null graph is excluded")
    if g.n > bound:
        raise OracleBoundExceeded(f"n={g.n} exceeds the oracle bound {bound}")
    obs = find_clean_obstruction(g, budget=budget)
    elim = chordal_elimination_order(g)
    chordal = not isinstance(elim, Hole)
    report = enumerate_simplicial_cliques(g, bound=bound)
    result = find_simplicial_clique(g)
    holes = tuple(enumerate_holes(g, budget=budget))
    verdict = Verdict(obs is None, chordal, obs, report, result, holes)
    if obs is not None:
        return verdict
    members = set(report.cliques)
    v = verdict.violations
    if not members:
        v.append("clean graph without a simplicial clique")
    if result is None:
        v.append("algorithm returned none on a clean graph")
    elif result.clique not in members:
        v.append(f"algorithm output {sorted(result.clique)} is not a simplicial clique")
    if chordal and not any(len(c) == 1 for c in members):
        v.append("clean chordal graph without a simplicial vertex")
    for h in holes:
        doms = [frozenset(iter_bits(dome_mask(g, a, b))) for a, b in h.edges()]
        if not any(d in members for d in doms):
            v.append(f"hole {h}: no edge dome is a simplicial clique")
        if structures:
            ks = grow_k_structure(g, h)
            if not verify_k_structure(g, ks):
                v.append(f"hole {h}: grown structure does not verify")
                continue
            claims = check_structure_claims(g, ks)
            for fail in claims.failures():
                v.append(f"hole {h}: claim {fail.name} fails at {fail.witness}")
    return verdict


__all__ = [
    "DEFAULT_BOUND",
    "OracleBoundExceeded",
    "OracleReport",
    "Verdict",
    "enumerate_simplicial_cliques",
    "labeled_graphs",
    "simplicial_cliques_by_subsets",
    "verify_theorem",
]
