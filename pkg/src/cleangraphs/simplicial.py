"""Domes of edges and the polynomial simplicial-clique finder.

For an edge ``ab`` let ``X(ab) = {a, b} ∪ (N(a) ∩ N(b))``.  The dome of
``ab`` is the set of ``y ∈ X(ab)`` whose neighbours outside ``X(ab)`` form a
clique.  In a non-null clean graph either some vertex is simplicial or some
edge has a dome that is a simplicial clique, which gives an O(n^5)
algorithm: try every vertex, then every edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

from .graph_core import Graph, bit, iter_bits, mask_of
from .recognizers import Hole, _as_hole


class SimplicialVertex(NamedTuple):
    v: int

    def __str__(self) -> str:
        return f"simplicial vertex {self.v}"


class EdgeDome(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"dome of edge ({self.a},{self.b})"


Candidate = Union[SimplicialVertex, EdgeDome]


@dataclass(frozen=True)
class Dome:
    edge: tuple[int, int]
    x_set: frozenset[int]
    dome: frozenset[int]


@dataclass(frozen=True)
class SimplicialCliqueResult:
    clique: frozenset[int]
    provenance: Candidate


def _require_edge(g: Graph, a: int, b: int) -> None:
    if not (0 <= a < g.n and 0 <= b < g.n) or not g.adjacent(a, b):
        raise ValueError(f"({a}, {b}) is not an edge")


def x_set_mask(g: Graph, a: int, b: int) -> int:
    return bit(a) | bit(b) | (g.rows[a] & g.rows[b])


def dome_mask(g: Graph, a: int, b: int) -> int:
    x = x_set_mask(g, a, b)
    rows = g.rows
    out = 0
    for y in iter_bits(x):
        if g.is_clique_mask(rows[y] & ~x):
            out |= 1 << y
    return out


def simplicial_clique_mask(g: Graph, k: int) -> bool:
    if not k or not g.is_clique_mask(k):
        return False
    rows = g.rows
    return all(g.is_clique_mask(rows[v] & ~k) for v in iter_bits(k))


def x_set(g: Graph, a: int, b: int) -> frozenset[int]:
    """``{a, b}`` together with the common neighbours of ``a`` and ``b``."""
    _require_edge(g, a, b)
    return frozenset(iter_bits(x_set_mask(g, a, b)))


def dome(g: Graph, a: int, b: int) -> Dome:
    _require_edge(g, a, b)
    return Dome(
        (a, b),
        frozenset(iter_bits(x_set_mask(g, a, b))),
        frozenset(iter_bits(dome_mask(g, a, b))),
    )


def is_simplicial_clique(g: Graph, k: Iterable[int]) -> bool:
    """Non-empty clique whose members each have a clique of outside neighbours."""
    m = mask_of(k)
    if m >> g.n:
        raise ValueError("vertex set not contained in the graph")
    return simplicial_clique_mask(g, m)


def candidate_descriptors(g: Graph) -> list[Candidate]:
    """Every vertex, then every edge in lexicographic order: ``n + m <= n^2`` candidates.

    In a non-null clean graph at least one of them materializes to a
    simplicial clique.
    """
    if g.n == 0:
        raise ValueError("the null graph has no candidates")
    out: list[Candidate] = [SimplicialVertex(v) for v in range(g.n)]
    out.extend(EdgeDome(a, b) for a, b in g.edges())
    return out


def materialize(g: Graph, cand: Candidate) -> frozenset[int]:
    if isinstance(cand, SimplicialVertex):
        return frozenset((cand.v,))
    _require_edge(g, cand.a, cand.b)
    return frozenset(iter_bits(dome_mask(g, cand.a, cand.b)))


def find_simplicial_clique(g: Graph) -> SimplicialCliqueResult | None:
    """Simplicial clique via simplicial vertices first, then edge domes.

    Cleanness is not checked.  For clean input the result is never ``None``;
    for other graphs ``None`` is a legitimate answer.
    """
    if g.n == 0:
        raise ValueError("the null graph has no simplicial clique")
    rows = g.rows
    for v in range(g.n):
        if g.is_clique_mask(rows[v]):
            return SimplicialCliqueResult(frozenset((v,)), SimplicialVertex(v))
    for a, b in g.edges():
        d = dome_mask(g, a, b)
        if simplicial_clique_mask(g, d):
            return SimplicialCliqueResult(frozenset(iter_bits(d)), EdgeDome(a, b))
    return None


def check_hole_dome_property(g: Graph, h: Hole | Iterable[int]) -> tuple[int, int] | None:
    """First edge of the hole (in hole order) whose dome is a simplicial clique.

    The edge comes back as a sorted pair.  ``None`` means no hole edge works,
    which cannot happen in a clean graph.
    """
    hole = _as_hole(g, h if isinstance(h, Hole) else tuple(h))
    for a, b in hole.edges():
        if simplicial_clique_mask(g, dome_mask(g, a, b)):
            return (a, b) if a < b else (b, a)
    return None


__all__ = [
    "Candidate",
    "Dome",
    "EdgeDome",
    "SimplicialCliqueResult",
    "SimplicialVertex",
    "candidate_descriptors",
    "check_hole_dome_property",
    "dome",
    "find_simplicial_clique",
    "is_simplicial_clique",
    "materialize",
    "x_set",
]
