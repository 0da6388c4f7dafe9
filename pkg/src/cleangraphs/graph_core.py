"""Immutable simple graphs over dense vertex ids, backed by bitmask rows.

Vertex sets are passed around internally as Python ints used as bitsets
(bit ``v`` set means vertex ``v`` is a member).  Public helpers accept any
iterable of vertex ids and convert at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, slots=True)
class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood bitmask of ``v``.  Build instances with
    :func:`build_graph`; the raw constructor trusts its input.
    """

    n: int
    rows: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self.rows[u] >> (u + 1)):
                yield u, u + 1 + v

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def is_clique_mask(self, s: int) -> bool:
        rows = self.rows
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            if rest & ~rows[low.bit_length() - 1]:
                return False
        return True

    def is_stable_mask(self, s: int) -> bool:
        rows = self.rows
        for v in iter_bits(s):
            if rows[v] & s:
                return False
        return True

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled so ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for u in iter_bits(self.rows[v]):
                j = index.get(u)
                if j is not None:
                    r |= 1 << j
            rows.append(r)
        return Graph(len(vertices), tuple(rows))

    def complement(self) -> Graph:
        full = self.full
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices, deduplicating repeated edges.

    Raises ``ValueError`` on self-loops or endpoints outside ``0..n-1``.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _check_subset(g: Graph, s: int) -> None:
    if s >> g.n:
        raise ValueError(f"vertex set {bits_list(s)} not contained in 0..{g.n - 1}")


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    """True iff every two distinct members of ``s`` are adjacent."""
    m = mask_of(s)
    _check_subset(g, m)
    return g.is_clique_mask(m)


def _disjoint_masks(g: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[int, int]:
    ma, mb = mask_of(a), mask_of(b)
    _check_subset(g, ma | mb)
    if ma & mb:
        raise ValueError(f"sets overlap on {bits_list(ma & mb)}")
    return ma, mb


def complete_mask(g: Graph, a: int, b: int) -> bool:
    rows = g.rows
    return all(b & ~rows[v] == 0 for v in iter_bits(a))


def anticomplete_mask(g: Graph, a: int, b: int) -> bool:
    rows = g.rows
    return all(rows[v] & b == 0 for v in iter_bits(a))


def is_complete_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """Every vertex of ``a`` is adjacent to every vertex of ``b``."""
    return complete_mask(g, *_disjoint_masks(g, a, b))


def is_anticomplete_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """No edge joins ``a`` and ``b``."""
    return anticomplete_mask(g, *_disjoint_masks(g, a, b))


def is_induced_path(g: Graph, vertices: Sequence[int]) -> bool:
    """Consecutive vertices adjacent, all other pairs non-adjacent, no repeats."""
    if not vertices or len(set(vertices)) != len(vertices):
        return False
    for i, u in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            if g.adjacent(u, vertices[j]) != (j == i + 1):
                return False
    return True


def shortest_path_mask(g: Graph, s: int, t: int, allowed: int) -> tuple[int, ...] | None:
    """Mask form of :func:`find_induced_path`."""
    if not s or not t:
        raise ValueError("source and target sets must be non-empty")
    common = s & t
    if common:
        return (lowest(common),)
    rows = g.rows
    # dist[x]: edges from x to the target set, interior restricted to `allowed`
    dist = {v: 0 for v in iter_bits(t)}
    frontier = t
    seen = t
    d = 0
    best_start = None
    while frontier and best_start is None:
        reach = 0
        for v in iter_bits(frontier):
            reach |= rows[v]
        reach &= ~seen
        d += 1
        starts = reach & s
        if starts:
            best_start = lowest(starts)
            dist[best_start] = d
            break
        frontier = reach & allowed
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = d
    if best_start is None:
        return None
    path = [best_start]
    cur, d = best_start, dist[best_start]
    while d > 0:
        d -= 1
        cands = rows[cur] & (t if d == 0 else allowed & ~t)
        for y in iter_bits(cands):
            if dist.get(y) == d:
                break
        else:  # pragma: no cover - BFS layers guarantee a successor
            raise AssertionError("broken BFS layering")
        path.append(y)
        cur = y
    return tuple(path)


def find_induced_path(
    g: Graph, s: Iterable[int], t: Iterable[int], allowed: Iterable[int]
) -> tuple[int, ...] | None:
    """Shortest path from some vertex of ``s`` to some vertex of ``t``.

    Interior vertices must lie in ``allowed``; endpoints need not.  Among the
    shortest paths the lexicographically least vertex sequence is returned.
    A shortest such path is always induced.  Returns ``None`` if there is no
    path.
    """
    ms, mt, ma = mask_of(s), mask_of(t), mask_of(allowed)
    _check_subset(g, ms | mt | ma)
    return shortest_path_mask(g, ms, mt, ma)
