"""Holes, claws, chordality and the forbidden configurations of clean graphs.

A graph is *clean* when it is claw-free and contains none of: a jewel, a
line wheel, a short prism, or the seven-antihole (all as induced subgraphs).

Every search that can blow up takes a ``budget`` of search nodes.  Running
out raises :class:`SearchBudgetExceeded`, so a ``None`` answer always means
the search was complete.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .graph_core import (
    Graph,
    bit,
    iter_bits,
    lowest,
    mask_of,
    shortest_path_mask,
)

DEFAULT_BUDGET = 10**7


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of budget before it could answer."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: search budget of {budget} exhausted")
        self.what = what
        self.budget = budget


class _Budget:
    __slots__ = ("left", "total", "what")

    def __init__(self, total: int | None, what: str):
        self.total = DEFAULT_BUDGET if total is None else total
        self.left = self.total
        self.what = what

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise SearchBudgetExceeded(self.what, self.total)


@dataclass(frozen=True)
class Hole:
    """An induced cycle of length at least four, in canonical form.

    Canonical form starts at the minimum vertex and continues towards the
    smaller of its two cycle neighbours.
    """

    vertices: tuple[int, ...]

    @classmethod
    def canonical(cls, cycle: Sequence[int]) -> Hole:
        cycle = list(cycle)
        i = cycle.index(min(cycle))
        rot = cycle[i:] + cycle[:i]
        if rot[-1] < rot[1]:
            rot = [rot[0]] + rot[:0:-1]
        return cls(tuple(rot))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def __str__(self) -> str:
        return "-".join(map(str, self.vertices))


def is_hole(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` lists the vertices of an induced cycle of length >= 4."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k or any(not 0 <= v < g.n for v in cycle):
        return False
    for i, u in enumerate(cycle):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.adjacent(u, cycle[j]) != consecutive:
                return False
    return True


def _as_hole(g: Graph, h: Hole | Sequence[int]) -> Hole:
    vs = h.vertices if isinstance(h, Hole) else tuple(h)
    if not is_hole(g, vs):
        raise ValueError(f"{list(vs)} is not a hole of the graph")
    return h if isinstance(h, Hole) else Hole(vs)


# -- obstructions -------------------------------------------------------------


class ObstructionKind(str, enum.Enum):
    CLAW = "claw"
    SEVEN_ANTIHOLE = "seven-antihole"
    JEWEL = "jewel"
    LINE_WHEEL = "line wheel"
    SHORT_PRISM = "short prism"


@dataclass(frozen=True)
class Obstruction:
    """An induced subgraph certifying that a graph is not clean.

    ``roles`` names the parts of the witness:

    * claw: ``centre`` and ``leaves``
    * seven-antihole: ``cycle``, the vertices in the order of the complementary 7-cycle
    * jewel / line wheel: ``hole`` (rotated so the apex sees ``h1, h2, ...``)
      and ``apex``
    * short prism: ``hole`` ``h1..h4`` and ``path`` ``p1..pt``
    """

    kind: ObstructionKind
    roles: Mapping[str, object] = field(hash=False)

    @property
    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for value in self.roles.values():
            if isinstance(value, int):
                out.add(value)
            else:
                out.update(value)  # type: ignore[arg-type]
        return frozenset(out)


def find_claw(g: Graph) -> Obstruction | None:
    """Lexicographically first induced claw ``(centre; a < b < c)``."""
    rows = g.rows
    for c in range(g.n):
        nc = rows[c]
        for a in iter_bits(nc):
            above_a = nc & ~rows[a] & ~((bit(a) << 1) - 1)
            for b in iter_bits(above_a):
                rest = above_a & ~rows[b] & ~((bit(b) << 1) - 1)
                if rest:
                    return Obstruction(
                        ObstructionKind.CLAW, {"centre": c, "leaves": (a, b, lowest(rest))}
                    )
    return None


def _hole_search(
    g: Graph, max_len: int | None, budget: _Budget
) -> Iterator[tuple[int, ...]]:
    """DFS over induced paths; yields each hole once in canonical form.

    Paths start at their minimum vertex ``s`` and use only larger vertices.
    ``blocked`` holds ``s``, every vertex below it, and the closed
    neighbourhoods of all path vertices except ``s`` and the current end, so
    the candidates for extension are exactly the unblocked neighbours of the
    end.  A candidate adjacent to ``s`` can only close the cycle.
    """
    rows = g.rows
    top = g.n if max_len is None else min(max_len, g.n)
    if top < 4:
        return
    for s in range(g.n):
        below = (bit(s) << 1) - 1
        ns = rows[s]
        for p1 in iter_bits(ns & ~below):
            stack = [((s, p1), below)]
            while stack:
                path, blocked = stack.pop()
                budget.spend()
                last = path[-1]
                grow = len(path) + 1 < top
                child_blocked = blocked | rows[last] | bit(last)
                children = []
                for x in iter_bits(rows[last] & ~blocked):
                    if ns >> x & 1:
                        if len(path) >= 3 and x > p1:
                            yield path + (x,)
                    elif grow:
                        children.append(path + (x,))
                for child in reversed(children):
                    stack.append((child, child_blocked))


def enumerate_holes(
    g: Graph,
    max_len: int | None = None,
    *,
    limit: int | None = None,
    budget: int | None = None,
) -> Iterator[Hole]:
    """Yield every hole of ``g`` exactly once, in canonical form.

    ``max_len`` bounds the hole length.  ``limit`` caps the number of holes
    emitted and ``budget`` caps the number of search nodes; hitting either
    raises :class:`SearchBudgetExceeded` instead of silently truncating.
    Worst-case exponential: meant for small graphs.
    """
    b = _Budget(budget, "hole enumeration")
    emitted = 0
    for cyc in _hole_search(g, max_len, b):
        if limit is not None and emitted >= limit:
            raise SearchBudgetExceeded("hole enumeration (emitted-hole cap)", limit)
        emitted += 1
        yield Hole(cyc)


def has_even_hole(g: Graph, *, budget: int | None = None) -> Hole | None:
    """An even hole of ``g`` (first in enumeration order), or ``None``."""
    b = _Budget(budget, "even-hole search")
    for cyc in _hole_search(g, None, b):
        if len(cyc) % 2 == 0:
            return Hole(cyc)
    return None


def is_perfect_elimination_order(g: Graph, order: Sequence[int]) -> bool:
    """Each vertex's neighbours later in ``order`` form a clique."""
    if sorted(order) != list(range(g.n)):
        return False
    later = g.full
    for v in order:
        later &= ~bit(v)
        if not g.is_clique_mask(g.rows[v] & later):
            return False
    return True


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search; returns the visit order (ties -> smallest)."""
    weight = [0] * g.n
    unvisited = g.full
    order = []
    while unvisited:
        v = max(iter_bits(unvisited), key=lambda u: (weight[u], -u))
        order.append(v)
        unvisited &= ~bit(v)
        for u in iter_bits(g.rows[v] & unvisited):
            weight[u] += 1
    return order


def _hole_through(g: Graph, v: int, u: int, w: int) -> Hole | None:
    """Hole ``v-u-...-w-v`` for non-adjacent neighbours ``u, w`` of ``v``."""
    allowed = g.full & ~g.rows[v] & ~bit(v)
    path = shortest_path_mask(g, bit(u), bit(w), allowed)
    if path is None:
        return None
    return Hole.canonical((v,) + path)


def chordal_elimination_order(g: Graph) -> list[int] | Hole:
    """A perfect elimination ordering if ``g`` is chordal, else a hole.

    The ordering is the reverse of a maximum cardinality search.  When it
    fails the perfect-elimination test, a hole is extracted through the
    first offending vertex.
    """
    order = _mcs_order(g)[::-1]
    later = g.full
    for v in order:
        later &= ~bit(v)
        nb = g.rows[v] & later
        if g.is_clique_mask(nb):
            continue
        for u in iter_bits(nb):
            for w in iter_bits(nb & ~g.rows[u] & ~((bit(u) << 1) - 1)):
                hole = _hole_through(g, v, u, w)
                if hole is not None:
                    return hole
        break
    else:
        return order
    # MCS theory says the first offender yields a hole; scan all triples regardless.
    for v in range(g.n):
        nb = g.rows[v]
        for u in iter_bits(nb):
            for w in iter_bits(nb & ~g.rows[u] & ~((bit(u) << 1) - 1)):
                hole = _hole_through(g, v, u, w)
                if hole is not None:
                    return hole
    raise AssertionError("elimination order failed but no hole was found")


def is_chordal(g: Graph) -> bool:
    return not isinstance(chordal_elimination_order(g), Hole)


def find_simplicial_vertex(g: Graph) -> int | None:
    """Least vertex whose neighbourhood is a clique."""
    for v in range(g.n):
        if g.is_clique_mask(g.rows[v]):
            return v
    return None


# -- clean-class obstructions ------------------------------------------------


def _cyclic_run(k: int, positions: list[int], length: int) -> int | None:
    """Start index of a run of ``length`` cyclically consecutive positions.

    ``positions`` is the sorted list of indices (0-based) on a k-cycle.
    Returns ``None`` unless the positions form exactly such a run.
    """
    if len(positions) != length:
        return None
    if length == k:
        return 0
    pset = set(positions)
    for start in positions:
        if (start - 1) % k not in pset:
            if all((start + j) % k in pset for j in range(length)):
                return start
            return None
    return None


def _rotate(cycle: Sequence[int], start: int, reverse: bool = False) -> tuple[int, ...]:
    k = len(cycle)
    if reverse:
        return tuple(cycle[(start - j) % k] for j in range(k))
    return tuple(cycle[(start + j) % k] for j in range(k))


def _jewel_on_hole(g: Graph, hole: tuple[int, ...], v: int) -> tuple[int, ...] | None:
    """Rotation of ``hole`` making ``N(v) ∩ H = {h1, h2, h3, h4}``, if any."""
    k = len(hole)
    pos = [i for i, h in enumerate(hole) if g.rows[v] >> h & 1]
    start = _cyclic_run(k, pos, 4)
    if start is None:
        return None
    return _rotate(hole, start)


def _line_wheel_on_hole(g: Graph, hole: tuple[int, ...], v: int) -> tuple[int, ...] | None:
    """Rotation of ``hole`` making ``N(v) ∩ H = {h1, h2, hi, hi+1}``, 4 <= i <= k-2."""
    k = len(hole)
    if k < 6:
        return None
    pos = [i for i, h in enumerate(hole) if g.rows[v] >> h & 1]
    if len(pos) != 4:
        return None
    pset = set(pos)
    for p in pos:
        # p, p+1 is a pair; the other pair must start at offset i-1 in 3..k-3
        if (p + 1) % k not in pset:
            continue
        for off in range(3, k - 2):
            if {(p + off) % k, (p + off + 1) % k} | {p, (p + 1) % k} == pset:
                return _rotate(hole, p)
    return None


def find_jewel(g: Graph, *, budget: int | None = None) -> Obstruction | None:
    b = _Budget(budget, "jewel search")
    for cyc in _hole_search(g, None, b):
        hmask = mask_of(cyc)
        for v in iter_bits(g.full & ~hmask):
            rot = _jewel_on_hole(g, cyc, v)
            if rot is not None:
                return Obstruction(ObstructionKind.JEWEL, {"hole": rot, "apex": v})
    return None


def find_line_wheel(g: Graph, *, budget: int | None = None) -> Obstruction | None:
    b = _Budget(budget, "line-wheel search")
    for cyc in _hole_search(g, None, b):
        if len(cyc) < 6:
            continue
        hmask = mask_of(cyc)
        for v in iter_bits(g.full & ~hmask):
            rot = _line_wheel_on_hole(g, cyc, v)
            if rot is not None:
                return Obstruction(ObstructionKind.LINE_WHEEL, {"hole": rot, "apex": v})
    return None


def find_short_prism(g: Graph, *, budget: int | None = None) -> Obstruction | None:
    """A 4-hole ``h1..h4`` plus a path ``p1..pt`` attached at opposite edges.

    ``p1`` sees exactly ``h1, h2`` and ``pt`` exactly ``h3, h4`` on the hole;
    no other path vertex touches the hole.  With ``t = 1`` the single path
    vertex is complete to the 4-hole.
    """
    b = _Budget(budget, "short-prism search")
    rows = g.rows
    for cyc in _hole_search(g, 4, b):
        hmask = mask_of(cyc)
        outside = g.full & ~hmask
        trace = {}
        for v in iter_bits(outside):
            trace[v] = rows[v] & hmask
        free = mask_of(v for v, t in trace.items() if t == 0)
        for v in iter_bits(outside):
            if trace[v] == hmask:
                return Obstruction(
                    ObstructionKind.SHORT_PRISM, {"hole": cyc, "path": (v,)}
                )
        for r in range(2):
            h = _rotate(cyc, r)
            e1, e2 = bit(h[0]) | bit(h[1]), bit(h[2]) | bit(h[3])
            srcs = mask_of(v for v, t in trace.items() if t == e1)
            dsts = mask_of(v for v, t in trace.items() if t == e2)
            if not srcs or not dsts:
                continue
            b.spend()
            path = shortest_path_mask(g, srcs, dsts, free)
            if path is not None:
                return Obstruction(ObstructionKind.SHORT_PRISM, {"hole": h, "path": path})
    return None


def find_seven_antihole(g: Graph, *, budget: int | None = None) -> Obstruction | None:
    """Induced complement of C7, found as a 7-hole of the complement graph."""
    b = _Budget(budget, "seven-antihole search")
    if g.n < 7:
        return None
    for cyc in _hole_search(g.complement(), 7, b):
        if len(cyc) == 7:
            return Obstruction(ObstructionKind.SEVEN_ANTIHOLE, {"cycle": cyc})
    return None


def find_clean_obstruction(g: Graph, *, budget: int | None = None) -> Obstruction | None:
    """First obstruction to cleanness, or ``None`` if ``g`` is clean.

    Kinds are tried cheapest first: claw, seven-antihole, jewel, line wheel,
    short prism.
    """
    claw = find_claw(g)
    if claw is not None:
        return claw
    for finder in (find_seven_antihole, find_jewel, find_line_wheel, find_short_prism):
        obs = finder(g, budget=budget)
        if obs is not None:
            return obs
    return None


def is_clean(g: Graph, *, budget: int | None = None) -> bool:
    return find_clean_obstruction(g, budget=budget) is None


def verify_obstruction(g: Graph, obs: Obstruction) -> bool:
    """Re-check an obstruction witness against its definition, literally."""
    r = obs.roles
    kind = obs.kind
    adj = g.adjacent
    try:
        if kind is ObstructionKind.CLAW:
            c, leaves = r["centre"], tuple(r["leaves"])
            if len(set(leaves) | {c}) != 4:
                return False
            return all(adj(c, x) for x in leaves) and not any(
                adj(x, y) for i, x in enumerate(leaves) for y in leaves[i + 1 :]
            )
        if kind is ObstructionKind.SEVEN_ANTIHOLE:
            cyc = tuple(r["cycle"])
            if len(set(cyc)) != 7:
                return False
            for i in range(7):
                for j in range(i + 1, 7):
                    ring = (j - i) in (1, 6)
                    if adj(cyc[i], cyc[j]) == ring:
                        return False
            return True
        if kind in (ObstructionKind.JEWEL, ObstructionKind.LINE_WHEEL):
            hole, v = tuple(r["hole"]), r["apex"]
            if not is_hole(g, hole) or v in hole:
                return False
            seen = {h for h in hole if adj(v, h)}
            if kind is ObstructionKind.JEWEL:
                return seen == set(hole[:4])
            k = len(hole)
            return k >= 6 and any(
                seen == {hole[0], hole[1], hole[i - 1], hole[i]} for i in range(4, k - 1)
            )
        if kind is ObstructionKind.SHORT_PRISM:
            hole, path = tuple(r["hole"]), tuple(r["path"])
            if len(hole) != 4 or not is_hole(g, hole) or not path:
                return False
            if set(hole) & set(path) or len(set(path)) != len(path):
                return False
            for i, u in enumerate(path):
                for j in range(i + 1, len(path)):
                    if adj(u, path[j]) != (j == i + 1):
                        return False
            want = {}
            for p in path:
                want[p] = set()
            want[path[0]] |= {hole[0], hole[1]}
            want[path[-1]] |= {hole[2], hole[3]}
            return all({h for h in hole if adj(p, h)} == want[p] for p in path)
    except (KeyError, TypeError, IndexError):
        return False
    return False


# -- neighbours of a hole ---------------------------------------------------


class HoleNeighbourTag(str, enum.Enum):
    ANTICOMPLETE = "anticomplete"
    COMPLETE_TO_C5 = "complete to C5"
    TWO_CONSECUTIVE = "two consecutive"
    THREE_CONSECUTIVE = "three consecutive"
    VIOLATION = "violation"


@dataclass(frozen=True)
class HoleNeighbourOutcome:
    tag: HoleNeighbourTag
    detail: tuple[int, ...]  # neighbours on the hole, in hole order


def classify_hole_neighbours(
    g: Graph, h: Hole | Sequence[int], v: int
) -> HoleNeighbourOutcome:
    """How ``v`` attaches to the hole ``h``.

    In a clean graph the answer is never ``VIOLATION``: ``v`` misses the hole,
    is complete to a 5-hole, or sees exactly two or three consecutive hole
    vertices.
    """
    hole = _as_hole(g, h).vertices
    if v in hole:
        raise ValueError(f"vertex {v} lies on the hole")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    k = len(hole)
    pos = [i for i, x in enumerate(hole) if g.rows[v] >> x & 1]
    detail = tuple(hole[i] for i in pos)
    if not pos:
        tag = HoleNeighbourTag.ANTICOMPLETE
    elif len(pos) == k and k == 5:
        tag = HoleNeighbourTag.COMPLETE_TO_C5
    elif len(pos) == 2 and _cyclic_run(k, pos, 2) is not None:
        tag = HoleNeighbourTag.TWO_CONSECUTIVE
    elif len(pos) == 3 and _cyclic_run(k, pos, 3) is not None:
        tag = HoleNeighbourTag.THREE_CONSECUTIVE
    else:
        tag = HoleNeighbourTag.VIOLATION
    return HoleNeighbourOutcome(tag, detail)


__all__ = [
    "DEFAULT_BUDGET",
    "Hole",
    "HoleNeighbourOutcome",
    "HoleNeighbourTag",
    "Obstruction",
    "ObstructionKind",
    "SearchBudgetExceeded",
    "chordal_elimination_order",
    "classify_hole_neighbours",
    "enumerate_holes",
    "find_claw",
    "find_clean_obstruction",
    "find_jewel",
    "find_line_wheel",
    "find_seven_antihole",
    "find_short_prism",
    "find_simplicial_vertex",
    "has_even_hole",
    "is_chordal",
    "is_clean",
    "is_hole",
    "is_perfect_elimination_order",
    "verify_obstruction",
]
