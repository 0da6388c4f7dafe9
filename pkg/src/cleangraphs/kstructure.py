"""k-structured sets grown around a hole, and checkers for their properties.

A k-structure (k >= 4) is a cyclic sequence of disjoint non-empty cliques
``K_1..K_k`` where every vertex of ``K_i`` has a neighbour in ``K_{i-1}`` and
in ``K_{i+1}``, and non-consecutive classes are anticomplete.  Indices are
taken mod k and are 0-based in code.

:func:`check_structure_claims` evaluates the structural claims that hold for
a maximal k-structure in a clean graph, each as a universally quantified
predicate, and reports counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graph_core import (
    Graph,
    anticomplete_mask,
    bit,
    bits_list,
    complete_mask,
    iter_bits,
    mask_of,
    shortest_path_mask,
)
from .recognizers import Hole, _as_hole

CLAIMS = ("opposite", "comparable", "complete", "path", "claims", "outside", "hats")


@dataclass(frozen=True)
class KStructure:
    classes: tuple[frozenset[int], ...]

    @classmethod
    def from_sets(cls, classes: Sequence[Sequence[int]]) -> KStructure:
        return cls(tuple(frozenset(c) for c in classes))

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def w(self) -> frozenset[int]:
        return frozenset().union(*self.classes)

    def masks(self) -> list[int]:
        return [mask_of(c) for c in self.classes]


@dataclass(frozen=True)
class StructureCheck:
    ok: bool
    bullet: int | None = None  # 1: cliques, 2: attachments, 3: anticompleteness
    witness: tuple[int, ...] = ()
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _check_masks(g: Graph, ks: list[int]) -> StructureCheck:
    k = len(ks)
    rows = g.rows
    for i, c in enumerate(ks):
        if not c:
            return StructureCheck(False, 1, (i,), f"class {i} is empty")
        if not g.is_clique_mask(c):
            u = next(v for v in iter_bits(c) if c & ~rows[v] & ~bit(v))
            w = next(iter_bits(c & ~rows[u] & ~bit(u)))
            return StructureCheck(False, 1, (i, u, w), f"class {i} is not a clique")
    for i, c in enumerate(ks):
        prev, nxt = ks[i - 1], ks[(i + 1) % k]
        for v in iter_bits(c):
            if not rows[v] & prev:
                return StructureCheck(False, 2, (i, v), f"{v} has no neighbour in class {(i - 1) % k}")
            if not rows[v] & nxt:
                return StructureCheck(False, 2, (i, v), f"{v} has no neighbour in class {(i + 1) % k}")
    for i in range(k):
        for j in range(i + 2, k):
            if (j + 1) % k == i:
                continue
            if not anticomplete_mask(g, ks[i], ks[j]):
                u = next(v for v in iter_bits(ks[i]) if rows[v] & ks[j])
                w = next(iter_bits(rows[u] & ks[j]))
                return StructureCheck(
                    False, 3, (i, j, u, w), f"classes {i} and {j} are joined by {u}-{w}"
                )
    return StructureCheck(True)


def verify_k_structure(g: Graph, ks: KStructure) -> StructureCheck:
    """Check the three k-structure conditions; the result is truthy iff all hold.

    Raises ``ValueError`` for ``k < 4``, overlapping classes, or vertices
    outside the graph.
    """
    if ks.k < 4:
        raise ValueError(f"a k-structure needs k >= 4, got {ks.k}")
    masks = ks.masks()
    seen = 0
    for m in masks:
        if m & seen:
            raise ValueError(f"classes overlap on {bits_list(m & seen)}")
        seen |= m
    if seen >> g.n:
        raise ValueError("classes use vertices outside the graph")
    return _check_masks(g, masks)


def _can_insert(g: Graph, ks: list[int], v: int, i: int) -> bool:
    """Whether adding ``v`` to class ``i`` keeps a valid k-structure."""
    k = len(ks)
    row = g.rows[v]
    if ks[i] & ~row:
        return False
    if not row & ks[i - 1] or not row & ks[(i + 1) % k]:
        return False
    for j in range(k):
        if j != i and (j - i) % k not in (1, k - 1) and row & ks[j]:
            return False
    return True


def grow_k_structure(g: Graph, h: Hole | Sequence[int]) -> KStructure:
    """Greedily grow the singleton structure of a hole until no vertex fits.

    Vertices outside the structure are scanned in increasing order and
    class indices in increasing order; any insertion that keeps a valid
    k-structure is made, and scanning repeats until a full pass adds nothing.
    """
    hole = _as_hole(g, h if isinstance(h, Hole) else tuple(h)).vertices
    ks = [bit(x) for x in hole]
    w = mask_of(hole)
    changed = True
    while changed:
        changed = False
        for v in iter_bits(g.full & ~w):
            for i in range(len(ks)):
                if _can_insert(g, ks, v, i):
                    ks[i] |= bit(v)
                    w |= bit(v)
                    changed = True
                    break
    return KStructure(tuple(frozenset(iter_bits(c)) for c in ks))


def insertion_candidates(g: Graph, ks: KStructure) -> list[tuple[int, int]]:
    """All ``(v, i)`` such that adding ``v`` to class ``i`` still verifies."""
    out = []
    w = mask_of(ks.w)
    for v in iter_bits(g.full & ~w):
        for i in range(ks.k):
            classes = list(ks.classes)
            classes[i] = classes[i] | {v}
            if _check_masks(g, [mask_of(c) for c in classes]):
                out.append((v, i))
    return out


def is_maximal(g: Graph, ks: KStructure) -> bool:
    return not insertion_candidates(g, ks)


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    witness: tuple = ()
    note: str = ""


@dataclass(frozen=True)
class ClaimReport:
    results: dict[str, ClaimResult] = field(default_factory=dict)
    maximal: bool = True

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def failures(self) -> list[ClaimResult]:
        return [r for r in self.results.values() if not r.passed]

    def __getitem__(self, name: str) -> ClaimResult:
        return self.results[name]


def _claim_opposite(g: Graph, ks: list[int]) -> ClaimResult:
    k, rows = len(ks), g.rows
    for i, c in enumerate(ks):
        nxt, prev = ks[(i + 1) % k], ks[i - 1]
        for a in iter_bits(c):
            for b in iter_bits(c):
                if a == b:
                    continue
                if rows[b] & nxt & ~rows[a] and rows[b] & prev & ~rows[a]:
                    return ClaimResult("opposite", False, (i, a, b))
    return ClaimResult("opposite", True)


def _claim_comparable(g: Graph, ks: list[int]) -> ClaimResult:
    k, rows = len(ks), g.rows
    for i, c in enumerate(ks):
        nxt = ks[(i + 1) % k]
        for a, b in combinations(iter_bits(c), 2):
            na, nb = rows[a] & nxt, rows[b] & nxt
            if na & ~nb and nb & ~na:
                return ClaimResult("comparable", False, (i, a, b))
    return ClaimResult("comparable", True)


def _claim_complete(g: Graph, ks: list[int]) -> ClaimResult:
    k = len(ks)
    for i, c in enumerate(ks):
        if not complete_mask(g, c, ks[i - 1]) and not complete_mask(g, c, ks[(i + 1) % k]):
            return ClaimResult("complete", False, (i,))
    return ClaimResult("complete", True)


def _claim_path(g: Graph, ks: list[int]) -> ClaimResult:
    """Layered paths: one vertex from each of ``K_j..K_{j+i}``, 2 <= i <= k-2.

    Such a path is induced automatically, and it exists iff the shortest
    path with interior in the intermediate classes has exactly ``i`` edges.
    """
    k = len(ks)
    for j in range(k):
        for i in range(2, k - 1):
            interior = 0
            for t in range(j + 1, j + i):
                interior |= ks[t % k]
            for a in iter_bits(ks[j]):
                for z in iter_bits(ks[(j + i) % k]):
                    p = shortest_path_mask(g, bit(a), bit(z), interior)
                    if p is None or len(p) != i + 1:
                        return ClaimResult("path", False, (j, i, a, z))
    return ClaimResult("path", True)


def _traces(g: Graph, ks: list[int], v: int) -> tuple[list[int], list[int]]:
    row = g.rows[v]
    ns = [c & row for c in ks]
    ms = [c & ~row for c in ks]
    return ns, ms


def _claim_claims(g: Graph, ks: list[int], outside: list[int]) -> ClaimResult:
    k = len(ks)
    for v in outside:
        ns, ms = _traces(g, ks, v)
        for i in range(k):
            prev, nxt = (i - 1) % k, (i + 1) % k
            if not anticomplete_mask(g, ns[i], ms[prev]) and not anticomplete_mask(g, ns[i], ms[nxt]):
                return ClaimResult("claims", False, (v, i), "part 1")
            if k > 4 and not anticomplete_mask(g, ms[i], ns[prev]) and not anticomplete_mask(
                g, ms[i], ns[nxt]
            ):
                return ClaimResult("claims", False, (v, i), "part 2")
    return ClaimResult("claims", True)


def _claim_outside(g: Graph, ks: list[int], outside: list[int]) -> ClaimResult:
    k = len(ks)
    w = 0
    for c in ks:
        w |= c
    for v in outside:
        ns, _ = _traces(g, ks, v)
        hit = [i for i in range(k) if ns[i]]
        if len(hit) <= 1 or (len(hit) == 2 and (hit[1] - hit[0]) % k in (1, k - 1)):
            continue
        if (
            k == 5
            and w & ~g.rows[v] == 0
            and all(complete_mask(g, ks[i], ks[i + 1]) for i in range(4))
        ):
            continue
        return ClaimResult("outside", False, (v, tuple(hit)))
    return ClaimResult("outside", True)


def fringe_classes(g: Graph, ks: KStructure | list[int]) -> list[int]:
    """Masks of ``K_{i,i+1}``: outside vertices seeing ``K_i``, ``K_{i+1}`` and nothing else of W."""
    masks = ks.masks() if isinstance(ks, KStructure) else ks
    k = len(masks)
    w = 0
    for c in masks:
        w |= c
    out = [0] * k
    for v in iter_bits(g.full & ~w):
        row = g.rows[v]
        for i in range(k):
            j = (i + 1) % k
            if row & masks[i] and row & masks[j] and not row & w & ~(masks[i] | masks[j]):
                out[i] |= bit(v)
    return out


def _claim_hats(g: Graph, ks: list[int], outside: list[int]) -> ClaimResult:
    k = len(ks)
    w = 0
    for c in ks:
        w |= c
    fringe = fringe_classes(g, ks)
    universal = [u for u in outside if w & ~g.rows[u] == 0]
    for i in range(k):
        f = fringe[i]
        if not f:
            continue
        if not g.is_clique_mask(ks[i] | ks[(i + 1) % k] | f):
            return ClaimResult("hats", False, (i,), "part 1")
        for u in universal:
            if g.rows[u] & f:
                return ClaimResult("hats", False, (i, u), "part 2")
        if not anticomplete_mask(g, f, fringe[i - 1]):
            return ClaimResult("hats", False, (i,), "part 3")
    return ClaimResult("hats", True)


def check_structure_claims(g: Graph, ks: KStructure) -> ClaimReport:
    """Evaluate every structural claim on ``ks``; see the module docstring.

    Claim names, in order: ``opposite`` (neighbourhoods in the two adjacent
    classes cannot both fail to nest), ``comparable`` (neighbourhoods in the
    next class are nested), ``complete`` (each class is complete to one of
    its neighbours), ``path`` (layered paths exist), ``claims`` (outside
    vertex traces), ``outside`` (outside vertices see at most two
    consecutive classes, or the k=5 universal case), ``hats`` (fringe
    classes).  The last three assume a maximal structure; ``maximal`` on the
    report records whether that premise holds.
    """
    check = verify_k_structure(g, ks)
    if not check:
        raise ValueError(f"not a k-structure: {check.reason}")
    masks = ks.masks()
    w = mask_of(ks.w)
    outside = bits_list(g.full & ~w)
    results = [
        _claim_opposite(g, masks),
        _claim_comparable(g, masks),
        _claim_complete(g, masks),
        _claim_path(g, masks),
        _claim_claims(g, masks, outside),
        _claim_outside(g, masks, outside),
        _claim_hats(g, masks, outside),
    ]
    return ClaimReport({r.name: r for r in results}, maximal=is_maximal(g, ks))


__all__ = [
    "CLAIMS",
    "ClaimReport",
    "ClaimResult",
    "KStructure",
    "StructureCheck",
    "check_structure_claims",
    "fringe_classes",
    "grow_k_structure",
    "insertion_candidates",
    "is_maximal",
    "verify_k_structure",
]
