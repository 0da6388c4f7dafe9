"""Named graphs, counterexample families and seeded random generators.

Numbering conventions (fixed so that expected values stay stable):

* cycles and cycle-derived graphs: ``i`` is joined around the cycle to ``i±1 mod n``
* ``g_k``: ``a_i -> 2(i-1)``, ``b_i -> 2(i-1)+1`` for ``i = 1..k``
* obstruction graphs: hole ``h_j -> j-1``, then the apex or the path ``p_1..p_t``
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .graph_core import Graph, build_graph
from .recognizers import find_clean_obstruction


class Family(str, enum.Enum):
    CYCLE = "cycle"
    COMPLEMENT_CYCLE = "complement-cycle"
    CYCLE_SQUARE = "cycle-square"
    GK = "gk"
    JEWEL = "jewel"
    LINE_WHEEL = "line-wheel"
    SHORT_PRISM = "short-prism"
    SEVEN_ANTIHOLE = "seven-antihole"
    CYCLE_BLOWUP = "cycle-blowup"
    UNIT_INTERVAL_RANDOM = "unit-interval"
    REJECTION_CLEAN_RANDOM = "random-clean"


@dataclass(frozen=True)
class Fixture:
    graph: Graph
    roles: dict[str, Any] = field(default_factory=dict, hash=False)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complement_cycle(n: int) -> Graph:
    """Complement of C_n for odd ``n >= 7``: claw-free, no simplicial clique."""
    if n < 7 or n % 2 == 0:
        raise ValueError(f"complement_cycle needs odd n >= 7, got {n}")
    return build_graph(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if (j - i) not in (1, n - 1)]
    )


def cycle_square(n: int) -> Graph:
    """C_n with every vertex also joined to its second neighbours (``n >= 9``)."""
    if n < 9:
        raise ValueError(f"cycle_square needs n >= 9, got {n}")
    return build_graph(n, [(i, (i + d) % n) for i in range(n) for d in (1, 2)])


def g_k(k: int) -> Graph:
    """Even-hole-free graph on 2k vertices with no simplicial clique (odd ``k >= 3``).

    Pairs ``a_i b_i`` are edges; for ``i < k`` add ``a_i a_{i+1}``,
    ``a_i b_{i+1}``, ``b_i a_{i+1}``, and close up with ``a_k a_1``,
    ``a_k b_1``, ``b_k a_1``.  That is all: ``4k`` edges.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError(f"g_k needs odd k >= 3, got {k}")

    def a(i):
        return 2 * (i - 1)

    def b(i):
        return 2 * (i - 1) + 1

    edges = [(a(i), b(i)) for i in range(1, k + 1)]
    for i in range(1, k):
        edges += [(a(i), a(i + 1)), (a(i), b(i + 1)), (b(i), a(i + 1))]
    edges += [(a(k), a(1)), (a(k), b(1)), (b(k), a(1))]
    return build_graph(2 * k, edges)


def cycle_blowup(sizes: list[int]) -> Graph:
    """Replace vertex ``i`` of C_k by a clique of ``sizes[i]`` vertices.

    Consecutive cliques are joined completely.  For ``k >= 5`` the result is
    clean and has holes, so a simplicial clique must come from an edge dome.
    """
    if len(sizes) < 4 or min(sizes) < 1:
        raise ValueError("cycle_blowup needs at least 4 non-empty classes")
    starts = np.concatenate([[0], np.cumsum(sizes)]).tolist()
    k = len(sizes)
    edges = []
    for i in range(k):
        cls = range(starts[i], starts[i + 1])
        nxt = range(starts[(i + 1) % k], starts[(i + 1) % k + 1])
        edges += [(u, v) for u in cls for v in cls if u < v]
        edges += [(u, v) for u in cls for v in nxt]
    return build_graph(starts[-1], edges)


def jewel(k: int = 5) -> Fixture:
    """Hole ``h_1..h_k`` (``k >= 4``) plus apex ``k`` seeing ``h_1..h_4``."""
    if k < 4:
        raise ValueError(f"jewel needs k >= 4, got {k}")
    edges = [(i, (i + 1) % k) for i in range(k)] + [(k, j) for j in range(4)]
    hole = tuple(range(k))
    return Fixture(build_graph(k + 1, edges), {"hole": hole, "apex": k})


def line_wheel(k: int = 6, i: int = 4) -> Fixture:
    """Hole of length ``k >= 6`` plus apex seeing ``h_1, h_2, h_i, h_{i+1}``, ``4 <= i <= k-2``."""
    if k < 6 or not 4 <= i <= k - 2:
        raise ValueError(f"line_wheel needs k >= 6 and 4 <= i <= k-2, got k={k}, i={i}")
    edges = [(j, (j + 1) % k) for j in range(k)] + [(k, 0), (k, 1), (k, i - 1), (k, i)]
    return Fixture(build_graph(k + 1, edges), {"hole": tuple(range(k)), "apex": k, "i": i})


def short_prism(t: int = 2) -> Fixture:
    """4-hole ``0-1-2-3`` and path ``4..3+t``; ``p_1`` sees 0,1 and ``p_t`` sees 2,3.

    With ``t = 1`` the single path vertex sees all four hole vertices.
    """
    if t < 1:
        raise ValueError(f"short_prism needs t >= 1, got {t}")
    path = tuple(range(4, 4 + t))
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    edges += [(path[j], path[j + 1]) for j in range(t - 1)]
    edges += [(path[0], 0), (path[0], 1), (path[-1], 2), (path[-1], 3)]
    return Fixture(build_graph(4 + t, edges), {"hole": (0, 1, 2, 3), "path": path})


def seven_antihole() -> Fixture:
    return Fixture(complement_cycle(7), {"cycle": tuple(range(7))})


def obstruction_fixture(kind: str, **params) -> Fixture:
    """The exact graph of a named obstruction, with its roles."""
    kind = Family(kind)
    if kind is Family.JEWEL:
        return jewel(**params)
    if kind is Family.LINE_WHEEL:
        return line_wheel(**params)
    if kind is Family.SHORT_PRISM:
        return short_prism(**params)
    if kind is Family.SEVEN_ANTIHOLE:
        if params:
            raise ValueError("seven-antihole takes no parameters")
        return seven_antihole()
    raise ValueError(f"{kind.value} is not an obstruction family")


def _rng(seed: int) -> np.random.Generator:
    # counter-based: sample i of a parallel sweep can use seed i independently
    return np.random.Generator(np.random.Philox(seed))


def random_unit_interval(n: int, density: float = 0.1, seed: int = 0) -> Graph:
    """Unit interval graph: ``n`` uniform points in [0, 1), joined when within ``density``.

    These graphs are chordal and claw-free, hence clean.  Vertex ids follow
    sampling order, not position.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    x = _rng(seed).random(n)
    close = np.abs(x[:, None] - x[None, :]) <= density
    us, vs = np.nonzero(np.triu(close, 1))
    return build_graph(n, zip(us.tolist(), vs.tolist()))


def random_graph(n: int, edge_prob: float, seed: int) -> Graph:
    rng = _rng(seed)
    us, vs = np.triu_indices(n, 1)
    keep = rng.random(len(us)) < edge_prob
    return build_graph(n, zip(us[keep].tolist(), vs[keep].tolist()))


def random_clean(
    n: int, edge_prob: float, seed: int = 0, max_tries: int = 100
) -> tuple[Graph | None, int]:
    """Rejection-sample G(n, p) until a clean graph appears.

    Returns ``(graph, tries)``; ``graph`` is ``None`` when ``max_tries``
    samples were all unclean.
    """
    if n < 1 or not 0 <= edge_prob <= 1 or max_tries < 1:
        raise ValueError("need n >= 1, 0 <= edge_prob <= 1, max_tries >= 1")
    for attempt in range(max_tries):
        g = random_graph(n, edge_prob, seed * 1_000_003 + attempt)
        if find_clean_obstruction(g) is None:
            return g, attempt + 1
    return None, max_tries


@dataclass(frozen=True)
class FixtureSpec:
    family: Family
    params: dict[str, Any] = field(default_factory=dict, hash=False)

    def build(self) -> Graph | None:
        f, p = Family(self.family), self.params
        if f is Family.CYCLE:
            return cycle(p["n"])
        if f is Family.COMPLEMENT_CYCLE:
            return complement_cycle(p["n"])
        if f is Family.CYCLE_SQUARE:
            return cycle_square(p["n"])
        if f is Family.GK:
            return g_k(p["k"])
        if f is Family.CYCLE_BLOWUP:
            return cycle_blowup(list(p["sizes"]))
        if f is Family.UNIT_INTERVAL_RANDOM:
            return random_unit_interval(p["n"], p.get("density", 0.1), p.get("seed", 0))
        if f is Family.REJECTION_CLEAN_RANDOM:
            return random_clean(
                p["n"], p.get("edge_prob", 0.3), p.get("seed", 0), p.get("max_tries", 100)
            )[0]
        return obstruction_fixture(f.value, **p).graph


def named_fixtures() -> dict[str, Graph]:
    """Every named fixture at its smallest valid size, keyed by a short name."""
    return {
        "C4": cycle(4),
        "C5": cycle(5),
        "C6": cycle(6),
        "C7": cycle(7),
        "antihole7": complement_cycle(7),
        "antihole9": complement_cycle(9),
        "cycle_square9": cycle_square(9),
        "cycle_square10": cycle_square(10),
        "g3": g_k(3),
        "g5": g_k(5),
        "jewel4": jewel(4).graph,
        "jewel5": jewel(5).graph,
        "line_wheel6": line_wheel(6, 4).graph,
        "line_wheel8": line_wheel(8, 5).graph,
        "short_prism1": short_prism(1).graph,
        "short_prism2": short_prism(2).graph,
        "short_prism3": short_prism(3).graph,
        "blowup5": cycle_blowup([2, 1, 3, 1, 2]),
    }
