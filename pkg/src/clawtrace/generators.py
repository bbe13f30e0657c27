"""Graph families: the small-pattern catalog, the two non-traceable
families, complete (bipartite) graphs, seeded random graphs and
exhaustive labelled enumeration."""

from __future__ import annotations

import random
import warnings
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from .errors import BadParameter, GiveUp, TooLarge
from .graph import Graph, build_graph, is_connected


@dataclass(frozen=True)
class PatternId:
    """A catalog pattern.  ``kind`` is one of ``path``, ``c3``, ``z``,
    ``bull``, ``net``, ``wounded``, ``claw``, ``complete``, ``bipartite``;
    ``a``/``b`` carry the size parameters where the kind needs them."""

    kind: str
    a: int = 0
    b: int = 0

    @property
    def name(self) -> str:
        if self.kind == "path":
            return f"P{self.a}"
        if self.kind == "z":
            return f"Z{self.a}"
        if self.kind == "complete":
            return f"K{self.a}"
        if self.kind == "bipartite":
            return f"K{self.a},{self.b}"
        return {"c3": "C3", "bull": "B", "net": "N", "wounded": "W", "claw": "claw"}[self.kind]

    def __str__(self) -> str:
        return self.name


def PathN(i: int) -> PatternId:
    return PatternId("path", i)


def ZN(i: int) -> PatternId:
    return PatternId("z", i)


def CompleteN(m: int) -> PatternId:
    return PatternId("complete", m)


def CompleteBipartite(a: int, b: int) -> PatternId:
    return PatternId("bipartite", a, b)


C3 = PatternId("c3")
CLAW = PatternId("claw")
BULL = PatternId("bull")
NET = PatternId("net")
WOUNDED = PatternId("wounded")
P3 = PathN(3)
P4 = PathN(4)
Z1 = ZN(1)


def parse_pattern(text: str) -> PatternId:
    """Parse names such as ``claw``, ``P4``, ``Z1``, ``C3``, ``B``, ``K5``, ``K2,3``."""
    t = text.strip()
    low = t.lower()
    named = {
        "claw": CLAW, "c3": C3, "b": BULL, "bull": BULL, "n": NET, "net": NET,
        "w": WOUNDED, "wounded": WOUNDED,
    }
    if low in named:
        return named[low]
    try:
        if low.startswith("p"):
            return PathN(int(low[1:]))
        if low.startswith("z"):
            return ZN(int(low[1:]))
        if low.startswith("k"):
            if "," in low:
                a, b = low[1:].split(",")
                return CompleteBipartite(int(a), int(b))
            return CompleteN(int(low[1:]))
    except ValueError:
        pass
    raise BadParameter(f"unknown pattern {text!r}")


def _triangle_with_tails(tails: list[int]) -> tuple[int, list[tuple[int, int]]]:
    """Triangle 0,1,2 with a pendant path of ``tails[t]`` edges hanging off
    triangle vertex ``t``; path vertices are numbered consecutively."""
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    for anchor, length in enumerate(tails):
        prev = anchor
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt, edges


def pattern_edges(pid: PatternId) -> tuple[int, list[tuple[int, int]]]:
    """Vertex count and edges of a pattern in its canonical role order.

    Role orders (these index the ``vertices`` of every embedding):

    - ``P_i``: the path in order.
    - ``C3``, ``K_m``: the clique vertices.
    - ``Z_i``: attachment vertex, the two other triangle vertices, then the
      pendant path outward.
    - bull: degree-2 triangle vertex, the two horned triangle vertices, then
      their horns in the same order.
    - net: the three triangle vertices, then their pendants in the same order.
    - wounded: degree-2 triangle vertex, the vertex with the short horn, the
      vertex with the long horn, the short horn, then the long horn outward.
    - claw / ``K_{a,b}``: center(s) first, then the other side.
    """
    k = pid.kind
    if k == "path":
        if pid.a < 1:
            raise BadParameter("P_i needs i >= 1")
        return pid.a, [(i, i + 1) for i in range(pid.a - 1)]
    if k == "c3":
        return 3, [(0, 1), (0, 2), (1, 2)]
    if k == "z":
        if pid.a < 1:
            raise BadParameter("Z_i needs i >= 1")
        return _triangle_with_tails([pid.a])
    if k == "bull":
        n, e = _triangle_with_tails([0, 1, 1])
        return n, e
    if k == "net":
        return _triangle_with_tails([1, 1, 1])
    if k == "wounded":
        return _triangle_with_tails([0, 1, 2])
    if k == "claw":
        return 4, [(0, 1), (0, 2), (0, 3)]
    if k == "complete":
        if pid.a < 1:
            raise BadParameter("K_m needs m >= 1")
        return pid.a, list(combinations(range(pid.a), 2))
    if k == "bipartite":
        if pid.a < 1 or pid.b < 1:
            raise BadParameter("K_{a,b} needs a, b >= 1")
        return pid.a + pid.b, [(i, pid.a + j) for i in range(pid.a) for j in range(pid.b)]
    raise BadParameter(f"unknown pattern kind {k!r}")


def gen_pattern(pid: PatternId) -> Graph:
    n, edges = pattern_edges(pid)
    return build_graph(n, edges)


def complete_graph(m: int) -> Graph:
    return gen_pattern(CompleteN(m))


def complete_bipartite(a: int, b: int) -> Graph:
    return gen_pattern(CompleteBipartite(a, b))


def path_graph(n: int) -> Graph:
    return gen_pattern(PathN(n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameter("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


# --- the two non-traceable families ----------------------------------------


@dataclass(frozen=True)
class G1Layout:
    clique: tuple[int, ...]
    hubs: tuple[int, ...]
    pendants: tuple[int, ...]


def g1_layout(k: int, n: int) -> G1Layout:
    """Vertex numbering of ``gen_g1``: clique first, then x_1..x_k, then
    x'_1..x'_k."""
    m = n - 2 * k
    return G1Layout(
        clique=tuple(range(m)),
        hubs=tuple(range(m, m + k)),
        pendants=tuple(range(m + k, n)),
    )


def gen_g1(k: int, n: int) -> Graph:
    """Clique ``K_{n-2k}`` joined to an independent set ``x_1..x_k``, each
    ``x_i`` carrying one pendant ``x'_i``."""
    if k < 1 or n < 2 * k + 1:
        raise BadParameter(f"gen_g1 needs k >= 1 and n >= 2k+1, got k={k}, n={n}")
    if k < 3 or n < 4 * k - 3:
        warnings.warn(f"G1({k},{n}) is outside k >= 3, n >= 4k-3", stacklevel=2)
    lay = g1_layout(k, n)
    edges = list(combinations(lay.clique, 2))
    for x, xp in zip(lay.hubs, lay.pendants):
        edges.extend((c, x) for c in lay.clique)
        edges.append((x, xp))
    return build_graph(n, edges)


@dataclass(frozen=True)
class G2Gadget:
    members: tuple[int, ...]
    hub: int
    pendant: int


@dataclass(frozen=True)
class G2Layout:
    clique: tuple[int, ...]
    gadgets: tuple[G2Gadget, G2Gadget, G2Gadget]


def g2_layout(k: int, n: int) -> G2Layout:
    """Vertex numbering of ``gen_g2``: clique first, then per gadget its
    ``k`` members, its hub and its pendant."""
    m = n - 3 * k - 6
    gadgets = []
    base = m
    for _ in range(3):
        gadgets.append(G2Gadget(tuple(range(base, base + k)), base + k, base + k + 1))
        base += k + 2
    return G2Layout(tuple(range(m)), tuple(gadgets))


def gen_g2(k: int, n: int) -> Graph:
    """Clique ``K_{n-3k-6}`` plus three gadgets; each gadget has ``k``
    members joined to the whole clique, a hub adjacent to the members, and
    a pendant on the hub."""
    if k < 1 or n < 3 * k + 7:
        raise BadParameter(f"gen_g2 needs k >= 1 and n >= 3k+7, got k={k}, n={n}")
    if k < 5 or n < 6 * k + 9:
        warnings.warn(f"G2({k},{n}) is outside k >= 5, n >= 6k+9", stacklevel=2)
    lay = g2_layout(k, n)
    edges = list(combinations(lay.clique, 2))
    for gad in lay.gadgets:
        for g in gad.members:
            edges.extend((c, g) for c in lay.clique)
            edges.append((g, gad.hub))
        edges.append((gad.hub, gad.pendant))
    return build_graph(n, edges)


# --- random and exhaustive ---------------------------------------------------

MAX_REJECTIONS = 10**6


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """One G(n, p) draw; pairs are visited in graph6 order (j ascending,
    then i < j ascending), one ``rng.random()`` call per pair."""
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Connected G(n, p) sample by rejection.

    The generator is Python's ``random.Random`` (MT19937) seeded with
    ``seed``; draws are repeated until connected.
    """
    if n < 1:
        raise BadParameter("n must be >= 1")
    if not 0 < p <= 1:
        raise BadParameter("p must lie in (0, 1]")
    rng = random.Random(seed)
    for _ in range(MAX_REJECTIONS):
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g
    raise GiveUp(f"no connected G({n}, {p}) after {MAX_REJECTIONS} draws")


MAX_ENUM_ORDER = 8


def pair_list(n: int) -> list[tuple[int, int]]:
    """Pairs in mask-bit order: bit ``j(j-1)/2 + i`` is pair ``(i, j)``."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def _row_tables(n: int) -> list[list[int]]:
    """Per 8-bit chunk of the edge mask, a table of packed adjacency rows
    (row ``v`` occupies bits ``v*n .. v*n+n-1``)."""
    pairs = pair_list(n)
    tables = []
    for start in range(0, len(pairs), 8):
        chunk = pairs[start:start + 8]
        table = []
        for value in range(1 << len(chunk)):
            packed = 0
            for b, (i, j) in enumerate(chunk):
                if (value >> b) & 1:
                    packed |= (1 << (i * n + j)) | (1 << (j * n + i))
            table.append(packed)
        tables.append(table)
    return tables


def graph_from_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    for b, (i, j) in enumerate(pair_list(n)):
        if (mask >> b) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, rows)


def iter_connected_masks(n: int, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(mask, adjacency rows)`` for connected labelled graphs with
    ``start <= mask < stop``, ascending."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise TooLarge(f"exhaustive enumeration supports 1 <= n <= {MAX_ENUM_ORDER}")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    if n == 1:
        if start <= 0 < stop:
            yield 0, (0,)
        return
    tables = _row_tables(n)
    row_mask = (1 << n) - 1
    full = row_mask
    shifts = [v * n for v in range(n)]
    for mask in range(start, stop):
        packed = 0
        m = mask
        for t in tables:
            packed |= t[m & 255]
            m >>= 8
        rows = tuple((packed >> s) & row_mask for s in shifts)
        # bitset flood fill from vertex 0
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        if seen == full:
            yield mask, rows


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every labelled connected graph on ``n`` vertices, ascending mask."""
    for _, rows in iter_connected_masks(n):
        yield Graph(n, rows)
