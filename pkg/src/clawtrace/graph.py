"""Immutable simple undirected graphs on bitset adjacency rows, plus I/O
and connectivity primitives."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .bits import iter_bits, lowest_bit
from .errors import (
    IndexOutOfRange,
    LoopEdge,
    MalformedEdgeList,
    MalformedGraph6,
    TooLarge,
)

MAX_ORDER = 1 << 20


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    Instances are immutable and hashable.
    """

    __slots__ = ("n", "adj", "deg", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)
        self.deg = tuple(row.bit_count() for row in self.adj)
        self._hash: int | None = None

    def __setattr__(self, name, value):
        if name != "_hash" and hasattr(self, name):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={write_graph6(self)!r})"

    @property
    def m(self) -> int:
        return sum(self.deg) // 2

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.deg[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degree_sequence(self) -> list[int]:
        return sorted(self.deg)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in iter_bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    row |= 1 << j
            rows.append(row)
        return Graph(len(vertices), rows)

    def check_invariants(self) -> None:
        assert len(self.adj) == self.n
        for v, row in enumerate(self.adj):
            assert row >> self.n == 0, "neighbor index out of range"
            assert not (row >> v) & 1, "loop"
            for u in iter_bits(row):
                assert (self.adj[u] >> v) & 1, "asymmetric adjacency"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise TooLarge(f"vertex count {n} outside [1, {MAX_ORDER}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


# --- graph6 -----------------------------------------------------------------


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    out = [_encode_order(g.n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise MalformedGraph6(f"illegal byte in {s!r}")
    if codes[0] != 63:
        n, pos = codes[0], 1
    elif len(codes) >= 2 and codes[1] != 63:
        if len(codes) < 4:
            raise MalformedGraph6("truncated vertex count")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        pos = 4
    else:
        if len(codes) < 8:
            raise MalformedGraph6("truncated vertex count")
        n = 0
        for c in codes[2:8]:
            n = (n << 6) | c
        pos = 8
    if not 1 <= n <= MAX_ORDER:
        raise MalformedGraph6(f"vertex count {n} unsupported")
    nbits = n * (n - 1) // 2
    body = codes[pos:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes, got {len(body)}")
    rows = [0] * n
    i, j = 0, 1
    k = 0
    for c in body:
        for shift in range(5, -1, -1):
            if k == nbits:
                if (c >> shift) & 1:
                    raise MalformedGraph6("nonzero padding bits")
                continue
            if (c >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, rows)


# --- plain edge list ----------------------------------------------------------


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse the ``n m`` header / ``u v`` lines format; ``#`` starts a comment."""
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows:
        raise MalformedEdgeList("missing header")
    try:
        n, m = (int(t) for t in rows[0])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise MalformedEdgeList(str(exc)) from exc
    if len(pairs) != m:
        raise MalformedEdgeList(f"header announces {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def read_graph(text: str) -> Graph:
    """Accept either graph6 or the edge-list format."""
    stripped = text.strip()
    first = stripped.splitlines()[0] if stripped else ""
    if len(first.split()) == 2 or "\n" in stripped:
        return parse_edgelist(text)
    return parse_graph6(stripped)


# --- connectivity -----------------------------------------------------------


@dataclass(frozen=True)
class Connectivity:
    components: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    is_biconnected: bool

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1


def component_masks(g: Graph, removed: int = 0) -> list[int]:
    """Components of ``g`` minus the vertex set ``removed``, as bitsets,
    ordered by smallest member."""
    remaining = g.full & ~removed
    adj = g.adj
    comps = []
    while remaining:
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= remaining & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        remaining &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    adj = g.adj
    seen = 1
    frontier = 1
    full = g.full
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points via iterative lowpoint DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)
    return frozenset(cuts)


def connectivity(g: Graph) -> Connectivity:
    comps = tuple(tuple(iter_bits(c)) for c in component_masks(g))
    cuts = cut_vertices(g)
    return Connectivity(
        components=comps,
        cut_vertices=cuts,
        is_biconnected=len(comps) == 1 and not cuts and g.n >= 3,
    )


def is_path_graph(g: Graph) -> bool:
    """True iff ``g`` is itself a path ``P_n``."""
    return g.m == g.n - 1 and max(g.deg) <= 2 and is_connected(g)


def walk_path_graph(g: Graph) -> list[int]:
    """Vertex order of a graph already known to be a path."""
    if g.n == 1:
        return [0]
    start = min(v for v in range(g.n) if g.deg[v] == 1)
    order = [start]
    prev = -1
    cur = start
    while len(order) < g.n:
        nxt = lowest_bit(g.adj[cur] & ~(1 << prev if prev >= 0 else 0))
        order.append(nxt)
        prev, cur = cur, nxt
    return order
