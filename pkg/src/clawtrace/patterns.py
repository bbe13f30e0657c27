"""Induced occurrences of small catalog patterns.

Each occurrence is reported once: the pattern's automorphisms are broken
by order constraints on the host indices of symmetric roles (for the claw
the three leaves ascend, for ``P_i`` the first end is the smaller one, and
so on).  Within that, the search visits pattern roles in a connected order
and host candidates in ascending index order, so output is deterministic.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from .bits import iter_bits
from .errors import InvalidEmbedding, PatternTooLarge
from .generators import PatternId, parse_pattern, pattern_edges
from .graph import Graph

MAX_PATTERN_ORDER = 8


@dataclass(frozen=True)
class Embedding:
    pattern: PatternId
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"pattern": self.pattern.name, "vertices": list(self.vertices)}

    @classmethod
    def from_json(cls, data: dict) -> Embedding:
        return cls(parse_pattern(data["pattern"]), tuple(data["vertices"]))


@dataclass(frozen=True)
class _Plan:
    order: int
    adj: tuple[int, ...]
    degrees: tuple[int, ...]
    search: tuple[int, ...]
    # for each search step: (role, earlier roles adjacent, earlier roles not adjacent,
    #                        roles that must map below, roles that must map above)
    steps: tuple[tuple[int, tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]], ...]


def _order_constraints(pid: PatternId, order: int) -> list[tuple[int, int]]:
    """Pairs ``(a, b)`` demanding ``map[a] < map[b]``."""
    k = pid.kind
    if k == "path":
        return [(0, order - 1)] if order >= 2 else []
    if k in ("c3", "complete"):
        return [(i, i + 1) for i in range(order - 1)]
    if k in ("z", "bull"):
        return [(1, 2)]
    if k == "net":
        return [(0, 1), (1, 2)]
    if k == "claw":
        return [(1, 2), (2, 3)]
    if k == "bipartite":
        a, b = pid.a, pid.b
        cons = [(i, i + 1) for i in range(a - 1)]
        cons += [(a + j, a + j + 1) for j in range(b - 1)]
        if a == b:
            cons.append((0, a))
        return cons
    return []


@lru_cache(maxsize=None)
def _plan(pid: PatternId) -> _Plan:
    order, edges = pattern_edges(pid)
    if order > MAX_PATTERN_ORDER:
        raise PatternTooLarge(f"pattern {pid.name} has {order} > {MAX_PATTERN_ORDER} vertices")
    adj = [0] * order
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    # BFS from role 0 gives a connected search order
    search = [0]
    seen = 1
    i = 0
    while i < len(search):
        for u in iter_bits(adj[search[i]] & ~seen):
            search.append(u)
            seen |= 1 << u
        i += 1
    for u in range(order):
        if not (seen >> u) & 1:
            search.append(u)
    cons = _order_constraints(pid, order)
    steps = []
    for t, q in enumerate(search):
        earlier = search[:t]
        nbrs = tuple(p for p in earlier if (adj[q] >> p) & 1)
        non = tuple(p for p in earlier if not (adj[q] >> p) & 1)
        below = tuple(a for a, b in cons if b == q and a in earlier)
        above = tuple(b for a, b in cons if a == q and b in earlier)
        steps.append((q, nbrs, non, below, above))
    return _Plan(order, tuple(adj), tuple(a.bit_count() for a in adj), tuple(search), tuple(steps))


def pattern_order(pid: PatternId) -> int:
    return _plan(pid).order


def pattern_adjacency(pid: PatternId) -> tuple[int, ...]:
    return _plan(pid).adj


def enumerate_induced(g: Graph, pid: PatternId) -> Iterator[Embedding]:
    """Yield every induced occurrence of ``pid`` in ``g`` once."""
    plan = _plan(pid)
    if plan.order > g.n:
        return
    adj = g.adj
    # host vertices of at least the role's pattern degree
    min_deg = []
    for need in plan.degrees:
        mask = 0
        for v in range(g.n):
            if g.deg[v] >= need:
                mask |= 1 << v
        min_deg.append(mask)
    assign = [0] * plan.order
    steps = plan.steps
    last = len(steps)

    def rec(t: int, used: int) -> Iterator[Embedding]:
        q, nbrs, non, below, above = steps[t]
        cand = min_deg[q] & ~used
        for p in nbrs:
            cand &= adj[assign[p]]
        for p in non:
            cand &= ~adj[assign[p]]
        for p in below:
            cand &= ~((2 << assign[p]) - 1)
        for p in above:
            cand &= (1 << assign[p]) - 1
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            assign[q] = v
            if t + 1 == last:
                yield Embedding(pid, tuple(assign))
            else:
                yield from rec(t + 1, used | low)

    yield from rec(0, 0)


def find_free_violation(g: Graph, pid: PatternId) -> Embedding | None:
    """First induced occurrence of ``pid``, or ``None`` when ``g`` is free of it."""
    return next(enumerate_induced(g, pid), None)


def count_induced(g: Graph, pid: PatternId) -> int:
    return sum(1 for _ in enumerate_induced(g, pid))


def is_valid_embedding(g: Graph, emb: Embedding) -> bool:
    """Injective, in range, and induced-isomorphic in the given role order."""
    try:
        plan = _plan(emb.pattern)
    except PatternTooLarge:
        return False
    vs = emb.vertices
    if len(vs) != plan.order or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    for a in range(plan.order):
        for b in range(a + 1, plan.order):
            if ((plan.adj[a] >> b) & 1) != ((g.adj[vs[a]] >> vs[b]) & 1):
                return False
    return True


def require_valid(g: Graph, emb: Embedding) -> None:
    if not is_valid_embedding(g, emb):
        raise InvalidEmbedding(f"{emb} is not an induced {emb.pattern.name} in the host")
