"""Path growth moves.

Every move turns the current path ``P = v_0 .. v_{p-1}`` plus some outside
vertices into a relaxed path (level -1) on a strictly larger vertex set and
lifts it.  Moves are tried cheapest first and the first applicable one
wins; all scans ascend by position and vertex index.

Ear moves work on a shortest ear ``R = v_i x_1 .. x_r v_j`` (``i < j``,
interior outside ``P``).  They are only reached when neither path end has
an outside neighbor, so ``0 < i < j < p-1``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from ..bits import iter_bits
from ..errors import NotConnected
from ..graph import Graph, is_connected
from .relaxed import DEFAULT_R, lift

Z1_MOVES = "z1"
P4_MOVES = "p4"
BASIC_MOVES = "basic"
MOVE_SETS = (BASIC_MOVES, Z1_MOVES, P4_MOVES)


@dataclass(frozen=True)
class Move:
    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"{self.kind}{list(self.params)}" if self.params else self.kind


@dataclass(frozen=True)
class Ear:
    i: int
    j: int
    interior: tuple[int, ...]


@dataclass(frozen=True)
class Grown:
    path: list[int]
    move: Move


@dataclass(frozen=True)
class NoMove:
    """No move applied.  ``ear`` is the shortest ear examined (``None`` if
    the path has none); ``k`` is the position of the first vertex after
    ``v_i`` that is nonadjacent to ``v_i``, when the P4 move set got that far."""

    ear: Ear | None
    k: int | None = None
    notes: list[str] = field(default_factory=list)


def _relaxed(g: Graph, u: int, v: int) -> bool:
    return (g.adj[u] >> v) & 1 == 1 or g.deg[u] + g.deg[v] >= g.n + DEFAULT_R


def shortest_ear(g: Graph, path: Sequence[int]) -> Ear | None:
    """Shortest path with both ends on ``path``, distinct ends and all
    interior vertices outside; ties go to the smallest ``(i, j)`` and then
    the lexicographically smallest interior."""
    adj = g.adj
    pos = {v: t for t, v in enumerate(path)}
    inside = 0
    for v in path:
        inside |= 1 << v
    outside = g.full & ~inside
    if not outside:
        return None

    def layers_from(v: int) -> dict[int, int]:
        dist: dict[int, int] = {}
        frontier = adj[v] & outside
        d = 1
        seen = frontier
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                dist[u] = d
                nxt |= adj[u]
            frontier = nxt & outside & ~seen
            seen |= frontier
            d += 1
        return dist

    best: tuple[int, int, int] | None = None
    for i, vi in enumerate(path):
        di = layers_from(vi)
        if not di:
            continue
        reach = 0
        for u in di:
            reach |= adj[u]
        for vj in iter_bits(reach & inside):
            j = pos[vj]
            if j <= i:
                continue
            r = min(d for u, d in di.items() if (adj[u] >> vj) & 1)
            key = (r, i, j)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    r, i, j = best
    dj = layers_from(path[j])
    interior = []
    cur = path[i]
    for t in range(r):
        need = r - t
        cand = [u for u in iter_bits(adj[cur] & outside) if dj.get(u) == need]
        cur = cand[0]
        interior.append(cur)
    return Ear(i, j, tuple(interior))


def _grow(g: Graph, relaxed: list[int], old_size: int, move: Move) -> Grown:
    out = lift(g, relaxed)
    assert len(out) > old_size
    return Grown(out, move)


def _endpoint(g: Graph, p: list[int], outside: int) -> Grown | None:
    tail = g.adj[p[-1]] & outside
    if tail:
        x = (tail & -tail).bit_length() - 1
        return Grown(p + [x], Move("EndpointExtend", (x,)))
    head = g.adj[p[0]] & outside
    if head:
        x = (head & -head).bit_length() - 1
        return Grown([x] + p, Move("EndpointExtend", (x,)))
    return None


def _o1_insert(g: Graph, p: list[int], outside: int) -> Grown | None:
    adj = g.adj
    for t, v in enumerate(p):
        for x in iter_bits(adj[v] & outside):
            if t + 1 < len(p) and _relaxed(g, x, p[t + 1]):
                return _grow(g, p[: t + 1] + [x] + p[t + 1:], len(p), Move("O1Insert", (t, x)))
            if t > 0 and _relaxed(g, x, p[t - 1]):
                return _grow(g, p[:t] + [x] + p[t:], len(p), Move("O1Insert", (t, x)))
    return None


def _ear_endpoint(g: Graph, p: list[int], ear: Ear) -> Grown | None:
    # only reachable if an ear touches a path end, which the endpoint move pre-empts
    R = list(ear.interior)
    if ear.i == 0:
        return Grown(R[::-1] + p, Move("EarEndpointAttach", (ear.i, ear.j)))
    if ear.j == len(p) - 1:
        return Grown(p + R[::-1], Move("EarEndpointAttach", (ear.i, ear.j)))
    return None


def _claim1(g: Graph, p: list[int], ear: Ear) -> Grown | None:
    """Interior ear vertex relaxed-adjacent to a path neighbor of an ear end."""
    i, j, R = ear.i, ear.j, list(ear.interior)
    for t, x in enumerate(R):
        # y = v_{i-1}: v_0..v_{i-1} x x_{t-1} .. x_1 v_i .. v_end
        if i > 0 and _relaxed(g, x, p[i - 1]):
            seq = p[:i] + R[t::-1] + p[i:]
            return _grow(g, seq, len(p), Move("Claim1Rotation", (i, j, t, i - 1)))
        # y = v_{i+1}: v_0..v_i x_1 .. x then v_{i+1}..
        if i + 1 < len(p) and _relaxed(g, x, p[i + 1]):
            seq = p[: i + 1] + R[: t + 1] + p[i + 1:]
            return _grow(g, seq, len(p), Move("Claim1Rotation", (i, j, t, i + 1)))
        # y = v_{j-1}: v_0..v_{j-1} x .. x_r v_j ..
        if j - 1 >= 0 and _relaxed(g, x, p[j - 1]):
            seq = p[:j] + R[t:] + p[j:]
            return _grow(g, seq, len(p), Move("Claim1Rotation", (i, j, t, j - 1)))
        # y = v_{j+1}: v_0..v_j x_r .. x then v_{j+1}..
        if j + 1 < len(p) and _relaxed(g, x, p[j + 1]):
            seq = p[: j + 1] + R[t:][::-1] + p[j + 1:]
            return _grow(g, seq, len(p), Move("Claim1Rotation", (i, j, t, j + 1)))
    return None


def _claim3_z1(g: Graph, p: list[int], ear: Ear) -> Grown | None:
    i, j, R = ear.i, ear.j, list(ear.interior)
    if _relaxed(g, p[i - 1], p[j - 1]):
        seq = p[:i] + p[j - 1:i - 1:-1] + R + p[j:]
        return _grow(g, seq, len(p), Move("Claim3RotationZ1", (i, j, 0)))
    if _relaxed(g, p[i + 1], p[j + 1]):
        seq = p[: i + 1] + R + p[j:i:-1] + p[j + 1:]
        return _grow(g, seq, len(p), Move("Claim3RotationZ1", (i, j, 1)))
    return None


def _claim3_p4(g: Graph, p: list[int], ear: Ear) -> Grown | None:
    i, j, R = ear.i, ear.j, list(ear.interior)
    if j >= i + 2 and g.has_edge(p[i], p[j - 1]) and _relaxed(g, p[i - 1], p[i + 1]):
        seq = p[:i] + p[i + 1:j] + [p[i]] + R + p[j:]
        return _grow(g, seq, len(p), Move("Claim3RotationP4", (i, j)))
    return None


def first_nonneighbor(g: Graph, p: list[int], ear: Ear) -> int | None:
    """Position of the first vertex of ``v_{i+1} .. v_{j-1}`` nonadjacent to ``v_i``."""
    vi = p[ear.i]
    for k in range(ear.i + 1, ear.j):
        if not g.has_edge(vi, p[k]):
            return k
    return None


def _claim4_p4(g: Graph, p: list[int], ear: Ear) -> Grown | None:
    i, j = ear.i, ear.j
    if not _relaxed(g, p[i - 1], p[i + 1]):
        return None
    k = first_nonneighbor(g, p, ear)
    if k is None:
        return None
    x1 = ear.interior[0]
    vi = p[i]
    if k - 1 >= i + 2 and g.has_edge(x1, p[k - 1]):
        seq = p[:i] + p[i + 1:k - 1] + [vi, x1] + p[k - 1:]
        return _grow(g, seq, len(p), Move("Claim4RotationP4a", (i, j, k)))
    if g.has_edge(x1, p[k]):
        seq = p[:i] + p[i + 1:k] + [vi, x1] + p[k:]
        return _grow(g, seq, len(p), Move("Claim4RotationP4b", (i, j, k)))
    return None


def try_grow(
    g: Graph, path: Sequence[int], moves: str = BASIC_MOVES, *, check_connected: bool = True
) -> Grown | NoMove:
    """Grow a non-spanning path by one move from the chosen move set.

    ``basic`` = endpoint extension, ear-endpoint attachment, relaxed
    insertion and the interior-ear rotation; ``z1`` adds the two rotations
    through ``v_{i-1}v_{j-1}`` / ``v_{i+1}v_{j+1}``; ``p4`` adds the
    rotations through ``v_i v_{j-1}`` and through the first non-neighbor
    of ``v_i`` after it.
    """
    if moves not in MOVE_SETS:
        raise ValueError(f"unknown move set {moves!r}")
    if check_connected and not is_connected(g):
        raise NotConnected("try_grow needs a connected graph")
    p = list(path)
    inside = 0
    for v in p:
        inside |= 1 << v
    outside = g.full & ~inside
    if not outside:
        raise ValueError("path already spans the graph")
    if not p:
        return Grown([0], Move("EndpointExtend", (0,)))
    got = _endpoint(g, p, outside) or _o1_insert(g, p, outside)
    if got:
        return got
    ear = shortest_ear(g, p)
    if ear is None:
        return NoMove(None, notes=["no ear"])
    if ear.i == 0 or ear.j == len(p) - 1:
        got = _ear_endpoint(g, p, ear)
        if got:
            return got
        return NoMove(ear, notes=["ear touches a path end"])
    got = _claim1(g, p, ear)
    if got is None and moves == Z1_MOVES:
        got = _claim3_z1(g, p, ear)
    if got is None and moves == P4_MOVES:
        got = _claim3_p4(g, p, ear) or _claim4_p4(g, p, ear)
    if got:
        return got
    k = first_nonneighbor(g, p, ear) if moves == P4_MOVES else None
    return NoMove(ear, k)
