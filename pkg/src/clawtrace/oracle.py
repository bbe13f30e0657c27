"""Ground truth for traceability: exact subset DP, cheap sound
non-traceability certificates, and budgeted backtracking."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .bits import iter_bits, lowest_bit
from .errors import TooLarge
from .graph import Graph, component_masks, cut_vertices

DP_MAX_ORDER = 24
_PURE_DP_MAX = 10


@dataclass(frozen=True)
class DPResult:
    traceable: bool
    path: list[int] | None


def _reconstruct(g: Graph, reach, full: int) -> list[int]:
    adj = g.adj
    mask = full
    v = lowest_bit(int(reach[mask]))
    path = [v]
    while mask != (1 << v):
        prev = mask ^ (1 << v)
        u = lowest_bit(int(reach[prev]) & adj[v])
        path.append(u)
        mask, v = prev, u
    return path


def _dp_pure(g: Graph) -> list[int]:
    n, adj = g.n, g.adj
    size = 1 << n
    reach = [0] * size
    for v in range(n):
        reach[1 << v] = 1 << v
    for mask in range(1, size):
        ends = reach[mask]
        if not ends:
            continue
        ext = 0
        while ends:
            low = ends & -ends
            ext |= adj[low.bit_length() - 1]
            ends ^= low
        ext &= ~mask
        while ext:
            low = ext & -ext
            reach[mask | low] |= low
            ext ^= low
    return reach


def _dp_numpy(g: Graph) -> np.ndarray:
    n = g.n
    size = 1 << n
    reach = np.zeros(size, dtype=np.uint32)
    masks = np.arange(size, dtype=np.uint32)
    pop = np.zeros(size, dtype=np.uint8)
    for v in range(n):
        pop += ((masks >> v) & 1).astype(np.uint8)
    order = np.argsort(pop, kind="stable").astype(np.uint32)
    bounds = np.searchsorted(pop[order], np.arange(n + 2))
    del masks
    for v in range(n):
        reach[1 << v] = 1 << v
    adj = [np.uint32(a) for a in g.adj]
    for s in range(1, n):
        layer = order[bounds[s]:bounds[s + 1]]
        layer = layer[reach[layer] != 0]
        if layer.size == 0:
            break
        ends = reach[layer]
        for v in range(n):
            bit = np.uint32(1 << v)
            ok = ((layer & bit) == 0) & ((ends & adj[v]) != 0)
            targets = layer[ok] | bit
            reach[targets] |= bit
    return reach


def traceable_dp(g: Graph) -> DPResult:
    """Held-Karp style DP over (vertex subset, endpoint) states."""
    if g.n > DP_MAX_ORDER:
        raise TooLarge(f"DP limited to n <= {DP_MAX_ORDER}")
    reach = _dp_pure(g) if g.n <= _PURE_DP_MAX else _dp_numpy(g)
    full = g.full
    if not int(reach[full]):
        return DPResult(False, None)
    return DPResult(True, _reconstruct(g, reach, full))


# --- certificates ---------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """``kind`` is ``disconnected``, ``pendant_excess`` or ``cutset_excess``.
    ``vertices`` lists the degree-1 vertices or the separator."""

    kind: str
    vertices: tuple[int, ...] = ()
    components: int = 0

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices), "components": self.components}


def _components_after(g: Graph, removed: int) -> int:
    return len(component_masks(g, removed))


def nontraceability_certificate(g: Graph, max_separator: int = 3) -> Certificate | None:
    """A cheap sound proof of non-traceability, or ``None`` (inconclusive)."""
    ncomp = _components_after(g, 0)
    if ncomp > 1:
        return Certificate("disconnected", (), ncomp)
    pendants = tuple(v for v in range(g.n) if g.deg[v] == 1)
    if len(pendants) >= 3:
        return Certificate("pendant_excess", pendants)
    for size in range(1, min(max_separator, g.n - 1) + 1):
        for sep in combinations(range(g.n), size):
            removed = 0
            for v in sep:
                removed |= 1 << v
            c = _components_after(g, removed)
            if c > size + 1:
                return Certificate("cutset_excess", sep, c)
    cuts = tuple(sorted(cut_vertices(g)))
    if len(cuts) > max_separator:
        removed = 0
        for v in cuts:
            removed |= 1 << v
        c = _components_after(g, removed)
        if c > len(cuts) + 1:
            return Certificate("cutset_excess", cuts, c)
    return None


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    """Recount from scratch with a plain DFS, independent of the bitset code."""
    if cert.kind == "pendant_excess":
        return len(cert.vertices) >= 3 and all(len(g.neighbors(v)) == 1 for v in cert.vertices)
    removed = set(cert.vertices)
    seen: set[int] = set(removed)
    count = 0
    for s in range(g.n):
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    if cert.kind == "disconnected":
        return not removed and count > 1 and count == cert.components
    if cert.kind == "cutset_excess":
        return count == cert.components and count > len(removed) + 1
    return False


# --- backtracking -----------------------------------------------------------


class _Timeout(Exception):
    pass


def _connected_within(adj: tuple[int, ...], allowed: int) -> bool:
    if not allowed:
        return True
    seen = allowed & -allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen == allowed


def traceable_backtrack(g: Graph, deadline: float | None = None) -> list[int] | None:
    """Depth-first path extension with pruning.  Before descending, the
    unvisited set must stay connected to the current end, and at most one
    unvisited vertex may have a single remaining neighbor (it must be the
    final vertex).  Raises ``_Timeout`` past ``deadline``."""
    n, adj = g.n, g.adj
    full = g.full
    nodes = [0]

    def feasible(end: int, unvisited: int) -> bool:
        if not unvisited:
            return True
        if not adj[end] & unvisited:
            return False
        if not _connected_within(adj, unvisited):
            return False
        region = unvisited | (1 << end)
        tight = 0
        for v in iter_bits(unvisited):
            if (adj[v] & region).bit_count() <= 1:
                tight += 1
                if tight > 1:
                    return False
        return True

    def extend(path: list[int], visited: int) -> list[int] | None:
        if visited == full:
            return path
        nodes[0] += 1
        if deadline is not None and nodes[0] & 1023 == 0 and time.perf_counter() > deadline:
            raise _Timeout
        end = path[-1]
        for u in iter_bits(adj[end] & ~visited):
            nv = visited | (1 << u)
            if feasible(u, full & ~nv):
                path.append(u)
                got = extend(path, nv)
                if got is not None:
                    return got
                path.pop()
        return None

    for s in range(n):
        if feasible(s, full & ~(1 << s)):
            got = extend([s], 1 << s)
            if got is not None:
                return got
    return None


@dataclass(frozen=True)
class SearchResult:
    """``status`` is ``yes``, ``no`` or ``timeout``.  A ``no`` carries either
    a certificate or ``exhausted=True`` (complete search / exact DP)."""

    status: str
    path: list[int] | None = None
    certificate: Certificate | None = None
    exhausted: bool = False
    method: str = ""

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "path": self.path,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "exhausted": self.exhausted,
            "method": self.method,
        }


def traceable_search(g: Graph, budget_ms: float = 1000.0, method: str = "auto") -> SearchResult:
    """Certificate first; then exact DP (``n <= 24``) or backtracking.

    ``method`` may force ``dp`` or ``backtrack``.
    """
    cert = nontraceability_certificate(g)
    if cert is not None:
        return SearchResult("no", certificate=cert, method="certificate")
    if method == "dp" or (method == "auto" and g.n <= DP_MAX_ORDER):
        res = traceable_dp(g)
        if res.traceable:
            return SearchResult("yes", path=res.path, method="dp")
        return SearchResult("no", exhausted=True, method="dp")
    deadline = time.perf_counter() + budget_ms / 1000.0
    try:
        path = traceable_backtrack(g, deadline)
    except _Timeout:
        return SearchResult("timeout", method="backtrack")
    if path is not None:
        return SearchResult("yes", path=path, method="backtrack")
    return SearchResult("no", exhausted=True, method="backtrack")
