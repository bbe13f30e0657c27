"""Relaxed paths and the deficit-reduction lift.

A relaxed path is a sequence of distinct vertices in which every
consecutive pair is either an edge or a nonadjacent pair of degree sum at
least ``n + r``.  Its deficit counts the consecutive non-edges.  With
``r = -1`` every relaxed path can be turned into a genuine path on a
superset of its vertices; :func:`lift` does that one non-edge at a time.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..errors import DuplicateVertex, InternalStuck, PreconditionViolated
from ..graph import Graph

DEFAULT_R = -1


@dataclass(frozen=True)
class ORPath:
    vertices: tuple[int, ...]
    r: int = DEFAULT_R

    def deficit(self, g: Graph) -> int | None:
        return deficit(g, self.vertices, self.r)


def deficit(g: Graph, seq: Sequence[int], r: int = DEFAULT_R) -> int | None:
    """Number of consecutive non-edges, or ``None`` if some consecutive
    pair is neither an edge nor heavy at level ``r``."""
    if len(set(seq)) != len(seq):
        raise DuplicateVertex(f"repeated vertex in {list(seq)}")
    adj, deg = g.adj, g.deg
    thr = g.n + r
    count = 0
    for a, b in zip(seq, seq[1:]):
        if (adj[a] >> b) & 1:
            continue
        if deg[a] + deg[b] < thr:
            return None
        count += 1
    return count


def is_path(g: Graph, seq: Sequence[int]) -> bool:
    """Distinct vertices with every consecutive pair an edge."""
    if len(set(seq)) != len(seq) or any(not 0 <= v < g.n for v in seq):
        return False
    adj = g.adj
    return all((adj[a] >> b) & 1 for a, b in zip(seq, seq[1:]))


def is_hamilton_path(g: Graph, seq: Sequence[int]) -> bool:
    return len(seq) == g.n and is_path(g, seq)


def _gaps(adj: tuple[int, ...], s: list[int]) -> list[int]:
    return [k for k in range(len(s) - 1) if not (adj[s[k]] >> s[k + 1]) & 1]


def lift(g: Graph, seq: Sequence[int] | ORPath, trace: list[str] | None = None) -> list[int]:
    """Turn a relaxed path (level -1) into a path of ``g`` covering its vertices.

    Repeatedly fixes the first non-edge ``(s[k], s[k+1])`` with the first
    applicable step:

    ``T1``  insert a common neighbor lying outside the sequence;
    ``T2``  ``s[0]`` adjacent to ``s[k+1]``: reverse the prefix ``s[0..k]``;
    ``T3``  ``s[-1]`` adjacent to ``s[k]``: reverse the suffix ``s[k+1..]``;
    ``T4``  some ``i != k`` with ``s[i] ~ s[k]`` and ``s[i+1] ~ s[k+1]``:
            reverse the segment between the two crossing edges.

    Each step lowers the deficit by at least one.  If ``trace`` is given,
    the name of each step taken is appended to it.
    """
    if isinstance(seq, ORPath):
        if seq.r != DEFAULT_R:
            raise PreconditionViolated("lift needs a level -1 relaxed path")
        seq = seq.vertices
    s = list(seq)
    if not s:
        return s
    d = deficit(g, s, DEFAULT_R)
    if d is None:
        raise PreconditionViolated(f"{s} is not a relaxed path at level -1")
    adj = g.adj
    inside = 0
    for v in s:
        inside |= 1 << v
    gaps = _gaps(adj, s)
    while gaps:
        k = gaps[0]
        a, b = s[k], s[k + 1]
        common = adj[a] & adj[b] & ~inside
        if common:
            x = (common & -common).bit_length() - 1
            s.insert(k + 1, x)
            inside |= 1 << x
            step = "T1"
        elif (adj[s[0]] >> b) & 1:
            s[: k + 1] = s[k::-1]
            step = "T2"
        elif (adj[s[-1]] >> a) & 1:
            s[k + 1:] = s[:k:-1]
            step = "T3"
        else:
            na, nb = adj[a], adj[b]
            for i in range(len(s) - 1):
                if i != k and (na >> s[i]) & 1 and (nb >> s[i + 1]) & 1:
                    break
            else:
                raise InternalStuck(f"no lifting step applies at gap {k} of {s}")
            if i < k:
                s[i + 1: k + 1] = s[k:i:-1]
            else:
                s[k + 1: i + 1] = s[i:k:-1]
            step = "T4"
        new_gaps = _gaps(adj, s)
        if len(new_gaps) >= len(gaps):
            raise InternalStuck(f"step {step} did not lower the deficit")
        gaps = new_gaps
        if trace is not None:
            trace.append(step)
    return s
