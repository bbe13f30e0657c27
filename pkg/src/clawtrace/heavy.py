"""Degree-sum machinery: relaxed adjacency, o_r-heaviness of induced
occurrences and hypothesis classification with witnesses.

A nonadjacent pair ``u, v`` is *heavy at level r* when
``d(u) + d(v) >= n + r``; the default level is ``r = -1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .bits import iter_bits
from .errors import PatternTooLarge
from .generators import BULL, C3, CLAW, P3, P4, Z1, PatternId
from .graph import Graph, component_masks, is_connected
from .patterns import Embedding, enumerate_induced, require_valid

DEFAULT_R = -1


@dataclass(frozen=True)
class HeavyPair:
    u: int
    v: int
    sum: int


@dataclass(frozen=True)
class NonHeavyWitness:
    embedding: Embedding
    pair_sums: tuple[tuple[int, int, int], ...]
    r: int = DEFAULT_R

    def to_json(self) -> dict:
        return {
            "kind": "non_heavy",
            "r": self.r,
            "embedding": self.embedding.to_json(),
            "pair_sums": [list(t) for t in self.pair_sums],
        }


def in_e_tilde(g: Graph, u: int, v: int, r: int = DEFAULT_R) -> bool:
    return (g.adj[u] >> v) & 1 == 1 or (u != v and g.deg[u] + g.deg[v] >= g.n + r)


def e_tilde(g: Graph, r: int = DEFAULT_R) -> tuple[int, ...]:
    """Rows of the relaxed adjacency: edges plus heavy nonadjacent pairs."""
    n = g.n
    thr = n + r
    deg = g.deg
    rows = []
    for u in range(n):
        row = g.adj[u]
        need = thr - deg[u]
        for v in range(n):
            if v != u and deg[v] >= need:
                row |= 1 << v
        rows.append(row)
    return tuple(rows)


def nonadjacent_pair_sums(g: Graph, emb: Embedding) -> tuple[tuple[int, int, int], ...]:
    """All nonadjacent pairs of the occurrence (role order) with degree sums."""
    vs = emb.vertices
    out = []
    for a, b in combinations(range(len(vs)), 2):
        u, v = vs[a], vs[b]
        if not (g.adj[u] >> v) & 1:
            out.append((u, v, g.deg[u] + g.deg[v]))
    return tuple(out)


def embedding_o_heavy(g: Graph, emb: Embedding, r: int = DEFAULT_R) -> HeavyPair | None:
    """A heavy pair of maximal degree sum inside the occurrence, if any."""
    require_valid(g, emb)
    best = None
    for u, v, s in nonadjacent_pair_sums(g, emb):
        if s >= g.n + r and (best is None or s > best.sum):
            best = HeavyPair(u, v, s)
    return best


def check_H_o_heavy(g: Graph, pid: PatternId, r: int = DEFAULT_R) -> NonHeavyWitness | None:
    """``None`` when every induced ``pid`` is o_r-heavy, else the first
    occurrence that is not."""
    thr = g.n + r
    for emb in enumerate_induced(g, pid):
        sums = nonadjacent_pair_sums(g, emb)
        if all(s < thr for _, _, s in sums):
            return NonHeavyWitness(emb, sums, r)
    return None


def is_H_o_heavy(g: Graph, pid: PatternId, r: int = DEFAULT_R) -> bool:
    return check_H_o_heavy(g, pid, r) is None


def verify_non_heavy(g: Graph, w: NonHeavyWitness) -> bool:
    """Independent re-check of a witness against the host graph."""
    try:
        require_valid(g, w.embedding)
    except Exception:
        return False
    sums = nonadjacent_pair_sums(g, w.embedding)
    return sums == tuple(w.pair_sums) and all(s < g.n + w.r for _, _, s in sums)


# --- classification --------------------------------------------------------

FLAG_NAMES = ("connected", "p3_heavy", "claw_heavy", "c3_free", "z1_free", "p4_free", "b_free")

_HEAVY_FLAGS = {"p3_heavy": P3, "claw_heavy": CLAW}
_FREE_FLAGS = {"c3_free": C3, "z1_free": Z1, "p4_free": P4, "b_free": BULL}

# hypothesis name -> flags it needs
HYPOTHESES = {
    "p3": ("connected", "p3_heavy"),
    "claw-z1": ("connected", "claw_heavy", "z1_free"),
    "claw-p4": ("connected", "claw_heavy", "p4_free"),
}


@dataclass
class HypothesisReport:
    r: int
    flags: dict[str, bool]
    witnesses: dict[str, object] = field(default_factory=dict)

    def __getattr__(self, name: str):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name]
        raise AttributeError(name)

    def certifies(self, hypothesis: str) -> bool:
        return all(self.flags[f] for f in HYPOTHESES[hypothesis])

    def first_failure(self, hypothesis: str) -> tuple[str, object] | None:
        for f in HYPOTHESES[hypothesis]:
            if not self.flags[f]:
                return f, self.witnesses[f]
        return None

    def to_json(self) -> dict:
        wit = {}
        for k, w in self.witnesses.items():
            if isinstance(w, (Embedding, NonHeavyWitness)):
                wit[k] = w.to_json()
            else:
                wit[k] = w
        return {"r": self.r, "flags": {k: self.flags[k] for k in FLAG_NAMES}, "witnesses": wit}


def classify(g: Graph, r: int = DEFAULT_R) -> HypothesisReport:
    """Evaluate every hypothesis flag by full scans; failed flags carry a
    witness (components for ``connected``, an occurrence for ``*_free``, a
    non-heavy occurrence for ``*_heavy``)."""
    flags: dict[str, bool] = {}
    wit: dict[str, object] = {}
    comps = component_masks(g)
    flags["connected"] = len(comps) == 1
    if len(comps) > 1:
        wit["connected"] = {"kind": "components", "components": [list(iter_bits(c)) for c in comps]}
    for name, pid in _HEAVY_FLAGS.items():
        w = check_H_o_heavy(g, pid, r)
        flags[name] = w is None
        if w is not None:
            wit[name] = w
    for name, pid in _FREE_FLAGS.items():
        e = next(enumerate_induced(g, pid), None)
        flags[name] = e is None
        if e is not None:
            wit[name] = e
    return HypothesisReport(r, flags, wit)


# --- fast boolean predicates for sweeps ------------------------------------
# Same answers as the witness-producing scans above (cross-checked in tests),
# written directly on bitsets.


def _low_degree_masks(g: Graph) -> list[int]:
    """``low[t]`` = vertices of degree < t, for t in 0..n+1."""
    n = g.n
    low = [0] * (n + 2)
    for v, d in enumerate(g.deg):
        for t in range(d + 1, n + 2):
            low[t] |= 1 << v
    return low


def _low(low: list[int], t: int) -> int:
    if t <= 0:
        return 0
    if t >= len(low):
        return low[-1]
    return low[t]


def fast_p3_heavy(g: Graph, r: int = DEFAULT_R) -> bool:
    adj, deg, n = g.adj, g.deg, g.n
    low = _low_degree_masks(g)
    thr = n + r
    for u in range(n):
        nb = adj[u]
        two = 0
        for v in iter_bits(nb):
            two |= adj[v]
        two &= ~nb & ~(1 << u)
        if two & _low(low, thr - deg[u]):
            return False
    return True


def fast_claw_heavy(g: Graph, r: int = DEFAULT_R) -> bool:
    adj, deg, n = g.adj, g.deg, g.n
    low = _low_degree_masks(g)
    thr = n + r
    for c in range(n):
        nb = adj[c]
        if deg[c] < 3:
            continue
        for a in iter_bits(nb):
            da = deg[a]
            rest_a = nb & ~adj[a] & ~((2 << a) - 1)
            for b in iter_bits(rest_a & _low(low, thr - da)):
                db = deg[b]
                third = rest_a & ~adj[b] & ~((2 << b) - 1)
                if third & _low(low, thr - max(da, db)):
                    return False
    return True


def fast_z1_free(g: Graph) -> bool:
    adj = g.adj
    for t0 in range(g.n):
        nb = adj[t0]
        for t1 in iter_bits(nb):
            for t2 in iter_bits(nb & adj[t1] & ~((2 << t1) - 1)):
                if nb & ~adj[t1] & ~adj[t2] & ~(1 << t1) & ~(1 << t2):
                    return False
    return True


def fast_p4_free(g: Graph) -> bool:
    adj = g.adj
    for b in range(g.n):
        for c in iter_bits(adj[b] & ~((2 << b) - 1)):
            ends_b = adj[b] & ~adj[c] & ~(1 << c)
            if not ends_b:
                continue
            ends_c = adj[c] & ~adj[b] & ~(1 << b)
            for a in iter_bits(ends_b):
                if ends_c & ~adj[a]:
                    return False
    return True


def fast_flags(g: Graph, r: int = DEFAULT_R) -> dict[str, bool]:
    """Connectivity and the four sweep-relevant flags, without witnesses."""
    return {
        "connected": is_connected(g),
        "p3_heavy": fast_p3_heavy(g, r),
        "claw_heavy": fast_claw_heavy(g, r),
        "z1_free": fast_z1_free(g),
        "p4_free": fast_p4_free(g),
    }


def all_subsets_o_heavy(g: Graph, r: int, min_size: int = 3) -> tuple[bool, list[int] | None]:
    """Whether every vertex subset of size >= ``min_size`` induces an
    o_r-heavy subgraph; returns the first failing subset otherwise.
    Exponential: for small hosts only."""
    if g.n > 20:
        raise PatternTooLarge("subset scan limited to n <= 20")
    thr = g.n + r
    for mask in range(1 << g.n):
        if mask.bit_count() < min_size:
            continue
        vs = list(iter_bits(mask))
        if not any(
            not (g.adj[u] >> v) & 1 and g.deg[u] + g.deg[v] >= thr
            for u, v in combinations(vs, 2)
        ):
            return False, vs
    return True, None

