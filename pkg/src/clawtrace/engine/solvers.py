"""Certify-or-refute Hamilton path solvers.

Each solver either returns a Hamilton path, or a verified witness that
its hypothesis fails, or (defensively) ``Unresolved``.  Instead of
reasoning about a longest path, the 2-connected loops grow the current
path until no move applies and then read a witness off the stuck
configuration.
"""

from __future__ import annotations

import logging
from enum import Enum

from ..bits import iter_bits, lowest_bit
from ..errors import NotConnected
from ..generators import CLAW, P3, P4, Z1
from ..graph import Graph, cut_vertices, is_connected, is_path_graph, walk_path_graph
from ..heavy import NonHeavyWitness, classify, nonadjacent_pair_sums
from ..patterns import Embedding
from .growth import P4_MOVES, Z1_MOVES, Grown, NoMove, try_grow
from .outcome import HamiltonPath, HypothesisViolation, Outcome, Unresolved, verify_violation
from .relaxed import is_hamilton_path, lift
from .separable import StructureViolation, separable_structure

log = logging.getLogger(__name__)


class Hypothesis(str, Enum):
    P3 = "p3"
    CLAW_Z1 = "claw-z1"
    CLAW_P4 = "claw-p4"
    AUTO = "auto"


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnected("solver needs a connected graph")


def _refute(g: Graph, hyp: str, reason: str, best: list[int], moves: list[str]) -> Outcome:
    """Fall back to a full classification scan for a violation."""
    failed = classify(g, -1).first_failure(hyp)
    if failed is not None:
        flag, w = failed
        return HypothesisViolation(flag, w, moves)
    return Unresolved(reason, best, moves)


def _violation(
    g: Graph, hyp: str, flag: str, witness, best: list[int], moves: list[str]
) -> Outcome:
    out = HypothesisViolation(flag, witness, moves)
    if verify_violation(g, out):
        return out
    return _refute(g, hyp, f"extracted {flag} witness did not verify", best, moves)


def _non_heavy(g: Graph, emb: Embedding) -> NonHeavyWitness:
    return NonHeavyWitness(emb, nonadjacent_pair_sums(g, emb), -1)


def _path_emb(pid, vs: list[int]) -> Embedding:
    if vs[0] > vs[-1]:
        vs = vs[::-1]
    return Embedding(pid, tuple(vs))


def _claw_emb(center: int, leaves: list[int]) -> Embedding:
    return Embedding(CLAW, (center, *sorted(leaves)))


def _z1_emb(attach: int, a: int, b: int, pendant: int) -> Embedding:
    return Embedding(Z1, (attach, min(a, b), max(a, b), pendant))


def _trivial(g: Graph) -> HamiltonPath | None:
    if g.n == 1:
        return HamiltonPath([0])
    if g.n == 2:
        return HamiltonPath([0, 1])
    return None


# --- P3 ---------------------------------------------------------------------


def solve_p3(g: Graph) -> Outcome:
    """Insertion loop: every outside vertex next to the path goes either at
    an end, between two path neighbors, or (via a heavy pair) into a
    relaxed path that is lifted."""
    _require_connected(g)
    n, adj, deg = g.n, g.adj, g.deg
    path = [0]
    inside = 1
    moves: list[str] = []
    while len(path) < n:
        outside = g.full & ~inside
        x = next(v for v in iter_bits(outside) if adj[v] & inside)
        i = next(t for t, v in enumerate(path) if (adj[x] >> v) & 1)
        if i == len(path) - 1:
            path.append(x)
            moves.append(f"EndpointExtend[{x}]")
        elif i == 0:
            path.insert(0, x)
            moves.append(f"EndpointExtend[{x}]")
        elif (adj[x] >> path[i + 1]) & 1:
            path.insert(i + 1, x)
            moves.append(f"Insert[{i}, {x}]")
        else:
            y = path[i + 1]
            if deg[x] + deg[y] >= n - 1:
                path = lift(g, path[: i + 1] + [x] + path[i + 1:])
                moves.append(f"O1Insert[{i}, {x}]")
            else:
                emb = _path_emb(P3, [x, path[i], y])
                return _violation(g, "p3", "p3_heavy", _non_heavy(g, emb), path, moves)
        inside = 0
        for v in path:
            inside |= 1 << v
    return HamiltonPath(path, moves)


# --- shared growth loop -----------------------------------------------------


def _grow_loop(g: Graph, moves_kind: str, hyp: str) -> tuple[list[int], list[str], NoMove | None]:
    path = [0]
    trace: list[str] = []
    while len(path) < g.n:
        res = try_grow(g, path, moves_kind, check_connected=False)
        if isinstance(res, Grown):
            path = res.path
            trace.append(str(res.move))
        else:
            return path, trace, res
    return path, trace, None


def _interleave(first: list[int], second: list[int]) -> list[int]:
    out = []
    for t, a in enumerate(first):
        out.append(a)
        if t < len(second):
            out.append(second[t])
    out.extend(second[len(first):])
    return out


def _complete_join(g: Graph, left: list[int], right: list[int]) -> bool:
    rmask = 0
    for v in right:
        rmask |= 1 << v
    return all(g.adj[u] & rmask == rmask for u in left)


# --- claw + Z1 ----------------------------------------------------------------


def _z1_separable(g: Graph, x: int) -> Outcome:
    n, adj, deg = g.n, g.adj, g.deg
    tag = ["Separable"]
    try:
        st = separable_structure(g, x)
    except StructureViolation as exc:
        return _violation(g, "claw-z1", "claw_heavy", exc.witness, [], tag)
    nx_ = adj[x]
    counts = [(nx_ & m).bit_count() for m in st.masks]
    d_side = 0 if counts[0] >= counts[1] else 1
    c_mask, d_mask = st.masks[1 - d_side], st.masks[d_side]
    w = lowest_bit(nx_ & c_mask)

    # a triangle through x gives a Z1 with a pendant from the other component
    for a in iter_bits(nx_):
        common = nx_ & adj[a] & ~((2 << a) - 1)
        if common:
            b = lowest_bit(common)
            other = c_mask if (d_mask >> a) & 1 else d_mask
            pend = lowest_bit(nx_ & other)
            return _violation(g, "claw-z1", "z1_free", _z1_emb(x, a, b, pend), [], tag)

    ys = list(iter_bits(nx_ & d_mask))
    y, y2 = ys[0], ys[1]
    if deg[y2] > deg[y]:
        y, y2 = y2, y
    everyone = set(range(n))
    fail = None
    dx = deg[x]
    if 2 * dx == n + 1:
        tag.append("CaseA")
        Y = sorted(set(iter_bits(nx_)) - {w})
        Z = sorted(everyone - set(Y) - {x, w})
        if len(Y) != len(Z) + 1:
            fail = "|Y| = |Z| + 1"
        elif not _complete_join(g, Y, Z):
            fail = "Y-Z complete join"
    elif 2 * dx == n:
        tag.append("CaseB")
        Yset = set(iter_bits(nx_)) - {w}
        Zset = everyone - Yset - {x, w}
        y1 = min(Yset, key=lambda v: (deg[v], v))
        z1 = min(Zset, key=lambda v: (-deg[v], v)) if Zset else None
        Y = [y1] + sorted(Yset - {y1})
        Z = ([z1] + sorted(Zset - {z1})) if z1 is not None else []
        if len(Y) != len(Z):
            fail = "|Y| = |Z|"
        elif not g.has_edge(y1, z1):
            fail = "y1 z1 adjacent"
        elif not _complete_join(g, Y[1:], Z):
            fail = "Y - y1 to Z complete join"
    elif 2 * dx <= n - 1:
        tag.append("CaseC")
        around_y = adj[y] & ~(1 << x)
        if not around_y:
            fail = "y has a neighbor besides x"
        else:
            z = min(iter_bits(around_y), key=lambda v: (-deg[v], v))
            Yset = set(iter_bits(adj[z]))
            Zset = everyone - Yset - {x, w}
            x_in_y = sorted(Yset & set(iter_bits(nx_)))
            if x in Yset or w in Yset:
                fail = "x, w outside N(z)"
            elif len(x_in_y) < 2:
                fail = "x has two neighbors in N(z)"
            elif not Zset:
                fail = "Z nonempty"
            else:
                y1, y2c = x_in_y[0], x_in_y[1]
                z1 = min(Zset, key=lambda v: (deg[v], v))
                Y = [y1, y2c] + sorted(Yset - {y1, y2c})
                Z = [z1] + sorted(Zset - {z1})
                if len(Y) != len(Z) + 1:
                    fail = "|Y| = |Z| + 1"
                elif not (g.has_edge(y1, z1) and g.has_edge(y2c, z1)):
                    fail = "y1 z1, y2 z1 adjacent"
                elif not _complete_join(g, Y, Z[1:]):
                    fail = "Y to Z - z1 complete join"
    else:
        fail = "d(x) <= (n+1)/2"
    if fail is None:
        path = [w, x] + _interleave(Y, Z)
        if is_hamilton_path(g, path):
            return HamiltonPath(path, tag)
        fail = "assembled sequence is a Hamilton path"
    return _refute(g, "claw-z1", f"separable case: assertion '{fail}' failed", [], tag)


def _z1_stuck(g: Graph, path: list[int], stuck: NoMove, trace: list[str]) -> Outcome:
    ear = stuck.ear
    if ear is None:
        return _refute(g, "claw-z1", "no ear at a stuck path", path, trace)
    p, i, j = path, ear.i, ear.j
    sides = [(p[i], ear.interior[0], p[i - 1], p[i + 1]), (p[j], ear.interior[-1], p[j - 1], p[j + 1])]
    for center, leaf, a, b in sides:
        if not g.has_edge(a, b):
            w = _non_heavy(g, _claw_emb(center, [leaf, a, b]))
            out = HypothesisViolation("claw_heavy", w, trace)
            if verify_violation(g, out):
                return out
    for center, leaf, a, b in sides:
        if g.has_edge(a, b):
            out = HypothesisViolation("z1_free", _z1_emb(center, a, b, leaf), trace)
            if verify_violation(g, out):
                return out
    return _refute(g, "claw-z1", "stuck path yielded no witness", path, trace)


def solve_claw_z1(g: Graph) -> Outcome:
    _require_connected(g)
    small = _trivial(g)
    if small:
        return small
    if is_path_graph(g):
        return HamiltonPath(walk_path_graph(g), ["PathGraph"])
    cuts = sorted(cut_vertices(g))
    if cuts:
        big = [c for c in cuts if g.deg[c] >= 3]
        if big:
            return _z1_separable(g, big[0])
        log.warning("separable non-path graph without a cut vertex of degree >= 3: %s", g)
    path, trace, stuck = _grow_loop(g, Z1_MOVES, "claw-z1")
    if stuck is None:
        return HamiltonPath(path, trace)
    return _z1_stuck(g, path, stuck, trace)


# --- claw + P4 ----------------------------------------------------------------


def _p4_separable(g: Graph, x: int) -> Outcome:
    adj = g.adj
    tag = ["Separable"]
    try:
        st = separable_structure(g, x)
    except StructureViolation as exc:
        return _violation(g, "claw-p4", "claw_heavy", exc.witness, [], tag)
    nx_ = adj[x]
    for side in (0, 1):
        comp, other = st.masks[side], st.masks[1 - side]
        missing = comp & ~nx_
        if missing:
            two = 0
            for v in iter_bits(nx_ & comp):
                two |= adj[v]
            z = lowest_bit(missing & two)
            y = lowest_bit(nx_ & adj[z] & comp)
            w = lowest_bit(nx_ & other)
            return _violation(g, "claw-p4", "p4_free", _path_emb(P4, [w, x, y, z]), [], tag)
    seq = list(st.components[0]) + [x] + list(st.components[1])
    return HamiltonPath(lift(g, seq), tag + ["Lift"])


def _p4_stuck(g: Graph, path: list[int], stuck: NoMove, trace: list[str]) -> Outcome:
    ear = stuck.ear
    if ear is None:
        return _refute(g, "claw-p4", "no ear at a stuck path", path, trace)
    p, i = path, ear.i
    x1 = ear.interior[0]
    if stuck.k is not None:
        k = stuck.k
        out = HypothesisViolation("p4_free", _path_emb(P4, [x1, p[i], p[k - 1], p[k]]), trace)
        if verify_violation(g, out):
            return out
    if not g.has_edge(p[i - 1], p[i + 1]):
        out = HypothesisViolation("claw_heavy", _non_heavy(g, _claw_emb(p[i], [x1, p[i - 1], p[i + 1]])), trace)
        if verify_violation(g, out):
            return out
    return _refute(g, "claw-p4", "stuck path yielded no witness", path, trace)


def solve_claw_p4(g: Graph) -> Outcome:
    _require_connected(g)
    small = _trivial(g)
    if small:
        return small
    cuts = sorted(cut_vertices(g))
    if cuts:
        return _p4_separable(g, cuts[0])
    path, trace, stuck = _grow_loop(g, P4_MOVES, "claw-p4")
    if stuck is None:
        return HamiltonPath(path, trace)
    return _p4_stuck(g, path, stuck, trace)


# --- front door ---------------------------------------------------------------

_SOLVERS = {
    Hypothesis.P3: solve_p3,
    Hypothesis.CLAW_Z1: solve_claw_z1,
    Hypothesis.CLAW_P4: solve_claw_p4,
}


def solve(g: Graph, hypothesis: Hypothesis | str = Hypothesis.AUTO) -> Outcome:
    """Dispatch to the solver for ``hypothesis``; ``auto`` classifies first
    and uses the first certified hypothesis in the order p3, claw-z1, claw-p4."""
    hyp = Hypothesis(hypothesis)
    _require_connected(g)
    if hyp is Hypothesis.AUTO:
        if g.n == 1:
            return HamiltonPath([0])
        report = classify(g, -1)
        for cand in (Hypothesis.P3, Hypothesis.CLAW_Z1, Hypothesis.CLAW_P4):
            if report.certifies(cand.value):
                hyp = cand
                break
        else:
            return Unresolved("no hypothesis holds", [], [])
    out = _SOLVERS[hyp](g)
    if isinstance(out, HamiltonPath) and not is_hamilton_path(g, out.path):
        raise AssertionError(f"solver produced an invalid Hamilton path {out.path}")
    if isinstance(out, HypothesisViolation) and not verify_violation(g, out):
        raise AssertionError(f"solver produced an unverifiable witness {out}")
    return out
