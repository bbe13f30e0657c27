"""Structure around a cut vertex of a claw-o_{-1}-heavy graph.

In such a graph removing a cut vertex ``x`` leaves exactly two
components, and two neighbors of ``x`` in the same component are always
adjacent or heavy.  When either fails, the claw centred at ``x`` that
breaks it is returned as the violation.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..bits import iter_bits, lowest_bit
from ..errors import ClawTraceError
from ..generators import CLAW
from ..graph import Graph, component_masks
from ..heavy import NonHeavyWitness, in_e_tilde, nonadjacent_pair_sums
from ..patterns import Embedding


class StructureViolation(ClawTraceError):
    def __init__(self, witness: NonHeavyWitness):
        super().__init__(f"claw hypothesis fails: {witness.embedding.vertices}")
        self.witness = witness


@dataclass(frozen=True)
class SeparableStructure:
    """``components`` are the two components of ``G - x`` as sorted tuples,
    ordered by smallest member."""

    x: int
    components: tuple[tuple[int, ...], tuple[int, ...]]
    masks: tuple[int, int]

    def neighbors_in(self, g: Graph, side: int) -> list[int]:
        return list(iter_bits(g.adj[self.x] & self.masks[side]))


def _claw(g: Graph, center: int, leaves: list[int]) -> NonHeavyWitness:
    emb = Embedding(CLAW, (center, *sorted(leaves)))
    return NonHeavyWitness(emb, nonadjacent_pair_sums(g, emb), -1)


def separable_structure(g: Graph, x: int) -> SeparableStructure:
    comps = component_masks(g, 1 << x)
    if len(comps) < 2:
        raise ValueError(f"vertex {x} is not a cut vertex")
    nx_ = g.adj[x]
    if len(comps) >= 3:
        leaves = [lowest_bit(nx_ & c) for c in comps[:3]]
        raise StructureViolation(_claw(g, x, leaves))
    for side in (0, 1):
        other = lowest_bit(nx_ & comps[1 - side])
        nbrs = list(iter_bits(nx_ & comps[side]))
        for a_i, a in enumerate(nbrs):
            for b in nbrs[a_i + 1:]:
                if not in_e_tilde(g, a, b, -1):
                    raise StructureViolation(_claw(g, x, [a, b, other]))
    return SeparableStructure(
        x,
        (tuple(iter_bits(comps[0])), tuple(iter_bits(comps[1]))),
        (comps[0], comps[1]),
    )
