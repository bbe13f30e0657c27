"""Solver results."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import Graph
from ..heavy import _FREE_FLAGS, _HEAVY_FLAGS, NonHeavyWitness, verify_non_heavy
from ..patterns import Embedding, is_valid_embedding


@dataclass
class HamiltonPath:
    path: list[int]
    moves: list[str] = field(default_factory=list)
    kind = "path"

    def to_json(self) -> dict:
        return {"outcome": "path", "path": list(self.path), "witness": None, "moves": list(self.moves)}


@dataclass
class HypothesisViolation:
    """``flag`` names the failed hypothesis flag (``claw_heavy``, ``p4_free``, ...)."""

    flag: str
    witness: NonHeavyWitness | Embedding
    moves: list[str] = field(default_factory=list)
    kind = "violation"

    def to_json(self) -> dict:
        return {
            "outcome": "violation",
            "path": None,
            "witness": {"flag": self.flag, **self.witness.to_json()},
            "moves": list(self.moves),
        }


@dataclass
class Unresolved:
    reason: str
    best_path: list[int]
    moves: list[str] = field(default_factory=list)
    kind = "unresolved"

    def to_json(self) -> dict:
        return {
            "outcome": "unresolved",
            "path": list(self.best_path),
            "witness": None,
            "reason": self.reason,
            "moves": list(self.moves),
        }


Outcome = HamiltonPath | HypothesisViolation | Unresolved


def verify_violation(g: Graph, v: HypothesisViolation) -> bool:
    """Re-check a violation witness against ``g`` from scratch."""
    w = v.witness
    if isinstance(w, NonHeavyWitness):
        return _HEAVY_FLAGS.get(v.flag) == w.embedding.pattern and verify_non_heavy(g, w)
    return _FREE_FLAGS.get(v.flag) == w.pattern and is_valid_embedding(g, w)
