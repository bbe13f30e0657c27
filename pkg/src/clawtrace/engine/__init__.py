from .growth import Ear, Grown, Move, NoMove, shortest_ear, try_grow
from .outcome import HamiltonPath, HypothesisViolation, Outcome, Unresolved, verify_violation
from .relaxed import ORPath, deficit, is_hamilton_path, is_path, lift
from .separable import SeparableStructure, StructureViolation, separable_structure
from .solvers import Hypothesis, solve, solve_claw_p4, solve_claw_z1, solve_p3

__all__ = [
    "Ear", "Grown", "HamiltonPath", "Hypothesis", "HypothesisViolation", "Move", "NoMove",
    "ORPath", "Outcome", "SeparableStructure", "StructureViolation", "Unresolved", "deficit",
    "is_hamilton_path", "is_path", "lift", "separable_structure", "shortest_ear", "solve",
    "solve_claw_p4", "solve_claw_z1", "solve_p3", "try_grow", "verify_violation",
]
