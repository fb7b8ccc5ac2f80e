"""Exact verification toolkit for extremal singly-even self-dual binary
codes with minimal shadow: Gleason-basis expansions, exact constraint
solving, nonexistence identities, length-threshold scans, and concrete
GF(2) cross-checks."""

from .gleason import ParamSet
from .solver import (ConstraintSystem, ScreenReport, SolveOutcome,
                     WeightEnumerator, build_constraints, classify,
                     enumerators_from_c, screen, shadow_coefficient, solve)

__version__ = "1.0.0"

__all__ = [
    "ParamSet", "ConstraintSystem", "SolveOutcome", "WeightEnumerator",
    "ScreenReport", "build_constraints", "solve", "classify",
    "enumerators_from_c", "screen", "shadow_coefficient", "__version__",
]
