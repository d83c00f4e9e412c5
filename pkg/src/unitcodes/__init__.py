"""Unit graphs of Z_n (+) Z_m, linear codes from their incidence
matrices, and a verification harness for the associated closed forms."""

from .rings import CaseTag, ParityCase, RingSpec, StructureProfile, classify, euler_phi
from .graphs import UnitGraph, GraphInvariants, build, edge_count_formula, invariants
from .gfmatrix import GfMatrix, PrimeField
from .codes import LinearCode, from_incidence, min_distance_exact, dual_min_distance, predict
from .verify import SweepConfig, check_instance, sweep

__all__ = [
    "CaseTag", "ParityCase", "RingSpec", "StructureProfile", "classify", "euler_phi",
    "UnitGraph", "GraphInvariants", "build", "edge_count_formula", "invariants",
    "GfMatrix", "PrimeField",
    "LinearCode", "from_incidence", "min_distance_exact", "dual_min_distance", "predict",
    "SweepConfig", "check_instance", "sweep",
]
