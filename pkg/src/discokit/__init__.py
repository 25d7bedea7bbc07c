"""Token-sliding solution discovery: exact solving, kernels and hardness constructions."""
from .discovery import (DiscoveryInstance, DiscoverySequence, Problem, SolveResult, TokenConfiguration,
                        is_feasible, slide_successors, solve, validate_sequence)
from .errors import InvalidArgument, ParseError, PreconditionError, ResourceLimit
from .graph import Graph, edge_id
from .kernels import (DominationCore, IsdCaps, KernelReport, compute_domination_core, isd_distance_truncate,
                      isd_remove_petal, kernelize_dsd, kernelize_isd, kernelize_matd, kernelize_vcd,
                      quasi_wide_witness)
from .pathdecomp import FvsCertificate, PathDecomposition, make_nice, validate, verify_fvs
from .sunflower import Sunflower, find_sunflower
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "DiscoveryInstance", "DiscoverySequence", "DominationCore", "FvsCertificate", "Graph",
    "InvalidArgument", "IsdCaps", "KernelReport", "ParseError", "PathDecomposition", "PreconditionError",
    "Problem", "ResourceLimit", "SolveResult", "Sunflower", "TokenConfiguration", "Verdict",
    "compute_domination_core", "edge_id", "find_sunflower", "is_feasible", "isd_distance_truncate",
    "isd_remove_petal", "kernelize_dsd", "kernelize_isd", "kernelize_matd", "kernelize_vcd", "make_nice",
    "quasi_wide_witness", "slide_successors", "solve", "validate", "validate_sequence", "verify_fvs",
]
