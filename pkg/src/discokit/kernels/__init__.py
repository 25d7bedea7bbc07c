from .dsd import DominationCore, compute_domination_core, kernelize_dsd
from .isd import IsdCaps, isd_distance_truncate, isd_remove_petal, kernelize_isd, quasi_wide_witness
from .matd import kernelize_matd
from .report import KernelAudit, KernelReport, canonical_no
from .vcd import kernelize_vcd

__all__ = [
    "DominationCore", "IsdCaps", "KernelAudit", "KernelReport", "canonical_no",
    "compute_domination_core", "isd_distance_truncate", "isd_remove_petal",
    "kernelize_dsd", "kernelize_isd", "kernelize_matd", "kernelize_vcd", "quasi_wide_witness",
]
