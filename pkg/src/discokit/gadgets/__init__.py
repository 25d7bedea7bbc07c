"""Hardness constructions: gadgets, reductions, compositions and their witnesses."""
from .compositions import compose_dsd, compose_isd, compose_vcd
from .forge import Forge, LabeledConstruction, Provenance
from .formulas import BUDGETS, FVS_SIZES, WIDTH_MARGINS, budget, budget_formula
from .fvs import fvs_size, reduce_fvs, witness_from_clique
from .gadgets import (attach_supplier, build_edge_gadget, build_GH, build_selector, build_vertex_gadget,
                      supplier_count)
from .reductions import build_augmented_GH, reduce_dsd, reduce_isd, reduce_vcd
from .sources import (HamPathInstance, MCCInstance, MMOInstance, Orientation, RainbowInstance,
                      is_hamiltonian_path, is_rainbow_matching, mmo_feasible, out_weights, solve_hampath,
                      solve_mcc, solve_mmo, solve_rainbow)
from .spd import compose_spd, witness_from_hampath
from .vcut import compose_vcutd, witness_from_rainbow
from .witness import witness_from_orientation

BUILDERS = {
    "vcd-red": reduce_vcd,
    "isd-red": reduce_isd,
    "dsd-red": reduce_dsd,
    "vcd-comp": compose_vcd,
    "isd-comp": compose_isd,
    "dsd-comp": compose_dsd,
    "fvs-vcd": lambda mcc: reduce_fvs("VC", mcc)[0],
    "fvs-isd": lambda mcc: reduce_fvs("IS", mcc)[0],
    "fvs-dsd": lambda mcc: reduce_fvs("DS", mcc)[0],
    "spd-comp": compose_spd,
    "vcut-comp": compose_vcutd,
}


def witness_for(construction: LabeledConstruction, source_witness):
    """Forward slide schedule for any construction, dispatched on its kind."""
    kind = construction.extra.get("kind", "")
    if kind.startswith("fvs-"):
        return witness_from_clique(construction, source_witness)
    if kind == "spd-comp":
        return witness_from_hampath(construction, source_witness)
    if kind == "vcut-comp":
        return witness_from_rainbow(construction, source_witness)
    return witness_from_orientation(kind, construction, source_witness)


__all__ = [
    "BUDGETS", "BUILDERS", "FVS_SIZES", "Forge", "HamPathInstance", "LabeledConstruction", "MCCInstance",
    "MMOInstance", "Orientation", "Provenance", "RainbowInstance", "WIDTH_MARGINS", "attach_supplier",
    "budget", "budget_formula", "build_GH", "build_augmented_GH", "build_edge_gadget", "build_selector", "build_vertex_gadget",
    "compose_dsd", "compose_isd", "compose_spd", "compose_vcd", "compose_vcutd", "fvs_size",
    "is_hamiltonian_path", "is_rainbow_matching", "mmo_feasible", "out_weights", "reduce_dsd",
    "reduce_fvs", "reduce_isd", "reduce_vcd", "solve_hampath", "solve_mcc", "solve_mmo", "solve_rainbow",
    "supplier_count", "witness_for", "witness_from_clique", "witness_from_hampath",
    "witness_from_orientation", "witness_from_rainbow",
]
