"""Closed-form budgets and width bounds, keyed by construction kind."""
from __future__ import annotations

from math import comb, log2

BUDGETS = {
    "vcd-red": ("m + 3rn", lambda p: p["m"] + 3 * p["r"] * p["n"]),
    "isd-red": ("m + 3sigma", lambda p: p["m"] + 3 * p["sigma"]),
    "dsd-red": ("2m + 4rn", lambda p: 2 * p["m"] + 4 * p["r"] * p["n"]),
    "vcd-comp": ("2m + 5sigma + 1", lambda p: 2 * p["m"] + 5 * p["sigma"] + 1),
    "isd-comp": ("3m + 5sigma + 1", lambda p: 3 * p["m"] + 5 * p["sigma"] + 1),
    "dsd-comp": ("2m + 6sigma + 1", lambda p: 2 * p["m"] + 6 * p["sigma"] + 1),
    "fvs-vcd": ("(12n + 2)C(kappa,2) + 2kappa",
                lambda p: (12 * p["n"] + 2) * comb(p["kappa"], 2) + 2 * p["kappa"]),
    "fvs-isd": ("(4n^2 + 1)C(kappa,2) + 4nm + kappa",
                lambda p: (4 * p["n"] ** 2 + 1) * comb(p["kappa"], 2) + 4 * p["n"] * p["m"] + p["kappa"]),
    "fvs-dsd": ("(8n + 1)C(kappa,2) + kappa",
                lambda p: (8 * p["n"] + 1) * comb(p["kappa"], 2) + p["kappa"]),
    "spd-comp": ("n^2", lambda p: p["n"] ** 2),
    "vcut-comp": ("log t + 2(2kappa - 2)(m - 1)",
                  lambda p: int(log2(p["t"])) + 2 * (2 * p["kappa"] - 2) * (p["m"] - 1)),
}

# extra width allowed over the source decomposition's width
WIDTH_MARGINS = {
    "GH": 6,
    "GH-supplier": 7,
    "aug-GH": 8,
    "aug-GH-supplier": 9,
    "isd-red": 6,
    "vcd-red": 7,
    "dsd-red": 9,
    "vcd-comp": 10,
    "isd-comp": 10,
    "dsd-comp": 12,
}

FVS_SIZES = {
    "DS": ("4C(kappa,2)", lambda k: 4 * comb(k, 2)),
    "VC": ("8C(kappa,2)", lambda k: 8 * comb(k, 2)),
    "IS": ("5C(kappa,2) + kappa", lambda k: 5 * comb(k, 2) + k),
}


def budget(kind: str, params) -> int:
    return BUDGETS[kind][1](params)


def budget_formula(kind: str) -> str:
    return BUDGETS[kind][0]
