"""Parabolic subgroups of Artin groups of type A, B, Ã and C̃ via curves in
punctured disks, on top of a Garside normal form for braid groups."""
from .artin import (
    Family,
    GroupId,
    GroupWord,
    eta,
    factor_semidirect,
    lam,
    parse_group_word,
    psi,
    rewrite_pure1,
    theta,
    type_a,
    type_at,
    type_b,
    type_ct,
)
from .braid import BraidWord, NormalForm, equal, multiply, normal_form, parse_word
from .curves import (
    Curve,
    act,
    curve_equal,
    curve_of,
    curves_disjoint,
    round_curve,
    simul_standardize,
    standardize_1last,
    standardize_1pure,
)
from .errors import InvariantViolation, ParabolicaError
from .graphs import CurveGraphSlice, Mode, build_slice, density_witness, iso_spot_check
from .parabolic import (
    CyclicInterval,
    Interval,
    ParabolicSubgroup,
    central_element,
    parab_adjacent,
    parab_equal,
    standard,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "Curve", "CurveGraphSlice", "CyclicInterval", "Family", "GroupId", "GroupWord",
    "Interval", "InvariantViolation", "Mode", "NormalForm", "ParabolicSubgroup", "ParabolicaError",
    "act", "build_slice", "central_element", "curve_equal", "curve_of", "curves_disjoint",
    "density_witness", "equal", "eta", "factor_semidirect", "iso_spot_check", "lam", "multiply",
    "normal_form", "parab_adjacent", "parab_equal", "parse_group_word", "parse_word", "psi",
    "rewrite_pure1", "round_curve", "simul_standardize", "standard", "standardize_1last",
    "standardize_1pure", "theta", "type_a", "type_at", "type_b", "type_ct",
]
