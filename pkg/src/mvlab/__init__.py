"""Crystal combinatorics for type A: data, polytopes, quivers, and checks."""

__version__ = "0.1.0"

from .bz import (
    BZDatum,
    bz_epsilon,
    bz_epsilon_star,
    bz_from_lusztig,
    bz_lowering,
    bz_raising,
    bz_star_lowering,
    bz_weight,
    check_axioms,
    lusztig_from_bz,
    mv_vertices,
    star,
)
from .crystal import (
    LusztigDatum,
    enumerate_by_height,
    epsilon,
    epsilon_star,
    lowering,
    phi,
    phi_star,
    raising,
    star_lowering,
    star_raising,
    weight,
)
from .maya import MayaDiagram, all_maya
from .quiver import (
    Orientation,
    adapted_word,
    build_module,
    characterizing_root,
    hom_dim,
    m_k_via_coker,
    m_k_via_hom,
    omega0,
    orientation_from_maya,
)
from .lagrangian import ConormalPoint, sample_conormal, sampling_report
from .suites import SUITE_NAMES, VerifyReport, run_suite
from .weyl import braid_path, lex_min_word, roots_in_order, transition

__all__ = [
    "BZDatum",
    "ConormalPoint",
    "LusztigDatum",
    "MayaDiagram",
    "Orientation",
    "SUITE_NAMES",
    "VerifyReport",
    "adapted_word",
    "all_maya",
    "braid_path",
    "build_module",
    "bz_epsilon",
    "bz_epsilon_star",
    "bz_from_lusztig",
    "bz_lowering",
    "bz_raising",
    "bz_star_lowering",
    "bz_weight",
    "characterizing_root",
    "check_axioms",
    "enumerate_by_height",
    "epsilon",
    "epsilon_star",
    "hom_dim",
    "lex_min_word",
    "lowering",
    "lusztig_from_bz",
    "m_k_via_coker",
    "m_k_via_hom",
    "mv_vertices",
    "omega0",
    "orientation_from_maya",
    "phi",
    "phi_star",
    "psi",
    "psi_inverse",
    "raising",
    "roots_in_order",
    "run_suite",
    "sample_conormal",
    "sampling_report",
    "star",
    "star_lowering",
    "star_raising",
    "transition",
    "weight",
    "__version__",
]

# Friendlier aliases for the two directions of the free-datum correspondence.
psi = bz_from_lusztig
psi_inverse = lusztig_from_bz
