"""Construction, verification and enumeration of orientable sequences.

Thin python surface over the native module; see the individual function
docstrings for the operation contracts.
"""

from ._oriseq import (
    additive_order,
    build_os3,
    build_os_n,
    canonical_rotation,
    construction2_period,
    construction3_period,
    construction3_weight,
    count_negasymmetric,
    d_beta,
    ensure_unit_weight,
    exhaustive_max,
    extend_run,
    find_unit_adjustment,
    inverse_lift,
    is_good,
    is_n_window,
    is_negasymmetric,
    is_negative_orientable,
    is_orientable,
    k_count,
    maximal_os2,
    nos2_construction1,
    nos_bound,
    nos_construction2,
    nos_construction3,
    os2_max_period,
    parity_check,
    polynomial_coefficient,
    predicted_tower_period,
    pseudoweight,
    r_count,
    recursive_tower,
    simple_nos_bound,
    weight_mod_q,
)

__all__ = [
    "additive_order",
    "build_os3",
    "build_os_n",
    "canonical_rotation",
    "construction2_period",
    "construction3_period",
    "construction3_weight",
    "count_negasymmetric",
    "d_beta",
    "ensure_unit_weight",
    "exhaustive_max",
    "extend_run",
    "find_unit_adjustment",
    "inverse_lift",
    "is_good",
    "is_n_window",
    "is_negasymmetric",
    "is_negative_orientable",
    "is_orientable",
    "k_count",
    "maximal_os2",
    "nos2_construction1",
    "nos_bound",
    "nos_construction2",
    "nos_construction3",
    "os2_max_period",
    "parity_check",
    "polynomial_coefficient",
    "predicted_tower_period",
    "pseudoweight",
    "r_count",
    "recursive_tower",
    "simple_nos_bound",
    "weight_mod_q",
]
