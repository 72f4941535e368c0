from gtsij.gamma.laurent import LaurentPoly, poly_sum
from gtsij.gamma.pipeline import (
    first_descent,
    gamma_limit,
    gamma_sij,
    gamma_stability_check,
    gamma_statistics,
    gamma_translate_check,
    limit_parameter,
    m_value,
    mid_row,
    omega_involution,
    phi1,
    phi3p,
    phi4p,
    phi4pp,
    phi_ar1,
    psi_rearrange,
    same_graph,
    staircase,
    staircase_index,
)
from gtsij.gamma.weighted import (
    ar_sgt,
    ar_sgt_weighted_sum,
    ar_sgt_weights,
    arrow_factor,
    gmt_ar_sgt_sij,
    gmt_weighted_sum,
    gmt_weights,
    relation_violations,
    schur_tilde,
    weight_statistics,
    weighted_compatibility,
    weighted_sum,
)
