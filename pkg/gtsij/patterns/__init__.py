from gtsij.patterns.gt import (
    chain,
    eta_row,
    eta_row_i,
    eta_row_statistic,
    eta_top,
    eta_top_statistic,
    gt,
    gt_element,
    gt_enumerate,
    gt_rows,
    gt_size_formula,
    restricted_count,
    restricted_set,
    row_profiles,
    sgn_seq,
)
from gtsij.patterns.constructions import (
    beta,
    gamma_row,
    gamma_row_parts,
    move_sij,
    pi,
    rho,
    sigma,
    swap_path_sij,
    tau,
)
from gtsij.patterns.ggt import GGTParams, ggt, ggt_param_sign, ggt_size_formula, parse_params
