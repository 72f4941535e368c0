from gtsij.triangles.arrows import (
    SignMode,
    ap,
    ap_apply,
    ap_positions,
    ar,
    c_vector,
    eta_inv_ap,
    eta_inv_ar,
    mu_apply,
    parse_arrows,
)
from gtsij.triangles.asm import (
    asm_enumerate,
    asm_from_text,
    asm_to_mt,
    asm_to_text,
    eta_inv_asm,
    eta_inv_mt,
    is_asm,
    mt_to_asm,
)
from gtsij.triangles.monotone import (
    brute_force_multiplicity,
    eta_inv_gmt,
    eta_inv_sgt,
    eta_mt,
    eta_top_gmt,
    eta_top_sgt,
    gmt,
    gmt_element,
    gmt_parts,
    iota_mt,
    is_partially_successive,
    mt,
    mu_l,
    sgt,
    sgt_parts,
)
from gtsij.triangles.transfer import m_multiplicity, transfer_matrix
