from gtsij.core.elements import Arrow, Tagged, UNIT, parse_element, serialize, sort_key, translate
from gtsij.core.signed_set import (
    EMPTY,
    SignedSet,
    box,
    cartesian_product,
    disjoint_union,
    from_signed,
    get_element_budget,
    indexed_union,
    interval,
    make_interval,
    opposite,
    restrict,
    set_element_budget,
    signed_pair,
    singleton,
)
from gtsij.core.sijection import (
    Side,
    SidedElement,
    Sijection,
    cod,
    compose,
    compose_all,
    dom,
    fiberwise_over,
    fiberwise_sij,
    identity_fibers,
    identity_sij,
    indexed_union_sij,
    inverse,
    opposite_sij,
    product_sij,
    union_sij,
)
from gtsij.core.builders import (
    act_on,
    cancel_opposite,
    explicit_sij,
    interval_split,
    matching_sij,
    multi_split,
    pair_cancel,
    product_split,
    relabel_sij,
    shuffled_matching,
)
from gtsij.core.verify import VerificationReport, graph_edges, to_dot, verify_sijection, write_dot
from gtsij.core.statistics import (
    CompatibilityReport,
    Statistic,
    check_compatibility,
    constant_statistic,
    normal_statistic,
    pair_statistic,
    product_statistic,
    union_statistic,
)
