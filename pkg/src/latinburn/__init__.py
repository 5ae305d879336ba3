"""Lazy burning of Latin square hypergraphs, connected chains of subsquares and cover-sequences."""

from .burning import (
    BurnTrace,
    Hypergraph,
    build_H3L,
    build_HL,
    is_lazy_burning_set,
    lazy_burn,
    min_lazy_burning_set,
    min_lbs_complement_search,
)
from .chains import (
    ConnectedChain,
    CoverSequence,
    Subsquare,
    bl_H3L_formula,
    bl_HL_formula,
    chain_to_cover_sequence,
    closure,
    cover_sequence_from_lbs,
    cover_sequence_to_chain,
    lbs_from_weak_cover_sequence,
    mcs_exhaustive,
    mcs_formula,
    peel_ordering,
    scc,
    scc_bounds,
    validate_cover_sequence,
)
from .groups import (
    FiniteGroup,
    cayley_square,
    coset_columns_predicate,
    dihedral,
    direct_product,
    group_from_table,
    min_generating_size,
    scc_group_formula,
    subgroup_generated,
    sym,
    z,
    z2_pow,
)
from .latin import (
    Entry,
    LatinSquare,
    LineKind,
    LineRef,
    cyclic,
    enumerate_all,
    intercalate_power,
    parse,
    product,
    random_square,
    serialize,
    validate,
)
from .report import AnalysisReport, analyze

__version__ = "0.1.0"
