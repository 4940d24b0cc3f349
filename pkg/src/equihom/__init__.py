"""Exact-arithmetic equivariant homology of hypergraph matching complexes,
p-cycle complexes and Quillen complexes of symmetric groups."""

from .characters import (
    ClassFunction,
    character_table,
    cyclic_induced_character,
    frobenius_ch,
    frobenius_inverse,
    inner_product,
    irreducible_character,
    normalizer_character,
)
from .complexes import (
    CyclicGroupLabel,
    Poset,
    SimplicialComplex,
    SnAction,
    SubgroupLabel,
    barycentric_subdivision,
    face_poset,
    inflation,
    link,
    matching_complex,
    order_complex,
    pcycle_complex,
    quillen_complex,
)
from .formulas import (
    GOLDEN_TABLE,
    column_added_plethysm,
    conjectured_top_character,
    cycle_complex_character,
    derive_table,
    euler_poincare_character,
    graph_matching_homology,
    inflation_block,
    matching_boundary_entry,
    odd_parts_top_character,
    sylow_character_tableau_form,
    sylow_permutation_character,
    vanishing_floor,
    verify_table,
)
from .homology import (
    EquivariantDecomposition,
    betti,
    boundary_matrix,
    chain_character,
    chain_class_function,
    equivariant_decomposition,
    euler_characteristics_match,
    homology_representatives,
)
from .partitions import (
    Partition,
    conjugate,
    durfee,
    hook_dimension,
    maj_count,
    partitions_of,
    standard_tableaux,
)
from .symfunc import (
    SymmetricFunction,
    add_column,
    from_e,
    from_h,
    from_power_product,
    hall_inner_product,
    multiply,
    plethysm,
    restrict_length,
)

__version__ = "0.1.0"
