"""Finite binary-operation tables: the composition monoid, distributive
sets, the regular group embedding, rack search, and distributive homology."""

from .tables import (
    OpTable,
    commutes,
    compose,
    distributive_witness,
    invert,
    is_idempotent,
    is_invertible,
    make_table,
    relabel,
    right_trivial,
)
from .groups import (
    FiniteGroup,
    are_isomorphic,
    cyclic,
    dihedral,
    group_from_table,
    is_abelian,
    is_monomorphism_to_bin,
    symmetric,
)
from .embedding import (
    RegularEmbedding,
    regular_embed,
    verify_distributive,
    verify_inverse_images,
)
from .translate import (
    PermVector,
    alpha,
    alpha_inverse,
    conjugation_condition,
    distributivity_equivalence_check,
)
from .shelves import (
    ClosureBudgetError,
    ClosureResult,
    DistributiveSet,
    DistributivityError,
    close_group,
    close_monoid,
    idempotent_center_report,
    make_distributive_set,
)
from .search import (
    RackCatalog,
    SearchReport,
    canonical_form,
    canonical_form_set,
    certify_no_nonabelian,
    compatibility_graph,
    enumerate_racks,
)
from .snf import IntMatrix, int_matrix, mat_mul, rank, smith_normal_form, zero_matrix
from .homology import (
    ChainSpec,
    HomologyGroup,
    boundary_matrix,
    homology_groups,
    verify_differential,
)

__version__ = "0.1.0"
