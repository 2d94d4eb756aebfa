"""Exact isotypical decomposition of finite abelian group actions.

An abelian variety with an action of a finite abelian group G decomposes,
up to isogeny, into isotypical components indexed by the irreducible
rational representations of G.  This package models the variety by its
rational representation and computes that decomposition in exact rational
arithmetic: no floats, no numerical tolerance, every result certified by
independent internal cross-checks.
"""

from .abgroup import (
    FinAbGroup,
    GroupElement,
    QuotientInfo,
    Subgroup,
    all_subgroups,
    index_and_quotient,
    minimal_overgroups,
    subgroup_from_generators,
)
from .action import (
    GAction,
    IsotypicalComponent,
    IsotypicalReport,
    action_matrix,
    algebra_matrix,
    complementary_subvariety,
    fixed_subvariety,
    isotypical_component,
    isotypical_decomposition,
    validate_action,
)
from .actionfile import (
    ActionFile,
    action_file_to_jsonable,
    load_action_file,
    parse_action_file,
    serialize_action_file,
)
from .chars import (
    Character,
    RationalIrrep,
    char_kernel,
    irrep_model,
    ramanujan_sum,
    rational_irreps,
)
from .errors import InternalCheckError, PreconditionError, ValidationError
from .fixtures import FIXTURE_KINDS, FixtureSpec, make_fixture
from .qalgebra import (
    GroupAlgebraElem,
    averaging_idempotent,
    central_idempotent,
    product_formula_idempotent,
)
from .ratlinalg import (
    MatQ,
    MatZ,
    PolyQ,
    SubspaceQ,
    char_poly,
    companion_matrix,
    cyclotomic,
    det_int,
    hnf,
    image_space,
    intersect_spaces,
    inverse,
    kernel_space,
    restrict_operator,
    smith_with_transforms,
    snf_invariants,
    sum_spaces,
)
from .roan import (
    RoanMatchReport,
    RoanReport,
    eigenvalue_orders,
    roan_decomposition,
    verify_roan_matching,
)

__version__ = "1.0.0"

__all__ = [
    "FinAbGroup",
    "GroupElement",
    "Subgroup",
    "QuotientInfo",
    "subgroup_from_generators",
    "all_subgroups",
    "index_and_quotient",
    "minimal_overgroups",
    "Character",
    "RationalIrrep",
    "char_kernel",
    "rational_irreps",
    "ramanujan_sum",
    "irrep_model",
    "GroupAlgebraElem",
    "averaging_idempotent",
    "central_idempotent",
    "product_formula_idempotent",
    "GAction",
    "validate_action",
    "action_matrix",
    "algebra_matrix",
    "fixed_subvariety",
    "complementary_subvariety",
    "isotypical_component",
    "isotypical_decomposition",
    "IsotypicalComponent",
    "IsotypicalReport",
    "eigenvalue_orders",
    "roan_decomposition",
    "verify_roan_matching",
    "RoanReport",
    "RoanMatchReport",
    "ActionFile",
    "load_action_file",
    "parse_action_file",
    "action_file_to_jsonable",
    "serialize_action_file",
    "FixtureSpec",
    "make_fixture",
    "FIXTURE_KINDS",
    "MatQ",
    "MatZ",
    "SubspaceQ",
    "PolyQ",
    "kernel_space",
    "image_space",
    "intersect_spaces",
    "sum_spaces",
    "hnf",
    "det_int",
    "snf_invariants",
    "smith_with_transforms",
    "char_poly",
    "cyclotomic",
    "companion_matrix",
    "inverse",
    "restrict_operator",
    "ValidationError",
    "PreconditionError",
    "InternalCheckError",
    "__version__",
]
