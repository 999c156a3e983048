"""Workbench for finite biunary semigroups and categories with biaction."""

from .construct import (
    Congruence,
    ExtensionResult,
    category_of,
    congruences,
    extension,
    find_isomorphism,
    is_biaction_functor,
    is_homomorphism,
    quotient,
    roundtrip_category,
    roundtrip_semigroup,
)
from .errors import (
    AssocError,
    BiactionAxiomError,
    CapExceeded,
    CategoryAxiomError,
    NotCatSemigroup,
    OrderTooLarge,
    ParseError,
    PrerequisiteFailed,
    PseudoproductUndefined,
    ShapeError,
    SizeMismatch,
    WorkbenchError,
    WrongStructureKind,
)
from .fixtures import FIXTURE_IDS, fixture
from .laws import (
    CATEGORY_CLASSES,
    CATEGORY_LAWS,
    LEFT,
    RIGHT,
    SEMIGROUP_CLASSES,
    SEMIGROUP_LAWS,
    STRONG,
    SYMMETRIC,
    Classification,
    check_law,
    check_tc,
    classify,
    classify_category,
    pseudoproduct,
    pseudoproduct_table,
)
from .relations import (
    ANGELIC,
    DEMONIC,
    GeneratedAlgebra,
    Relation,
    all_relations,
    compose,
    domain_proj,
    full_relation_algebra,
    generate_subalgebra,
    parse_relation,
    range_proj,
    serialize_relation,
)
from .search import (
    ClosureResult,
    MinimalResult,
    SearchQuery,
    SearchResult,
    canonical_form,
    closure_under_quotients,
    enumerate_models,
    minimal_counterexample,
    parse_query,
)
from .structures import (
    BiactionCategory,
    BiunarySemigroup,
    CheckReport,
    ElementMap,
    parse,
    serialize,
    validate_biaction_category,
    validate_semigroup,
)

__version__ = "0.1.0"
