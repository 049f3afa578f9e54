"""Suspension splittings and gauge-group decompositions for closed
orientable smooth 4-manifolds, with a Smith-normal-form homology engine
for cross-checking and gcd-based homotopy-equivalence classification."""

from .classifier import (
    ClassRule,
    EquivalenceVerdict,
    LieGroupSpec,
    classify,
    classify_base,
    count_types,
    parse_group,
    rule_for,
)
from .decomposer import (
    Case,
    Decomposition,
    DecompositionError,
    decompose,
    gauge_from_suspension,
    mixed_decomposition,
    render_decomposition,
    suspension_of_spec,
)
from .homology import (
    ChainComplexError,
    GradedAbelianGroup,
    IntMatrix,
    chain_homology,
    homology_of_manifold,
    homology_of_term,
    parse_matrix,
    smith_normal_form,
    suspend,
)
from .manifold import (
    InvalidSpecError,
    ManifoldSpec,
    Pi1Descriptor,
    Pi1Kind,
    classify_pi1,
    connected_sum,
    manifold,
    parse_pi1,
    render_pi1,
    stabilize,
    validate,
)
from .terms import (
    SYMBOLIC,
    GaugeExpr,
    LoopFactor,
    Moore,
    Point,
    SpaceTerm,
    Sphere,
    SuspCP2,
    TermError,
    Wedge,
    map_space,
    normalize,
    parse_term,
    render,
    wedge,
)

__version__ = "0.1.0"

__all__ = [
    "Case",
    "ChainComplexError",
    "ClassRule",
    "Decomposition",
    "DecompositionError",
    "EquivalenceVerdict",
    "GaugeExpr",
    "GradedAbelianGroup",
    "IntMatrix",
    "InvalidSpecError",
    "LieGroupSpec",
    "LoopFactor",
    "ManifoldSpec",
    "Moore",
    "Pi1Descriptor",
    "Pi1Kind",
    "Point",
    "SYMBOLIC",
    "SpaceTerm",
    "Sphere",
    "SuspCP2",
    "TermError",
    "Wedge",
    "chain_homology",
    "classify",
    "classify_base",
    "classify_pi1",
    "connected_sum",
    "count_types",
    "decompose",
    "gauge_from_suspension",
    "homology_of_manifold",
    "homology_of_term",
    "manifold",
    "map_space",
    "mixed_decomposition",
    "normalize",
    "parse_group",
    "parse_matrix",
    "parse_pi1",
    "parse_term",
    "render",
    "render_decomposition",
    "render_pi1",
    "rule_for",
    "smith_normal_form",
    "stabilize",
    "suspend",
    "suspension_of_spec",
    "validate",
    "wedge",
]
