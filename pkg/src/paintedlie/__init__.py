"""Outer automorphism groups of real semisimple Lie algebras, computed
combinatorially from painted diagrams."""

from .autgroup import (
    DiagramAut,
    PermGroup,
    automorphisms,
    brute_force_automorphisms,
    identify_group,
    orbits,
)
from .diagram_core import (
    CartanScheme,
    Marks,
    build_affine,
    build_finite,
    compute_marks,
    is_affine_type,
)
from .errors import (
    DiagramMismatch,
    InvalidParameters,
    InvalidType,
    KacViolation,
    LieDiagramError,
    NotAdmissible,
    NotAffine,
    ParseError,
    TooLarge,
    Unrecognized,
    UnsupportedTwist,
    WrongCase,
)
from .marking import (
    Classification,
    Marking,
    OuterClass,
    classify_inner,
    compose,
    identity_marking,
    invariant,
    invert,
    is_admissible_equal_rank,
    make_marking,
    marking_order,
    outer_class,
)
from .outer import (
    OuterGroupDesc,
    SemisimpleSpec,
    outer_complex_as_real,
    outer_semisimple,
    outer_simple,
    parse_spec,
    theta_class,
)
from .painted import (
    CompactDiagram,
    PaintedDiagram,
    RealFormName,
    all_catalog_names,
    canonical_form,
    construct,
    enumerate_paintings,
    equivalent,
    identify,
    paint,
)

__version__ = "0.1.0"

__all__ = [
    "CartanScheme",
    "Marks",
    "build_finite",
    "build_affine",
    "compute_marks",
    "is_affine_type",
    "DiagramAut",
    "PermGroup",
    "automorphisms",
    "brute_force_automorphisms",
    "identify_group",
    "orbits",
    "PaintedDiagram",
    "CompactDiagram",
    "RealFormName",
    "paint",
    "construct",
    "enumerate_paintings",
    "canonical_form",
    "equivalent",
    "identify",
    "all_catalog_names",
    "Marking",
    "OuterClass",
    "Classification",
    "make_marking",
    "identity_marking",
    "compose",
    "invert",
    "invariant",
    "outer_class",
    "classify_inner",
    "marking_order",
    "is_admissible_equal_rank",
    "SemisimpleSpec",
    "OuterGroupDesc",
    "outer_simple",
    "theta_class",
    "outer_complex_as_real",
    "outer_semisimple",
    "parse_spec",
    "LieDiagramError",
    "ParseError",
    "InvalidType",
    "UnsupportedTwist",
    "NotAffine",
    "KacViolation",
    "InvalidParameters",
    "Unrecognized",
    "DiagramMismatch",
    "NotAdmissible",
    "WrongCase",
    "TooLarge",
    "__version__",
]
