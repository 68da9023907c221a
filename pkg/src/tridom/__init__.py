"""Dominating sets of guaranteed size for plane skeletal triangulations.

The solver builds a dominating set of size at most ``floor(phi(G)/3.5)``
for any skeletal triangulation, where ``phi`` is a penalty that equals
the vertex count on plane triangulations.  An exact branch-and-bound
oracle backs the recursion base cases and the test suite.
"""

from .exact import (
    ActsAs,
    DomConstraints,
    acts_as,
    constraints,
    dominates,
    exact_min_domset,
    is_neat,
    min_domset_size,
    neatify,
    outerplanar_min_domset,
)
from .gadgets import Gadget, GadgetError, gadget, insert, verify_catalog
from .generators import (
    FAMILY_KINDS,
    FamilySpec,
    GenerationError,
    SPORADICS,
    enumerate_plane_triangulations,
    enumerate_skeletal,
    family,
    random_triangulation,
    sporadic,
)
from .ioformats import (
    ParseError,
    decode_planar_code,
    encode_planar_code,
    export_svg,
    load_graph,
    load_graphs,
    read_text,
    write_text,
)
from .penalty import (
    Configuration,
    PenaltyReport,
    budget,
    measure,
    phi,
    phi_half,
    scan_configurations,
)
from .plane import (
    EmbeddingError,
    PlaneGraph,
    SkeletalView,
    canonical_form,
    is_sporadic,
    structure,
    validate,
)
from .solver import (
    SolveConfig,
    SolveOutcome,
    SolverError,
    dispatch_case,
    guess_acts_as,
    solve,
    solve_triangulation,
)

__version__ = "0.1.0"

__all__ = [
    "ActsAs", "Configuration", "DomConstraints", "EmbeddingError",
    "FAMILY_KINDS", "FamilySpec", "Gadget", "GadgetError",
    "GenerationError", "ParseError", "PenaltyReport", "PlaneGraph",
    "SPORADICS", "SkeletalView", "SolveConfig", "SolveOutcome",
    "SolverError", "acts_as", "budget", "canonical_form", "constraints",
    "decode_planar_code", "dispatch_case", "dominates",
    "encode_planar_code", "enumerate_plane_triangulations",
    "enumerate_skeletal", "exact_min_domset", "export_svg", "family",
    "gadget", "guess_acts_as", "insert", "is_neat", "is_sporadic",
    "load_graph", "load_graphs", "measure", "min_domset_size", "neatify",
    "outerplanar_min_domset", "phi", "phi_half", "random_triangulation",
    "read_text", "scan_configurations", "solve", "solve_triangulation",
    "sporadic", "structure", "validate", "verify_catalog", "write_text",
]
