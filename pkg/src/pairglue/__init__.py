"""Face-pairing quotient complexes and their invariants.

The package builds two infinite families of closed orientable 3-manifolds as
face-pairing quotients of a single polyhedron, certifies manifoldness from
the cell census, derives fundamental group presentations along two
independent routes, simplifies them, computes first homology exactly, counts
homomorphisms into small finite groups, and analyses rotation symmetries
together with the singular sets of their quotients.
"""

from .complex_core import (
    CellCounts,
    EdgeOrbit,
    PairedComplex,
    Pairing,
    VertexOrbit,
    cell_counts,
    edge_orbits,
    is_manifold,
    validate,
    vertex_orbits,
)
from .errors import (
    CapacityError,
    DomainError,
    EliminationError,
    PairglueError,
    ParseError,
    StructureError,
    UnsupportedQuotientError,
)
from .families import M24, M25, build_family, build_m24, build_m25
from .group_theory import (
    AbelianGroup,
    IntegerMatrix,
    Presentation,
    Word,
    abelianization_matrix,
    auto_simplify,
    count_homomorphisms,
    cyclic_normal_form,
    cyclic_reduce,
    family_elimination_order,
    free_reduce,
    h1,
    preset_presentation,
    presentation_from_cw,
    presentation_from_pairings,
    reduced_family_presentation,
    scripted_reduction,
    small_groups,
    smith_normal_form,
    tietze_eliminate,
    validate_table,
)
from .io_cli import (
    parse_complex,
    parse_presentation,
    serialize_complex,
    serialize_presentation,
)
from .symmetry import (
    AutomorphismCheck,
    ComplexAutomorphism,
    SingularComponent,
    SingularityReport,
    quotient_complex,
    rotation,
    singularity_report,
    strongly_cyclic,
    verify_automorphism,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "CapacityError",
    "CellCounts",
    "AutomorphismCheck",
    "ComplexAutomorphism",
    "DomainError",
    "EdgeOrbit",
    "EliminationError",
    "IntegerMatrix",
    "M24",
    "M25",
    "PairedComplex",
    "Pairing",
    "PairglueError",
    "ParseError",
    "Presentation",
    "SingularComponent",
    "SingularityReport",
    "StructureError",
    "UnsupportedQuotientError",
    "VertexOrbit",
    "Word",
    "abelianization_matrix",
    "auto_simplify",
    "build_family",
    "build_m24",
    "build_m25",
    "cell_counts",
    "count_homomorphisms",
    "cyclic_normal_form",
    "cyclic_reduce",
    "edge_orbits",
    "family_elimination_order",
    "free_reduce",
    "h1",
    "is_manifold",
    "parse_complex",
    "parse_presentation",
    "preset_presentation",
    "presentation_from_cw",
    "presentation_from_pairings",
    "quotient_complex",
    "reduced_family_presentation",
    "rotation",
    "scripted_reduction",
    "serialize_complex",
    "serialize_presentation",
    "singularity_report",
    "small_groups",
    "smith_normal_form",
    "strongly_cyclic",
    "tietze_eliminate",
    "validate",
    "validate_table",
    "verify_automorphism",
    "vertex_orbits",
    "__version__",
]
