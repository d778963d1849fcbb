"""Group-theoretic layer: words, presentations, homology, homomorphism counts."""

from .homcount import count_homomorphisms, small_groups, validate_table
from .homology import (
    AbelianGroup,
    IntegerMatrix,
    abelianization_matrix,
    h1,
    smith_normal_form,
)
from .presentations import (
    Presentation,
    auto_simplify,
    family_elimination_order,
    preset_presentation,
    presentation_from_cw,
    presentation_from_pairings,
    reduced_family_presentation,
    scripted_reduction,
    tietze_eliminate,
)
from .words import Word, cyclic_normal_form, cyclic_reduce, free_reduce

__all__ = [
    "AbelianGroup",
    "IntegerMatrix",
    "Presentation",
    "Word",
    "abelianization_matrix",
    "auto_simplify",
    "count_homomorphisms",
    "cyclic_normal_form",
    "cyclic_reduce",
    "family_elimination_order",
    "free_reduce",
    "h1",
    "preset_presentation",
    "presentation_from_cw",
    "presentation_from_pairings",
    "reduced_family_presentation",
    "scripted_reduction",
    "small_groups",
    "smith_normal_form",
    "tietze_eliminate",
    "validate_table",
]
