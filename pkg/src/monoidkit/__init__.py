"""monoidkit: computational algebra over commutative pointed monoids.

Finite multiplication tables, the free monogenic monoid and affine
lattice monoids; pointed actions with quotients, tensor products and
enumeration; prime spectra and primary decomposition; projective
classification with K- and G-groups; double-arrow complexes with
resolutions and the simplicial correspondence; integral realization; and
divisor class / Picard groups of glued lattice charts.
"""

from ._kernels import BACKEND as kernel_backend
from .abgroup import AbelianGroup, GroupPresentation
from .monoids import (
    AffineMonoid,
    FiniteMonoid,
    MonogenicMonoid,
    MonoidHom,
    build_from_presentation,
    group_completion,
    localize,
    monoid_isomorphic,
    quotient,
    smash_product,
    validate,
)
from .asets import (
    ASet,
    ASetMorphism,
    aset_from_monoid,
    aset_from_theta,
    congruence_closure,
    free_aset,
    hom_enumerate,
    is_isomorphic,
    quotient_aset,
    quotient_by_subset,
    smash,
    split_check,
    sub_aset,
    tensor,
    wedge,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AffineMonoid",
    "ASet",
    "ASetMorphism",
    "FiniteMonoid",
    "GroupPresentation",
    "MonogenicMonoid",
    "MonoidHom",
    "aset_from_monoid",
    "aset_from_theta",
    "build_from_presentation",
    "congruence_closure",
    "free_aset",
    "group_completion",
    "hom_enumerate",
    "is_isomorphic",
    "kernel_backend",
    "localize",
    "monoid_isomorphic",
    "quotient",
    "quotient_aset",
    "quotient_by_subset",
    "smash",
    "smash_product",
    "split_check",
    "sub_aset",
    "tensor",
    "validate",
    "wedge",
]
