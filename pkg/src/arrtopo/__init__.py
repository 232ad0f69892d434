"""Combinatorial topology of affine subspace arrangements over Q."""

from ._kernels import BACKEND
from .arrangement import (
    Arrangement,
    ContainmentViolation,
    IntersectionLattice,
    NoJoin,
    intersection_semilattice,
    lattice_of,
    validate,
    vassiliev_skeleton,
    zz_skeleton,
)
from .exactlin import EMPTY, AffineSubspace, canonicalize
from .homology import (
    HomologyProfile,
    complement_cohomology,
    compactified_union_homology,
    reduced_homology,
)
from .morse import build_matching, collapse_sequence

__version__ = "0.1.0"
