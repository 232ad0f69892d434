"""Reduced integral homology and the wedge formulas for arrangements.

Conventions: homology is reduced, with the augmentation ``C_0 -> C_{-1} = Z``
always present, so the empty complex has ``H~_{-1} = Z`` and every nonempty
complex has ``H~_{-1} = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

import numpy as np

from . import _kernels
from .complexes import SimplicialComplex, order_complex
from .poset import lower_set


@dataclass(frozen=True)
class HomologyProfile:
    """Graded finitely generated abelian group, ``Z^free + Z/t_1 + ... + Z/t_k``.

    ``groups`` holds ``(degree, free_rank, torsion)`` for the nonzero degrees
    only, sorted by degree; torsion coefficients are in divisibility order.
    """

    groups: tuple[tuple[int, int, tuple[int, ...]], ...] = ()

    @classmethod
    def from_dict(cls, data: Mapping[int, tuple[int, Iterable[int]]]) -> HomologyProfile:
        groups = []
        for deg in sorted(data):
            free, tors = data[deg]
            tors = invariant_factors(tors)
            if free < 0:
                raise ValueError(f"negative free rank in degree {deg}")
            if free or tors:
                groups.append((int(deg), int(free), tuple(tors)))
        return cls(tuple(groups))

    @classmethod
    def from_records(cls, records: Iterable) -> HomologyProfile:
        return cls.from_dict({int(d): (int(f), [int(t) for t in tors]) for d, f, tors in records})

    def records(self) -> list[list]:
        """``[degree, free_rank, torsion]`` for every degree from -1 to the top."""
        if not self.groups:
            return []
        data = {d: (f, list(t)) for d, f, t in self.groups}
        lo = min(-1, self.groups[0][0])
        return [[d, *data.get(d, (0, []))] for d in range(lo, self.top_degree + 1)]

    def as_dict(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        return {d: (f, t) for d, f, t in self.groups}

    @property
    def top_degree(self) -> int:
        return self.groups[-1][0] if self.groups else -2

    def rank(self, degree: int) -> int:
        return self.as_dict().get(degree, (0, ()))[0]

    def torsion(self, degree: int) -> tuple[int, ...]:
        return self.as_dict().get(degree, (0, ()))[1]

    def free_ranks(self) -> dict[int, int]:
        return {d: f for d, f, _ in self.groups if f}

    def is_zero(self) -> bool:
        return not self.groups

    def __add__(self, other: HomologyProfile) -> HomologyProfile:
        a, b = self.as_dict(), other.as_dict()
        out = {}
        for d in set(a) | set(b):
            fa, ta = a.get(d, (0, ()))
            fb, tb = b.get(d, (0, ()))
            out[d] = (fa + fb, list(ta) + list(tb))
        return HomologyProfile.from_dict(out)

    def shifted(self, k: int) -> HomologyProfile:
        return HomologyProfile(tuple((d + k, f, t) for d, f, t in self.groups))

    def __str__(self):
        if not self.groups:
            return "0"
        parts = []
        for d, f, t in self.groups:
            summands = ([f"Z^{f}" if f > 1 else "Z"] if f else []) + [f"Z/{x}" for x in t]
            parts.append(f"H~_{d} = " + " + ".join(summands))
        return ", ".join(parts)


def invariant_factors(diagonal: Iterable[int]) -> list[int]:
    """Put nonzero diagonal entries into divisibility order, dropping units."""
    d = sorted(abs(int(x)) for x in diagonal if abs(int(x)) > 1)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] // g * d[j]
    return [x for x in d if x > 1]


def smith_normal_form(matrix, backend: str | None = None) -> tuple[list[int], int]:
    """Diagonal ``d_1 | d_2 | ... | d_r`` of the Smith form and the rank ``r``."""
    if not isinstance(matrix, np.ndarray):
        matrix = [list(map(int, row)) for row in matrix]
        if matrix and any(len(r) != len(matrix[0]) for r in matrix):
            raise ValueError("ragged matrix")
    pivots = _kernels.smith_pivots(matrix, backend=backend)
    rank = len(pivots)
    nontrivial = invariant_factors(pivots)
    return [1] * (rank - len(nontrivial)) + nontrivial, rank


def boundary_matrix(k: SimplicialComplex, d: int, _faces=None) -> np.ndarray:
    """int64 matrix of the boundary map from d-chains to (d-1)-chains.

    Rows follow ``k.faces(d - 1)`` and columns ``k.faces(d)``.  For ``d = 0``
    this is the 1 x n augmentation row of ones.
    """
    faces = _faces or {}
    cols = faces[d] if d in faces else k.faces(d)
    if d == 0:
        return np.ones((1, len(cols)), dtype=np.int64)
    if d < 0:
        return np.zeros((0, 1), dtype=np.int64)
    rows = faces[d - 1] if d - 1 in faces else k.faces(d - 1)
    pos = {s: i for i, s in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, s in enumerate(cols):
        for i in range(len(s)):
            mat[pos[s[:i] + s[i + 1 :]], j] = -1 if i % 2 else 1
    return mat


def reduced_homology(k: SimplicialComplex, backend: str | None = None) -> HomologyProfile:
    top = k.dim
    faces = {d: [] for d in range(top + 1)}
    for s in sorted(k.simplices):
        faces[len(s) - 1].append(s)
    sizes = {d: len(f) for d, f in faces.items()}
    sizes[-1] = 1
    ranks = {-1: 0, top + 1: 0}
    torsion = {top + 1: []}
    for d in range(0, top + 1):
        diag, r = smith_normal_form(boundary_matrix(k, d, faces), backend=backend)
        ranks[d] = r
        torsion[d] = [x for x in diag if x > 1]
    return HomologyProfile.from_dict(
        {d: (sizes[d] - ranks[d] - ranks[d + 1], torsion[d + 1]) for d in range(-1, top + 1)}
    )


def shift_join_sphere(p: HomologyProfile, d: int) -> HomologyProfile:
    """Homology of ``K * S^d`` from that of ``K``: a shift up by ``d + 1``."""
    if d < -1:
        raise ValueError("sphere dimension must be >= -1")
    return p.shifted(d + 1)


def lower_interval_homologies(lattice) -> dict:
    """Reduced homology of the order complex of ``L_{<x}`` for every element x."""
    return {
        x: reduced_homology(order_complex(lower_set(lattice.poset, x, strict=True)))
        for x in lattice.poset.elements
    }


def compactified_union_homology(lattice, _lower=None) -> HomologyProfile:
    lower = lower_interval_homologies(lattice) if _lower is None else _lower
    total = HomologyProfile()
    for x, p in lower.items():
        total = total + shift_join_sphere(p, lattice.dim(x))
    return total


def complement_cohomology(lattice, n: int, _lower=None) -> HomologyProfile:
    """Reduced cohomology of the complement, indexed by cohomological degree."""
    lower = lower_interval_homologies(lattice) if _lower is None else _lower
    total = HomologyProfile()
    for x, p in lower.items():
        # degree j of L_{<x} lands in degree i = n - j - dim B(x) - 2
        dim = lattice.dim(x)
        total = total + HomologyProfile.from_dict(
            {n - j - dim - 2: (f, t) for j, f, t in p.groups}
        )
    return total


def duality_verdict(lattice, n: int) -> str:
    """``"pass"``, ``"warn"`` (free ranks agree, torsion differs) or ``"fail"``."""
    lower = lower_interval_homologies(lattice)
    coh = complement_cohomology(lattice, n, lower)
    hom = compactified_union_homology(lattice, lower)
    degrees = {d for d, _, _ in coh.groups} | {n - d - 1 for d, _, _ in hom.groups}
    verdict = "pass"
    for i in degrees:
        if coh.rank(i) != hom.rank(n - i - 1):
            return "fail"
        if coh.torsion(i) != hom.torsion(n - i - 1):
            verdict = "warn"
    return verdict


def alexander_duality_check(lattice, n: int) -> bool:
    return duality_verdict(lattice, n) != "fail"
