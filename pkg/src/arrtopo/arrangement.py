"""Affine subspace arrangements and their intersection semilattices."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .complexes import SimplicialComplex, barycentric_subdivision, nerve_complex, order_complex
from .exactlin import EMPTY, AffineSubspace, DimensionMismatch, contains, intersect
from .poset import FinitePoset, join


class ContainmentViolation(ValueError):
    pass


class NoJoin(ValueError):
    pass


class TooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    subspaces: tuple[AffineSubspace, ...]

    def __len__(self):
        return len(self.subspaces)


def validate(subspaces: Sequence[AffineSubspace], n: int) -> Arrangement:
    subspaces = tuple(subspaces)
    if not subspaces:
        raise ContainmentViolation("an arrangement needs at least one subspace")
    for i, s in enumerate(subspaces):
        if s is EMPTY or not isinstance(s, AffineSubspace):
            raise ContainmentViolation(f"subspace {i + 1} is empty")
        if s.ambient_dim != n:
            raise DimensionMismatch(
                f"subspace {i + 1} lives in Q^{s.ambient_dim}, expected Q^{n}"
            )
    for i, s in enumerate(subspaces):
        for j, t in enumerate(subspaces):
            if i < j and s == t:
                raise ContainmentViolation(f"subspaces {i + 1} and {j + 1} are equal")
            if i != j and contains(t, s) and s != t:
                raise ContainmentViolation(
                    f"subspace {i + 1} is properly contained in subspace {j + 1}"
                )
    return Arrangement(n, subspaces)


class IntersectionLattice:
    """All nonempty intersections of an arrangement, ordered by reverse inclusion.

    Elements are the integers ``0 .. len-1``.  The atoms come first, with
    element ``i`` standing for input subspace ``i``; the remaining flats
    follow by decreasing dimension.
    """

    def __init__(self, arrangement: Arrangement, flats: Sequence[AffineSubspace], poset: FinitePoset):
        self.arrangement = arrangement
        self.flats = tuple(flats)
        self.poset = poset
        self.atoms = tuple(range(len(arrangement)))
        self._by_flat = {f: i for i, f in enumerate(self.flats)}

    def __len__(self):
        return len(self.flats)

    def __repr__(self):
        return f"IntersectionLattice({len(self)} elements, {len(self.atoms)} atoms)"

    @property
    def ambient_dim(self) -> int:
        return self.arrangement.ambient_dim

    def flat(self, x: int) -> AffineSubspace:
        return self.flats[x]

    def dim(self, x: int) -> int:
        return self.flats[x].dimension

    def element_of(self, flat: AffineSubspace):
        return self._by_flat.get(flat)

    def atoms_below(self, x: int) -> frozenset[int]:
        return frozenset(a for a in self.atoms if self.poset.leq[a, x])

    def name(self, x: int) -> str:
        k = len(self.atoms)
        return f"a{x + 1}" if x < k else f"x{x - k + 1}"

    def covers(self) -> list[tuple[int, int]]:
        from .poset import covering_pairs

        return sorted(covering_pairs(self.poset))


def intersection_semilattice(arr: Arrangement) -> IntersectionLattice:
    atoms = list(arr.subspaces)
    seen = {f: i for i, f in enumerate(atoms)}
    # every flat is an intersection of atoms, so closing under
    # "intersect with an atom" reaches the same fixpoint as all pairs
    found = set(atoms)
    work = list(atoms)
    while work:
        f = work.pop()
        for a in atoms:
            g = intersect(f, a)
            if g is not EMPTY and g not in found:
                found.add(g)
                work.append(g)
    rest = [f for f in found if f not in seen]
    # atoms below a flat: exactly the input subspaces containing it
    atom_sets = {f: tuple(i for i, a in enumerate(atoms) if contains(a, f)) for f in rest}
    rest.sort(key=lambda f: (-f.dimension, atom_sets[f]))
    flats = atoms + rest
    m = len(flats)
    table = np.eye(m, dtype=bool)
    for i, f in enumerate(flats):
        for j, g in enumerate(flats):
            if i != j and f.dimension > g.dimension and contains(f, g):
                table[i, j] = True
    return IntersectionLattice(arr, flats, FinitePoset(range(m), table, check=False))


def lattice_of(subspaces: Sequence[AffineSubspace], n: int) -> IntersectionLattice:
    return intersection_semilattice(validate(subspaces, n))


def zz_skeleton(lattice: IntersectionLattice) -> SimplicialComplex:
    return order_complex(lattice.poset)


def nerve(lattice: IntersectionLattice) -> SimplicialComplex:
    return nerve_complex(lattice.poset)


def _boolean_chain_counts(s: int) -> list[int]:
    """``f[j]``: chains of nonempty subsets of a j-set whose top is the whole set."""
    f = [0] * (s + 1)
    for j in range(1, s + 1):
        f[j] = 1 + sum(comb(j, i) * f[i] for i in range(1, j))
    return f


def vassiliev_size(lattice: IntersectionLattice) -> int:
    """Number of simplices of Bd(N(L)) without building it."""
    n = nerve(lattice)
    sizes = [len(s) for s in n.simplices]
    f = _boolean_chain_counts(max(sizes, default=0))
    return sum(f[s] for s in sizes)


def vassiliev_skeleton(lattice: IntersectionLattice, max_simplices: int | None = None) -> SimplicialComplex:
    if max_simplices is not None:
        size = vassiliev_size(lattice)
        if size > max_simplices:
            raise TooLarge(
                f"Bd(N(L)) would have {size} simplices, above the limit of {max_simplices}"
            )
    return barycentric_subdivision(nerve(lattice))


def subspace_of_vertex_set(lattice: IntersectionLattice, atoms: Iterable[int]) -> AffineSubspace:
    atoms = list(atoms)
    if not atoms:
        raise ValueError("vertex set must be nonempty")
    x = join(lattice.poset, atoms)
    if x is None:
        raise NoJoin(f"atoms {sorted(a + 1 for a in atoms)} have empty intersection")
    return lattice.flat(x)


def intersection_of_atoms(lattice: IntersectionLattice, atoms: Iterable[int]) -> AffineSubspace:
    """The intersection of the input subspaces, computed directly by elimination."""
    atoms = sorted(atoms)
    subs = lattice.arrangement.subspaces
    out = subs[atoms[0]]
    for a in atoms[1:]:
        out = intersect(out, subs[a])
        if out is EMPTY:
            raise NoJoin(f"atoms {[b + 1 for b in atoms]} have empty intersection")
    return out
