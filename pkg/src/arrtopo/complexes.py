"""Abstract simplicial complexes and the poset constructions on them.

A complex keeps every face explicitly.  Vertices carry opaque hashable
labels; a simplex is a sorted tuple of vertex *indices* into
``SimplicialComplex.vertices``, so labels never need to be comparable.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from typing import Hashable, Iterable, Sequence

import numpy as np

from .poset import FinitePoset, join, minimal_elements


class NotAComplex(ValueError):
    pass


Simplex = tuple[int, ...]


class SimplicialComplex:
    def __init__(self, vertices: Sequence[Hashable], simplices: Iterable[Iterable[int]], *, check=True):
        self.vertices = tuple(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        if len(self.index) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        self.simplices = frozenset(tuple(sorted(set(s))) for s in simplices)
        if () in self.simplices:
            raise NotAComplex("the empty simplex is implicit and may not be listed")
        if check:
            self._check()

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Hashable]], vertices: Sequence[Hashable] | None = None):
        """Downward closure of ``facets`` given as label collections."""
        facets = [tuple(f) for f in facets]
        if vertices is None:
            seen = {}
            for f in facets:
                for v in f:
                    seen.setdefault(v, None)
            vertices = list(seen)
        index = {v: i for i, v in enumerate(vertices)}
        faces = set()
        for f in facets:
            idx = sorted({index[v] for v in f})
            for k in range(1, len(idx) + 1):
                faces.update(combinations(idx, k))
        return cls(vertices, faces, check=False)

    @classmethod
    def from_label_simplices(cls, simplices: Iterable[Iterable[Hashable]], vertices: Sequence[Hashable]):
        index = {v: i for i, v in enumerate(vertices)}
        return cls(vertices, [[index[v] for v in s] for s in simplices])

    def _check(self):
        n = len(self.vertices)
        for s in self.simplices:
            if s[0] < 0 or s[-1] >= n:
                raise NotAComplex(f"simplex {s} refers to unknown vertices")
        missing = downward_closure_violations(self.simplices)
        if missing:
            raise NotAComplex(f"not downward closed: missing face {min(missing)}")
        used = {v for s in self.simplices for v in s}
        if len(used) != n:
            raise NotAComplex("vertex list contains vertices that span no simplex")

    def __len__(self):
        return len(self.simplices)

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and set(self.vertices) == set(other.vertices)
            and self.label_simplices() == other.label_simplices()
        )

    def __hash__(self):
        return hash(self.label_simplices())

    def __repr__(self):
        return f"SimplicialComplex(f={self.f_vector()})"

    @property
    def dim(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    def label_simplices(self) -> frozenset[frozenset]:
        return frozenset(frozenset(self.vertices[i] for i in s) for s in self.simplices)

    def labels(self, s: Simplex) -> tuple:
        return tuple(self.vertices[i] for i in s)

    def simplex_of(self, labels: Iterable[Hashable]) -> Simplex:
        return tuple(sorted(self.index[v] for v in labels))

    def faces(self, d: int) -> list[Simplex]:
        """Simplices of dimension ``d``, sorted lexicographically."""
        return sorted(s for s in self.simplices if len(s) == d + 1)

    def f_vector(self) -> tuple[int, ...]:
        counts = defaultdict(int)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return tuple(counts[d] for d in range(self.dim + 1))

    def induced(self, simplices: Iterable[Simplex]) -> SimplicialComplex:
        """Complex on a downward-closed subset of this complex's simplices."""
        keep = set(simplices)
        missing = downward_closure_violations(keep)
        if missing:
            raise NotAComplex(f"not downward closed: missing face {min(missing)}")
        used = sorted({v for s in keep for v in s})
        remap = {old: new for new, old in enumerate(used)}
        return SimplicialComplex(
            [self.vertices[i] for i in used],
            [[remap[v] for v in s] for s in keep],
            check=False,
        )


def downward_closure_violations(simplices) -> set:
    simplices = set(simplices)
    missing = set()
    for s in simplices:
        if len(s) > 1:
            for k in range(len(s)):
                f = s[:k] + s[k + 1 :]
                if f not in simplices:
                    missing.add(f)
    return missing


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex((), ())


def order_complex(p: FinitePoset) -> SimplicialComplex:
    chains = p.chains()
    return SimplicialComplex(p.elements, [[p.index[x] for x in c] for c in chains], check=False)


def nerve_complex(p: FinitePoset) -> SimplicialComplex:
    """Complex on the minimal elements whose simplices are the sets with a join.

    Subsets are grown one atom at a time; a set without a join has no
    superset with a join, so the search only extends simplices.
    """
    atoms = minimal_elements(p)
    simplices = []
    frontier = [(i,) for i in range(len(atoms))]
    while frontier:
        simplices.extend(frontier)
        nxt = []
        for s in frontier:
            for j in range(s[-1] + 1, len(atoms)):
                cand = s + (j,)
                if join(p, [atoms[i] for i in cand]) is not None:
                    nxt.append(cand)
        frontier = nxt
    return SimplicialComplex(atoms, simplices, check=False)


def face_poset(k: SimplicialComplex) -> FinitePoset:
    """Faces (as frozensets of vertex labels) ordered by inclusion."""
    faces = sorted(k.simplices, key=lambda s: (len(s), s))
    labels = [frozenset(k.labels(s)) for s in faces]
    pos = {s: i for i, s in enumerate(faces)}
    n = len(faces)
    table = np.eye(n, dtype=bool)
    for s in faces:
        i = pos[s]
        for r in range(1, len(s)):
            for sub in combinations(s, r):
                table[pos[sub], i] = True
    return FinitePoset(labels, table, check=False)


def face_covers(k: SimplicialComplex) -> list[tuple[Simplex, Simplex]]:
    """Covering pairs of the face poset: each simplex with its codim-1 faces."""
    out = []
    for s in k.simplices:
        if len(s) > 1:
            for i in range(len(s)):
                out.append((s[:i] + s[i + 1 :], s))
    return out


def barycentric_subdivision(k: SimplicialComplex) -> SimplicialComplex:
    return order_complex(face_poset(k))


def join_complex(k: SimplicialComplex, l: SimplicialComplex) -> SimplicialComplex:
    """Join with vertex labels ``(0, v)`` for ``k`` and ``(1, w)`` for ``l``."""
    verts = [(0, v) for v in k.vertices] + [(1, w) for w in l.vertices]
    off = len(k.vertices)
    left = [()] + sorted(k.simplices)
    right = [()] + [tuple(off + i for i in s) for s in sorted(l.simplices)]
    simplices = [a + b for a in left for b in right if a or b]
    return SimplicialComplex(verts, simplices, check=False)


def sphere_complex(d: int) -> SimplicialComplex:
    """Boundary of the (d+1)-simplex; empty for d = -1."""
    if d < -1:
        raise ValueError("sphere dimension must be >= -1")
    if d == -1:
        return empty_complex()
    verts = list(range(d + 2))
    return SimplicialComplex(
        verts,
        [c for r in range(1, d + 2) for c in combinations(verts, r)],
        check=False,
    )


def full_simplex(d: int) -> SimplicialComplex:
    verts = list(range(d + 1))
    return SimplicialComplex(verts, [c for r in range(1, d + 2) for c in combinations(verts, r)], check=False)


def euler_characteristic(k: SimplicialComplex) -> int:
    return sum((-1) ** (len(s) - 1) for s in k.simplices)


def relabel(k: SimplicialComplex, mapping) -> SimplicialComplex:
    return SimplicialComplex([mapping[v] for v in k.vertices], k.simplices, check=False)


def is_isomorphic_under(k: SimplicialComplex, l: SimplicialComplex, mapping) -> bool:
    """True iff the vertex bijection ``mapping`` carries ``k`` exactly onto ``l``."""
    images = [mapping[v] for v in k.vertices]
    if len(set(images)) != len(images) or set(images) != set(l.vertices):
        return False
    return relabel(k, mapping).label_simplices() == l.label_simplices()
