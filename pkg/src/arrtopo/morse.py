"""The completion matching on Bd(N(L)) and the collapse it induces.

A simplex of Bd(N(L)) is a chain ``S_1 < ... < S_t`` of atom sets, each of
which has a join in L.  Inside this module such a simplex is handled in two
forms: as a frozenset of its vertices (the atom sets), which is how
:class:`Matching` stores it, and as the tuple ordered by inclusion, which is
what the pivot rule reads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Callable, Iterable, Iterator

from .arrangement import IntersectionLattice, NoJoin, intersection_of_atoms, vassiliev_skeleton
from .complexes import NotAComplex, SimplicialComplex, is_isomorphic_under, order_complex
from .poset import join

ChainSimplex = tuple[frozenset, ...]
Face = frozenset  # a simplex as the set of its vertex labels


class StuckCollapse(RuntimeError):
    pass


def as_chain(face: Iterable[frozenset]) -> ChainSimplex:
    chain = tuple(sorted(face, key=len))
    for a, b in zip(chain, chain[1:]):
        if not a < b:
            raise ValueError(f"{format_chain(chain)} is not a chain of atom sets")
    return chain


def format_atoms(s: Iterable[int], name: Callable[[int], str] | None = None) -> str:
    name = name or (lambda a: f"a{a + 1}")
    return "{" + ",".join(name(a) for a in sorted(s)) + "}"


def format_chain(chain: Iterable[frozenset], name=None) -> str:
    return "(" + " < ".join(format_atoms(s, name) for s in sorted(chain, key=len)) + ")"


@dataclass(frozen=True)
class Matching:
    """Disjoint covering pairs ``(sigma, tau)`` on the faces of a complex."""

    pairs: tuple[tuple[Face, Face], ...]
    critical: frozenset = field(default=frozenset())

    def __post_init__(self):
        seen = set()
        for s, t in self.pairs:
            if not (s < t and len(t) == len(s) + 1):
                raise ValueError(f"{set(s)} is not a facet of {set(t)}")
            if s in seen or t in seen:
                raise ValueError("matching pairs are not disjoint")
            seen.update((s, t))
        if seen & self.critical:
            raise ValueError("a matched simplex is listed as critical")

    @classmethod
    def on(cls, k: SimplicialComplex, pairs: Iterable[tuple[Iterable, Iterable]]) -> Matching:
        """Matching on ``k`` given label collections; critical = everything unmatched."""
        pairs = tuple((frozenset(s), frozenset(t)) for s, t in pairs)
        matched = {f for p in pairs for f in p}
        faces = {frozenset(k.labels(s)) for s in k.simplices}
        if not matched <= faces:
            raise ValueError("matching refers to simplices outside the complex")
        return cls(pairs, frozenset(faces - matched))

    def __len__(self):
        return len(self.pairs)

    @property
    def forward(self) -> frozenset:
        return frozenset(s for s, _ in self.pairs)

    @property
    def backward(self) -> frozenset:
        return frozenset(t for _, t in self.pairs)

    def partner(self, sigma: Face) -> Face:
        return dict(self.pairs)[sigma]


# --- completeness ----------------------------------------------------------

def is_complete(lattice: IntersectionLattice, atoms: Iterable[int]) -> bool:
    atoms = frozenset(atoms)
    x = join(lattice.poset, atoms)
    return x is not None and lattice.atoms_below(x) == atoms


def completion(lattice: IntersectionLattice, atoms: Iterable[int]) -> frozenset[int]:
    atoms = frozenset(atoms)
    x = join(lattice.poset, atoms)
    if x is None:
        raise NoJoin(f"{format_atoms(atoms)} has no join")
    return lattice.atoms_below(x)


def pivot(lattice: IntersectionLattice, chain: Iterable[frozenset]):
    """``(S_i, i)`` for the incomplete entry of largest 1-based index, else ``(None, None)``."""
    chain = as_chain(chain)
    for i in range(len(chain), 0, -1):
        if not is_complete(lattice, chain[i - 1]):
            return chain[i - 1], i
    return None, None


def iota(lattice, chain) -> int | None:
    return pivot(lattice, chain)[1]


# --- the matching ----------------------------------------------------------

def build_matching(lattice: IntersectionLattice, k: SimplicialComplex | None = None) -> Matching:
    """Pair each chain whose pivot's completion is absent with the chain plus it."""
    k = k if k is not None else vassiliev_skeleton(lattice)
    complete = {}

    def _complete(s):
        if s not in complete:
            complete[s] = is_complete(lattice, s)
        return complete[s]

    pairs = []
    critical = []
    for simplex in sorted(k.simplices):
        face = frozenset(k.labels(simplex))
        chain = as_chain(face)
        piv = next((s for s in reversed(chain) if not _complete(s)), None)
        if piv is None:
            critical.append(face)
            continue
        c = completion(lattice, piv)
        if c not in face:
            pairs.append((face, face | {c}))
    return Matching(tuple(pairs), frozenset(critical))


def backward_by_rule(lattice: IntersectionLattice, k: SimplicialComplex) -> frozenset:
    """Chains with a pivot whose completion they already contain."""
    out = set()
    for simplex in k.simplices:
        face = frozenset(k.labels(simplex))
        piv, _ = pivot(lattice, face)
        if piv is not None and completion(lattice, piv) in face:
            out.add(face)
    return frozenset(out)


# --- acyclicity ------------------------------------------------------------

def verify_acyclic(k: SimplicialComplex, w: Matching) -> bool:
    """Cycle search in the Hasse diagram with matched edges pointing up."""
    up = {(k.simplex_of(s), k.simplex_of(t)) for s, t in w.pairs}
    ts = TopologicalSorter()
    for simplex in k.simplices:
        ts.add(simplex)
        for i in range(len(simplex)):
            facet = simplex[:i] + simplex[i + 1 :]
            if not facet:
                continue
            if (facet, simplex) in up:
                ts.add(simplex, facet)
            else:
                ts.add(facet, simplex)
    try:
        ts.prepare()
    except CycleError:
        return False
    return True


def verify_iota_monotone(lattice: IntersectionLattice, w: Matching) -> bool:
    forward = w.forward
    for sigma, tau in w.pairs:
        i_sigma = iota(lattice, sigma)
        if i_sigma is None or i_sigma != iota(lattice, tau):
            return False
        for v in tau:
            other = tau - {v}
            if other and other != sigma and other in forward:
                if iota(lattice, other) >= i_sigma:
                    return False
    return True


# --- critical cells and collapses ------------------------------------------

def critical_subcomplex(
    k: SimplicialComplex, w: Matching, lattice: IntersectionLattice | None = None
) -> SimplicialComplex:
    """The unmatched simplices as a complex.

    With ``lattice`` given, also checks that relabelling each atom set by its
    join turns the result into the order complex of L.
    """
    matched = {f for p in w.pairs for f in p}
    keep = [s for s in k.simplices if frozenset(k.labels(s)) not in matched]
    crit = k.induced(keep)
    if lattice is not None and not critical_matches_order_complex(lattice, crit):
        raise NotAComplex("critical subcomplex is not isomorphic to the order complex of L")
    return crit


def critical_matches_order_complex(lattice: IntersectionLattice, crit: SimplicialComplex) -> bool:
    mapping = {s: join(lattice.poset, s) for s in crit.vertices}
    return is_isomorphic_under(crit, order_complex(lattice.poset), mapping)


def _facet_counts(simplices: set) -> dict:
    counts = {s: 0 for s in simplices}
    for s in simplices:
        for i in range(len(s)):
            f = s[:i] + s[i + 1 :]
            if f:
                counts[f] += 1
    return counts


def collapse_sequence(k: SimplicialComplex, w: Matching) -> list[tuple[Face, Face]]:
    """Order the pairs of ``w`` into elementary collapses of ``k``.

    Pairs are scanned by decreasing dimension of tau and then by the vertex
    indices of tau and sigma; the first pair whose sigma is currently a free
    face of tau is removed, and the scan restarts.
    """
    remaining = sorted(
        ((k.simplex_of(s), k.simplex_of(t)) for s, t in w.pairs),
        key=lambda p: (-len(p[1]), p[1], p[0]),
    )
    present = set(k.simplices)
    cofacets = _facet_counts(present)
    out = []
    while remaining:
        for idx, (s, t) in enumerate(remaining):
            if cofacets[s] == 1 and cofacets[t] == 0:
                break
        else:
            raise StuckCollapse(f"no free pair among {len(remaining)} remaining")
        del remaining[idx]
        for simplex in (t, s):
            present.discard(simplex)
            for i in range(len(simplex)):
                f = simplex[:i] + simplex[i + 1 :]
                if f:
                    cofacets[f] -= 1
        out.append((frozenset(k.labels(s)), frozenset(k.labels(t))))
    return out


def collapse_states(k: SimplicialComplex, steps) -> Iterator[SimplicialComplex]:
    """The complex after each step of ``steps``, verifying every step is a free-face removal."""
    present = set(k.simplices)
    for n, (s, t) in enumerate(steps, 1):
        si, ti = k.simplex_of(s), k.simplex_of(t)
        cofaces = [x for x in present if len(x) > len(si) and set(si) <= set(x)]
        if cofaces != [ti]:
            raise StuckCollapse(f"step {n}: sigma is not a free face of tau")
        present -= {si, ti}
        yield k.induced(present)


def trace_lines(steps, name=None) -> list[str]:
    return [
        f"step {n}: remove σ={format_chain(s, name)}, τ={format_chain(t, name)}"
        for n, (s, t) in enumerate(steps, 1)
    ]


# --- identity maps ---------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    sigma: Face
    tau: Face
    checked: bool  # False: the map is an identity by construction
    passed: bool


@dataclass(frozen=True)
class IdentityReport:
    entries: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def n_passed(self) -> int:
        return sum(e.passed for e in self.entries)

    @property
    def n_checked(self) -> int:
        return sum(e.checked for e in self.entries)

    def __len__(self):
        return len(self.entries)


def verify_identity_condition(lattice: IntersectionLattice, w: Matching) -> IdentityReport:
    """Check that the diagram map along every matched pair is an identity.

    Only pairs whose pivot is the top of the chain carry a nontrivial
    inclusion, from the intersection over the completion to the
    intersection over the pivot; both sides are recomputed from the input
    subspaces by elimination and compared.
    """
    entries = []
    for sigma, tau in w.pairs:
        chain = as_chain(sigma)
        piv, i = pivot(lattice, chain)
        if piv is None:
            entries.append(IdentityCheck(sigma, tau, True, False))
            continue
        if i < len(chain):
            entries.append(IdentityCheck(sigma, tau, False, True))
            continue
        try:
            ok = intersection_of_atoms(lattice, piv) == intersection_of_atoms(
                lattice, completion(lattice, piv)
            )
        except NoJoin:
            ok = False
        entries.append(IdentityCheck(sigma, tau, True, ok))
    return IdentityReport(tuple(entries))
