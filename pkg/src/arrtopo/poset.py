"""Finite posets stored as a dense ``leq`` table."""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np


class NotASemilattice(ValueError):
    pass


class FinitePoset:
    """A finite poset on hashable labels.

    ``leq[i, j]`` is True iff ``elements[i] <= elements[j]``.  Instances are
    treated as immutable; the table is marked read-only.
    """

    def __init__(self, elements: Sequence[Hashable], leq: np.ndarray, *, check: bool = True):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate poset elements")
        leq = np.array(leq, dtype=bool).reshape(len(self.elements), len(self.elements))
        leq.setflags(write=False)
        self.leq = leq
        if check:
            self._check_order()

    @classmethod
    def from_relation(cls, elements: Sequence[Hashable], le: Callable[[Hashable, Hashable], bool]):
        els = tuple(elements)
        table = np.array([[le(a, b) for b in els] for a in els], dtype=bool).reshape(
            len(els), len(els)
        )
        return cls(els, table)

    @classmethod
    def from_covers(cls, elements: Sequence[Hashable], covers: Iterable[tuple]):
        """Build from generating relations ``a < b``; closes transitively."""
        els = tuple(elements)
        idx = {x: i for i, x in enumerate(els)}
        n = len(els)
        table = np.eye(n, dtype=bool)
        for a, b in covers:
            table[idx[a], idx[b]] = True
        for k in range(n):
            table |= np.outer(table[:, k], table[k, :])
        return cls(els, table)

    def _check_order(self):
        t = self.leq
        if not t.diagonal().all():
            raise ValueError("relation is not reflexive")
        if (t & t.T & ~np.eye(len(t), dtype=bool)).any():
            raise ValueError("relation is not antisymmetric")
        ti = t.astype(np.int64)
        if ((ti @ ti > 0) & ~t).any():
            raise ValueError("relation is not transitive")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __repr__(self):
        return f"FinitePoset({len(self)} elements)"

    def __eq__(self, other):
        if not isinstance(other, FinitePoset) or set(self.elements) != set(other.elements):
            return False
        perm = [other.index[x] for x in self.elements]
        return bool((other.leq[np.ix_(perm, perm)] == self.leq).all())

    def __hash__(self):
        return hash(frozenset(self.elements))

    def le(self, x, y) -> bool:
        return bool(self.leq[self.index[x], self.index[y]])

    def lt(self, x, y) -> bool:
        return x != y and self.le(x, y)

    def _idx(self, x) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise KeyError(f"unknown poset element {x!r}") from None

    def up(self, x) -> list:
        i = self._idx(x)
        return [self.elements[j] for j in np.flatnonzero(self.leq[i])]

    def down(self, x) -> list:
        i = self._idx(x)
        return [self.elements[j] for j in np.flatnonzero(self.leq[:, i])]

    def subposet(self, elements: Iterable) -> FinitePoset:
        keep = sorted({self._idx(x) for x in elements})
        return FinitePoset(
            [self.elements[i] for i in keep], self.leq[np.ix_(keep, keep)], check=False
        )

    def is_chain(self, subset: Iterable) -> bool:
        idx = [self._idx(x) for x in subset]
        sub = self.leq[np.ix_(idx, idx)]
        return bool((sub | sub.T).all())

    def chains(self) -> list[tuple]:
        """All nonempty chains, each listed bottom to top."""
        n = len(self)
        strict = self.leq & ~np.eye(n, dtype=bool)
        above = [np.flatnonzero(strict[i]).tolist() for i in range(n)]
        out = []

        def extend(chain):
            out.append(tuple(self.elements[i] for i in chain))
            for j in above[chain[-1]]:
                extend(chain + [j])

        for i in range(n):
            extend([i])
        return out


def minimal_elements(p: FinitePoset) -> list:
    n = len(p)
    strict_below = p.leq & ~np.eye(n, dtype=bool)
    return [p.elements[j] for j in range(n) if not strict_below[:, j].any()]


def maximal_elements(p: FinitePoset) -> list:
    n = len(p)
    strict_above = p.leq & ~np.eye(n, dtype=bool)
    return [p.elements[i] for i in range(n) if not strict_above[i].any()]


def lower_set(p: FinitePoset, x, strict: bool = False) -> FinitePoset:
    i = p._idx(x)
    mask = p.leq[:, i].copy()
    if strict:
        mask[i] = False
    return p.subposet(p.elements[j] for j in np.flatnonzero(mask))


def upper_set(p: FinitePoset, x, strict: bool = False) -> FinitePoset:
    i = p._idx(x)
    mask = p.leq[i].copy()
    if strict:
        mask[i] = False
    return p.subposet(p.elements[j] for j in np.flatnonzero(mask))


def _extreme(p: FinitePoset, mask: np.ndarray, least: bool):
    cand = np.flatnonzero(mask)
    if len(cand) == 0:
        return None, False
    sub = p.leq[np.ix_(cand, cand)]
    # least: below every candidate; greatest: above every candidate
    hits = np.flatnonzero(sub.all(axis=1) if least else sub.all(axis=0))
    if len(hits) == 0:
        return None, True
    return p.elements[cand[hits[0]]], False


def join(p: FinitePoset, subset: Iterable):
    """Least upper bound of ``subset``; None when there is no upper bound.

    Raises NotASemilattice when upper bounds exist but none is least.
    """
    idx = [p._idx(x) for x in subset]
    if not idx:
        raise ValueError("join of an empty set is undefined")
    mask = p.leq[idx].all(axis=0)
    result, broken = _extreme(p, mask, least=True)
    if broken:
        raise NotASemilattice(
            f"upper bounds of {[p.elements[i] for i in idx]!r} have no least element"
        )
    return result


def meet(p: FinitePoset, subset: Iterable):
    idx = [p._idx(x) for x in subset]
    if not idx:
        raise ValueError("meet of an empty set is undefined")
    mask = p.leq[:, idx].all(axis=1)
    result, broken = _extreme(p, mask, least=False)
    if broken:
        raise NotASemilattice(
            f"lower bounds of {[p.elements[i] for i in idx]!r} have no greatest element"
        )
    return result


def is_semilattice(p: FinitePoset) -> bool:
    for x, y in combinations(p.elements, 2):
        try:
            join(p, (x, y))
            meet(p, (x, y))
        except NotASemilattice:
            return False
    return True


def covering_pairs(p: FinitePoset) -> list[tuple]:
    """Pairs ``(s, t)`` with ``s < t`` and nothing strictly between."""
    n = len(p)
    strict = p.leq & ~np.eye(n, dtype=bool)
    si = strict.astype(np.int64)
    between = (si @ si) > 0
    cover = strict & ~between
    return [(p.elements[i], p.elements[j]) for i, j in zip(*np.nonzero(cover))]


def barycentric_subdivision_poset(p: FinitePoset) -> FinitePoset:
    """Poset of nonempty chains (as frozensets) ordered by inclusion."""
    chains = [frozenset(c) for c in p.chains()]
    chains.sort(key=lambda c: (len(c), sorted(p.index[x] for x in c)))
    n = len(chains)
    table = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(chains):
        for j, b in enumerate(chains):
            table[i, j] = a <= b
    return FinitePoset(chains, table, check=False)
