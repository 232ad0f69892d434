"""Exact rational affine subspaces of Q^n.

Subspaces are stored as the reduced row echelon form of a consistent
linear system ``A x = b``.  Because the RREF of a row space is unique, two
:class:`AffineSubspace` values are equal exactly when they describe the same
point set, which makes them usable as dictionary keys.

>>> x_axis = canonicalize([[0, 1]], [0], 2)
>>> y_axis = canonicalize([[1, 0]], [0], 2)
>>> intersect(x_axis, y_axis).dimension
0
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction, str]


class DimensionMismatch(ValueError):
    pass


class EmptySet:
    """The empty intersection.  A singleton; compare with ``is EMPTY``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EmptySet"

    def __bool__(self):
        return False

    def __reduce__(self):
        return (EmptySet, ())


EMPTY = EmptySet()


@dataclass(frozen=True)
class AffineSubspace:
    ambient_dim: int
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    @property
    def dimension(self) -> int:
        return self.ambient_dim - len(self.rows)

    @property
    def codimension(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, v in enumerate(row) if v) for row in self.rows)

    def satisfied_by(self, point: Sequence[Rational]) -> bool:
        if len(point) != self.ambient_dim:
            raise DimensionMismatch(
                f"point has {len(point)} coordinates, expected {self.ambient_dim}"
            )
        p = [Fraction(v) for v in point]
        return all(
            sum((a * x for a, x in zip(row, p)), Fraction(0)) == b
            for row, b in zip(self.rows, self.rhs)
        )

    def to_strings(self) -> dict:
        return {
            "equations": [[str(v) for v in row] for row in self.rows],
            "rhs": [str(v) for v in self.rhs],
        }

    def __str__(self):
        if not self.rows:
            return f"Q^{self.ambient_dim}"
        eqs = []
        for row, b in zip(self.rows, self.rhs):
            terms = []
            for j, a in enumerate(row):
                if a == 0:
                    continue
                coef = "" if a == 1 else "-" if a == -1 else f"{a}*"
                terms.append(f"{coef}x{j + 1}")
            eqs.append(" + ".join(terms).replace("+ -", "- ") + f" = {b}")
        return "{" + ", ".join(eqs) + "}"


def full_space(n: int) -> AffineSubspace:
    return AffineSubspace(n, (), ())


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduce ``rows`` in place over the first ``ncols`` columns.

    Extra trailing columns (an augmented right-hand side) are carried along
    but never chosen as pivots.  Returns the nonzero rows and pivot columns.
    """
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        piv_row = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], piv_row)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _as_fraction(v: Rational) -> Fraction:
    if isinstance(v, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(v)


def canonicalize(
    equations: Iterable[Sequence[Rational]],
    rhs: Sequence[Rational],
    n: int,
) -> AffineSubspace | EmptySet:
    """Return the canonical form of ``{x : equations @ x == rhs}``, or EMPTY."""
    eq = [list(map(_as_fraction, row)) for row in equations]
    b = [_as_fraction(v) for v in rhs]
    if len(eq) != len(b):
        raise DimensionMismatch(f"{len(eq)} equations but {len(b)} right-hand sides")
    for i, row in enumerate(eq):
        if len(row) != n:
            raise DimensionMismatch(f"equation {i} has {len(row)} coefficients, expected {n}")
    aug = [row + [v] for row, v in zip(eq, b)]
    reduced, _ = _rref(aug, n + 1)
    # a pivot in the rhs column means 0 = 1
    if reduced and all(v == 0 for v in reduced[-1][:n]):
        return EMPTY
    return AffineSubspace(
        n,
        tuple(tuple(row[:n]) for row in reduced),
        tuple(row[n] for row in reduced),
    )


def _check_same_ambient(s: AffineSubspace, t: AffineSubspace) -> None:
    if s.ambient_dim != t.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {s.ambient_dim} vs {t.ambient_dim}"
        )


def intersect(s: AffineSubspace, t: AffineSubspace) -> AffineSubspace | EmptySet:
    _check_same_ambient(s, t)
    return canonicalize(s.rows + t.rows, s.rhs + t.rhs, s.ambient_dim)


def contains(s: AffineSubspace, t: AffineSubspace) -> bool:
    """True iff ``t`` is a subset of ``s``."""
    _check_same_ambient(s, t)
    # t's system already has full rank r_t; adding s's equations must not
    # change the solution set, i.e. the joint system is t itself.
    return intersect(s, t) == t


def dimension(s: AffineSubspace) -> int:
    return s.dimension


def parametrize(s: AffineSubspace) -> tuple[tuple[Fraction, ...], list[tuple[Fraction, ...]]]:
    """A base point and a basis of directions with ``s = point + span(directions)``."""
    n = s.ambient_dim
    pivots = s.pivots
    point = [Fraction(0)] * n
    for row, b, p in zip(s.rows, s.rhs, pivots):
        point[p] = b
    free = [j for j in range(n) if j not in pivots]
    directions = []
    for f in free:
        d = [Fraction(0)] * n
        d[f] = Fraction(1)
        for row, p in zip(s.rows, pivots):
            d[p] = -row[f]
        directions.append(tuple(d))
    return tuple(point), directions


def from_point_directions(
    point: Sequence[Rational], directions: Sequence[Sequence[Rational]]
) -> AffineSubspace:
    """Equation form of ``point + span(directions)``."""
    n = len(point)
    dirs = [list(map(_as_fraction, d)) for d in directions]
    for i, d in enumerate(dirs):
        if len(d) != n:
            raise DimensionMismatch(f"direction {i} has {len(d)} coordinates, expected {n}")
    p = [_as_fraction(v) for v in point]
    # equations are the null space of the direction matrix
    if dirs:
        reduced, pivots = _rref([d[:] for d in dirs], n)
        basis_sub = AffineSubspace(
            n, tuple(tuple(r) for r in reduced), tuple(Fraction(0) for _ in reduced)
        )
        _, normals = parametrize(basis_sub)
    else:
        normals = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    rhs = [sum((a * x for a, x in zip(normal, p)), Fraction(0)) for normal in normals]
    out = canonicalize(normals, rhs, n)
    assert out is not EMPTY
    return out
