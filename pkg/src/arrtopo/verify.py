"""Invariant suites run by ``arrtopo verify``.

Each check returns ``(name, ok, detail)``.  A check that raises is recorded
as a failure with the exception text, so one bug does not hide the others.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import exactlin as el
from .arrangement import (
    Arrangement,
    IntersectionLattice,
    intersection_of_atoms,
    intersection_semilattice,
    vassiliev_skeleton,
)
from .complexes import (
    SimplicialComplex,
    barycentric_subdivision,
    downward_closure_violations,
    euler_characteristic,
    join_complex,
    nerve_complex,
    order_complex,
    sphere_complex,
)
from .homology import (
    boundary_matrix,
    duality_verdict,
    reduced_homology,
    shift_join_sphere,
)
from .morse import (
    backward_by_rule,
    build_matching,
    collapse_sequence,
    collapse_states,
    critical_subcomplex,
    verify_acyclic,
    verify_identity_condition,
    verify_iota_monotone,
)
from .poset import is_semilattice, join, minimal_elements


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


class InvariantFailure(AssertionError):
    pass


def _require(cond, msg: str) -> None:
    if not cond:
        raise InvariantFailure(msg)


def check_exactlin(arr: Arrangement, rng: random.Random) -> str:
    subs = arr.subspaces
    for s in subs:
        _require(el.canonicalize(s.rows, s.rhs, s.ambient_dim) == s, "canonicalize not idempotent")
        _require(el.intersect(s, s) == s, "S ∩ S != S")
        point, dirs = el.parametrize(s)
        for _ in range(3):
            p = [Fraction(v) for v in point]
            for d in dirs:
                c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                p = [a + c * b for a, b in zip(p, d)]
            _require(s.satisfied_by(p), "parametric point violates an equation")
        _require(el.from_point_directions(point, dirs) == s, "parametric round trip failed")
    for s, t in combinations(subs, 2):
        st, ts = el.intersect(s, t), el.intersect(t, s)
        _require(st == ts, "intersection not commutative")
        if st is not el.EMPTY:
            _require(el.contains(s, st) and el.contains(t, st), "S ∩ T not contained in S")
            _require(st.dimension <= min(s.dimension, t.dimension), "dimension not monotone")
    for s, t, u in combinations(subs, 3):
        left = el.intersect(s, t)
        left = el.EMPTY if left is el.EMPTY else el.intersect(left, u)
        right = el.intersect(t, u)
        right = el.EMPTY if right is el.EMPTY else el.intersect(s, right)
        _require(left == right, "intersection not associative")
    return f"{len(subs)} subspaces"


def check_poset(lat: IntersectionLattice) -> str:
    p = lat.poset
    p._check_order()
    _require(is_semilattice(p), "L is not a semilattice")
    for x in p.elements:
        _require(join(p, [x]) == x, "join of a singleton")
    _require(sorted(minimal_elements(p)) == list(lat.atoms), "minimal elements are not the atoms")
    return f"{len(p)} elements"


def check_lattice(lat: IntersectionLattice) -> str:
    p = lat.poset
    _require(len(set(lat.flats)) == len(lat.flats), "B is not injective")
    for x in p.elements:
        below = sorted(lat.atoms_below(x))
        _require(intersection_of_atoms(lat, below) == lat.flat(x), "B(x) != ∩ of atoms below x")
        for y in p.elements:
            lt = p.lt(x, y)
            proper = lat.flat(x) != lat.flat(y) and el.contains(lat.flat(x), lat.flat(y))
            _require(lt == proper, "order is not reverse inclusion")
            if lt:
                _require(lat.dim(x) > lat.dim(y), "dimension not strictly decreasing")
    for x, y in combinations(p.elements, 2):
        g = el.intersect(lat.flat(x), lat.flat(y))
        if g is not el.EMPTY:
            _require(lat.element_of(g) is not None, "not closed under intersection")
    return f"{len(p)} flats"


def check_complexes(lat: IntersectionLattice, zz: SimplicialComplex, nerve: SimplicialComplex) -> str:
    bd = barycentric_subdivision(nerve)
    for k in (zz, nerve, bd):
        _require(not downward_closure_violations(k.simplices), "constructor output not closed")
    _require(euler_characteristic(bd) == euler_characteristic(nerve), "χ changed by subdivision")
    s0 = sphere_complex(0)
    j = join_complex(zz, s0)
    a, b = euler_characteristic(zz), euler_characteristic(s0)
    _require(euler_characteristic(j) == a + b - a * b, "χ of a join")
    return f"χ(Δ(L)) = {a}"


def check_nerve_theorem(zz: SimplicialComplex, vass: SimplicialComplex) -> str:
    hz, hv = reduced_homology(zz), reduced_homology(vass)
    _require(hz == hv, f"H(Bd N(L)) = {hv} but H(Δ(L)) = {hz}")
    return f"both models have {'trivial reduced homology' if hz.is_zero() else hz}"


def check_homology_engine(zz: SimplicialComplex) -> str:
    for d in range(1, zz.dim + 1):
        a, b = boundary_matrix(zz, d - 1), boundary_matrix(zz, d)
        _require(not (a @ b).any(), f"∂∂ != 0 in degree {d}")
    h = reduced_homology(zz)
    alt = sum((-1) ** d * f for d, f, _ in h.groups)
    _require(alt + 1 == euler_characteristic(zz), "Euler–Betti relation")
    for d in (-1, 0, 1, 2):
        explicit = reduced_homology(join_complex(zz, sphere_complex(d)))
        _require(shift_join_sphere(h, d) == explicit, f"join shift fails for d={d}")
    return f"∂∂ = 0, Euler–Betti and join shifts hold; Δ(L): {'acyclic' if h.is_zero() else h}"


def check_matching(lat: IntersectionLattice, vass: SimplicialComplex) -> str:
    w = build_matching(lat, vass)
    fwd, bwd, crit = w.forward, w.backward, w.critical
    _require(len(fwd) == len(bwd) == len(w.pairs), "pair count mismatch")
    _require(not (fwd & bwd) and not (fwd & crit) and not (bwd & crit), "classes overlap")
    _require(len(fwd) + len(bwd) + len(crit) == len(vass), "classes do not cover Bd(N(L))")
    _require(bwd == backward_by_rule(lat, vass), "backward set differs from its defining rule")
    a, b = verify_acyclic(vass, w), verify_iota_monotone(lat, w)
    _require(a and b, f"acyclicity: cycle search {a}, ι certificate {b}")
    report = verify_identity_condition(lat, w)
    _require(report.passed, f"identity conditions {report.n_passed}/{len(report)}")
    critical_subcomplex(vass, w, lat)
    return f"{len(w)} pairs, {len(crit)} critical"


def check_collapse(lat: IntersectionLattice, vass: SimplicialComplex) -> str:
    w = build_matching(lat, vass)
    steps = collapse_sequence(vass, w)
    h0, chi0 = reduced_homology(vass), euler_characteristic(vass)
    final = vass
    for n, k in enumerate(collapse_states(vass, steps), 1):
        _require(euler_characteristic(k) == chi0, f"χ changed at step {n}")
        _require(reduced_homology(k) == h0, f"homology changed at step {n}")
        final = k
    _require(final == critical_subcomplex(vass, w), "collapse did not end at the critical complex")
    return f"{len(steps)} steps, {len(vass)} → {len(final)}"


def check_duality(lat: IntersectionLattice) -> str:
    v = duality_verdict(lat, lat.ambient_dim)
    _require(v != "fail", "free ranks disagree")
    return v


def run_suite(arr: Arrangement, seed: int = 0, max_simplices: int | None = None) -> list[CheckResult]:
    results = []

    def run(name: str, fn: Callable[[], str]):
        try:
            results.append(CheckResult(name, True, fn()))
        except Exception as exc:  # noqa: BLE001 - reported, not swallowed
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))

    rng = random.Random(seed)
    lat = intersection_semilattice(arr)
    zz = order_complex(lat.poset)
    nerve = nerve_complex(lat.poset)
    vass = vassiliev_skeleton(lat, max_simplices=max_simplices)
    run("exactlin", lambda: check_exactlin(arr, rng))
    run("poset", lambda: check_poset(lat))
    run("lattice", lambda: check_lattice(lat))
    run("complexes", lambda: check_complexes(lat, zz, nerve))
    run("nerve-theorem", lambda: check_nerve_theorem(zz, vass))
    run("homology-engine", lambda: check_homology_engine(zz))
    run("matching", lambda: check_matching(lat, vass))
    run("collapse", lambda: check_collapse(lat, vass))
    run("duality", lambda: check_duality(lat))
    return results
