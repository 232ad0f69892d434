"""Command-line entry point: ``arrtopo {lattice,models,collapse,betti,verify}``.

Exit codes: 0 success, 1 invariant failure, 2 validation failure (including
the size guard), 3 parse failure, 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrangement import TooLarge, intersection_semilattice, vassiliev_skeleton, vassiliev_size, zz_skeleton
from .complexes import NotAComplex, euler_characteristic
from .generate import random_arrangements
from .homology import compactified_union_homology, complement_cohomology, duality_verdict, lower_interval_homologies
from .io import ParseError, ValidationError, lattice_report, load_arrangement, profile_to_json
from .morse import (
    StuckCollapse,
    build_matching,
    collapse_sequence,
    critical_matches_order_complex,
    critical_subcomplex,
    trace_lines,
    verify_acyclic,
    verify_identity_condition,
    verify_iota_monotone,
)
from .verify import run_suite

EXIT_INVARIANT, EXIT_VALIDATION, EXIT_PARSE, EXIT_INTERNAL = 1, 2, 3, 4
DEFAULT_MAX_SIMPLICES = 200_000


class CommandFailed(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))


def _load(args):
    arr = load_arrangement(args.file)
    lat = intersection_semilattice(arr)
    return arr, lat


def _guard(lat, args) -> None:
    size = vassiliev_size(lat)
    if size > args.max_simplices:
        raise TooLarge(
            f"Bd(N(L)) would have {size} simplices, above --max-simplices {args.max_simplices}"
        )


def cmd_lattice(args) -> int:
    _, lat = _load(args)
    report = lattice_report(lat)
    covers = lat.covers()
    lines = [f"L(A): {len(lat)} elements, {len(covers)} covers"]
    for x, e in zip(lat.poset.elements, report):
        flat = lat.flat(x)
        lines.append(f"  {e['name']:<4} dim {e['dim']}  {flat}  atoms {{{','.join(e['atoms'])}}}")
    lines += [f"  {lat.name(a)} < {lat.name(b)}" for a, b in covers]
    _emit(args, {"lattice": report}, lines)
    return 0


def _fvec(k) -> list[int]:
    return list(k.f_vector())


def cmd_models(args) -> int:
    _, lat = _load(args)
    _guard(lat, args)
    vass, zz = vassiliev_skeleton(lat), zz_skeleton(lat)
    models = {
        "vassiliev": {"f_vector": _fvec(vass), "euler": euler_characteristic(vass)},
        "zz": {"f_vector": _fvec(zz), "euler": euler_characteristic(zz)},
    }
    lines = [
        f"Vassiliev model Bd(N(L)): f = {tuple(models['vassiliev']['f_vector'])}, χ = {models['vassiliev']['euler']}",
        f"ZZ model Δ(L):            f = {tuple(models['zz']['f_vector'])}, χ = {models['zz']['euler']}",
    ]
    _emit(args, {"models": models}, lines)
    return 0


def cmd_collapse(args) -> int:
    _, lat = _load(args)
    _guard(lat, args)
    vass = vassiliev_skeleton(lat)
    w = build_matching(lat, vass)
    acyclic = verify_acyclic(vass, w)
    iota_ok = verify_iota_monotone(lat, w)
    identity = verify_identity_condition(lat, w)
    try:
        crit = critical_subcomplex(vass, w)
        steps = collapse_sequence(vass, w) if acyclic else []
    except (StuckCollapse, NotAComplex) as exc:
        raise CommandFailed(EXIT_INTERNAL, str(exc)) from exc
    iso = critical_matches_order_complex(lat, crit)
    final = len(vass) - 2 * len(steps)
    ok = acyclic and iota_ok and identity.passed and iso and final == len(crit)
    payload = {
        "collapse": {
            "pairs": len(w),
            "initial": len(vass),
            "final": final,
            "acyclic": acyclic,
            "iota_certificate": iota_ok,
            "identity": {"passed": identity.n_passed, "total": len(identity), "nontrivial": identity.n_checked},
            "critical_is_order_complex": iso,
        }
    }
    lines = [
        f"{len(steps)} collapses: {len(vass)} → {final} simplices; "
        f"acyclic: {'yes' if acyclic and iota_ok else 'no'}; "
        f"identity conditions: {identity.n_passed}/{len(identity)}"
    ]
    if args.trace:
        trace = trace_lines(steps, lat.name)
        payload["collapse"]["trace"] = trace
        lines += trace
    _emit(args, payload, lines)
    if not ok:
        raise CommandFailed(EXIT_INTERNAL, "collapse verification failed")
    return 0


def cmd_betti(args) -> int:
    arr, lat = _load(args)
    n = arr.ambient_dim
    lower = lower_interval_homologies(lat)
    coh = complement_cohomology(lat, n, lower)
    hom = compactified_union_homology(lat, lower)
    verdict = duality_verdict(lat, n)
    payload = {
        "betti": {
            "complement": profile_to_json(coh),
            "compactified": profile_to_json(hom),
            "duality": verdict,
        }
    }
    lines = ["complement M(A), reduced cohomology:"]
    lines += [f"  H~^{d}(M) rank {f}" + (f" torsion {list(t)}" if t else "") for d, f, t in coh.groups]
    lines.append("compactified union Û(A), reduced homology:")
    lines += [f"  H~_{d}(Û) rank {f}" + (f" torsion {list(t)}" if t else "") for d, f, t in hom.groups]
    lines.append(f"duality: {verdict}")
    _emit(args, payload, lines)
    return 0


def cmd_verify(args) -> int:
    if args.random is not None:
        seed, count = args.random
        arrangements = list(random_arrangements(seed, count))
    elif args.file is not None:
        arrangements = [load_arrangement(args.file)]
        seed = 0
    else:
        raise CommandFailed(EXIT_PARSE, "verify needs a FILE or --random SEED COUNT")
    reports = []
    all_ok = True
    lines = []
    for i, arr in enumerate(arrangements):
        _guard(intersection_semilattice(arr), args)
        results = run_suite(arr, seed=seed + i, max_simplices=args.max_simplices)
        ok = all(r.ok for r in results)
        all_ok &= ok
        reports.append({"index": i, "ok": ok, "checks": [r.__dict__ for r in results]})
        lines.append(f"arrangement {i} (n={arr.ambient_dim}, k={len(arr)}): {'pass' if ok else 'FAIL'}")
        lines += [f"  {'pass' if r.ok else 'FAIL'}  {r.name}: {r.detail}" for r in results]
    lines.append(f"{sum(r['ok'] for r in reports)}/{len(reports)} arrangements passed all invariants")
    _emit(args, {"verify": reports, "passed": all_ok}, lines)
    return 0 if all_ok else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--max-simplices",
        type=int,
        default=DEFAULT_MAX_SIMPLICES,
        metavar="N",
        help="refuse arrangements whose Bd(N(L)) exceeds N simplices",
    )
    parser = argparse.ArgumentParser(prog="arrtopo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", parents=[common], help="intersection semilattice")
    p.add_argument("file")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("models", parents=[common], help="face counts of both models")
    p.add_argument("file")
    p.set_defaults(func=cmd_models)

    p = sub.add_parser("collapse", parents=[common], help="collapse Bd(N(L)) onto Δ(L)")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="print every elementary collapse")
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("betti", parents=[common], help="complement and union homology")
    p.add_argument("file")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", parents=[common], help="run every invariant suite")
    p.add_argument("file", nargs="?")
    p.add_argument("--random", nargs=2, type=int, metavar=("SEED", "COUNT"))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except CommandFailed as exc:
        if str(exc):
            print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
