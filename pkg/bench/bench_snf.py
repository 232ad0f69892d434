"""Time the compiled and pure-Python elimination kernels on boundary matrices.

    python bench/bench_snf.py [--repeat N]

Matrices come from sphere boundaries, joins and the Vassiliev models of a
few arrangements, so the shapes match what the homology engine sees.
"""

import argparse
import timeit
from pathlib import Path

from arrtopo import _kernels
from arrtopo.arrangement import intersection_semilattice, vassiliev_skeleton
from arrtopo.complexes import join_complex, sphere_complex
from arrtopo.generate import random_arrangements
from arrtopo.homology import boundary_matrix
from arrtopo.io import load_arrangement

DATA = Path(__file__).resolve().parent.parent / "data"


def workloads():
    yield "Bd(Δ^4)", sphere_complex(3)
    yield "Bd(Δ^5)", sphere_complex(4)
    yield "S^1 * S^2", join_complex(sphere_complex(1), sphere_complex(2))
    for name in ("three_concurrent_lines", "four_planes_q3", "generic_lines_4"):
        lat = intersection_semilattice(load_arrangement(DATA / f"{name}.json"))
        yield name, vassiliev_skeleton(lat)
    biggest = max(
        (vassiliev_skeleton(intersection_semilattice(a)) for a in random_arrangements(42, 100)), key=len
    )
    yield "largest of --random 42 100", biggest


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["python"] + (["cython"] if _kernels.BACKEND == "cython" else [])
    print(f"{'complex':<28}{'simplices':>10}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, k in workloads():
        mats = [boundary_matrix(k, d) for d in range(k.dim + 1)]
        times = {}
        for b in backends:
            ref = [_kernels.smith_pivots(m.copy(), backend="python") for m in mats]
            assert [_kernels.smith_pivots(m.copy(), backend=b) for m in mats] == ref
            times[b] = min(
                timeit.repeat(lambda: [_kernels.smith_pivots(m, backend=b) for m in mats], number=1, repeat=args.repeat)
            )
        speed = f"{times['python'] / times['cython']:>9.1f}x" if "cython" in times else ""
        row = "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        print(f"{name:<28}{len(k):>10}{row}{speed}")


if __name__ == "__main__":
    main()
