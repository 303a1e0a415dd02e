"""Benchmark the compiled kernels against the pure-numpy fallback.

Times the two hot paths behind the operator library — per-arc triangle
counting and the cyclic Jacobi eigensolver — on deterministic inputs, and
prints one table row per case with the speedup of the compiled core.

Run:  python3 benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from wedgeops import generate
from wedgeops._kernels import _pykern

try:
    from wedgeops._kernels import _ckern
except ImportError:
    _ckern = None

TRIANGLE_CASES = [(200, 0.10, 1), (400, 0.05, 2), (800, 0.02, 3)]
JACOBI_SIZES = [60, 120, 200]


def _best(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_triangles(repeats: int) -> list[tuple[str, float, float | None]]:
    rows = []
    for n, p, seed in TRIANGLE_CASES:
        g = generate("erdos_renyi", (n, p), seed=seed)
        indptr, indices = g.csr
        t_py = _best(lambda: _pykern.edge_triangle_arcs(indptr, indices), repeats)
        t_c = None
        if _ckern is not None:
            t_c = _best(lambda: _ckern.edge_triangle_arcs(indptr, indices), repeats)
            if not np.array_equal(
                _pykern.edge_triangle_arcs(indptr, indices),
                _ckern.edge_triangle_arcs(indptr, indices),
            ):
                raise AssertionError(f"backend mismatch on triangles n={n}")
        rows.append((f"triangles n={n} m={g.m}", t_py, t_c))
    return rows


def bench_jacobi(repeats: int) -> list[tuple[str, float, float | None]]:
    rows = []
    for n in JACOBI_SIZES:
        rng = np.random.default_rng(n)
        base = rng.standard_normal((n, n))
        sym = (base + base.T) / 2.0
        tol = 1e-10 * np.linalg.norm(sym)

        def run(impl):
            a = sym.copy()
            v = np.eye(n)
            impl.jacobi_sweeps(a, v, tol, 100)
            return a

        t_py = _best(lambda: run(_pykern), repeats)
        t_c = None
        if _ckern is not None:
            t_c = _best(lambda: run(_ckern), repeats)
            d_py = np.sort(np.diagonal(run(_pykern)))
            d_c = np.sort(np.diagonal(run(_ckern)))
            if not np.allclose(d_py, d_c, atol=1e-8 * max(1.0, abs(d_py).max())):
                raise AssertionError(f"backend mismatch on jacobi n={n}")
        rows.append((f"jacobi    n={n}", t_py, t_c))
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3, help="timing repeats, best-of (default 3)")
    args = ap.parse_args()

    if _ckern is None:
        print("compiled extension not importable; timing the fallback only\n")

    header = f"{'case':<28} {'pure-python':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, t_py, t_c in bench_triangles(args.repeats) + bench_jacobi(args.repeats):
        if t_c is None:
            print(f"{name:<28} {t_py:>11.4f}s {'-':>12} {'-':>9}")
        else:
            print(f"{name:<28} {t_py:>11.4f}s {t_c:>11.4f}s {t_py / t_c:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
