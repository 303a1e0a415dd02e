"""Pure numpy fallback kernels, contract-identical to the compiled core."""

from __future__ import annotations

import math

import numpy as np

BACKEND = "pure-python"


def edge_triangle_arcs(indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """Per-arc triangle multiplicities for a sorted undirected CSR graph.

    Returns t with t[k] = number of common neighbors of u and indices[k],
    where u is the row owning arc k. Each undirected edge is intersected
    once and mirrored to its reverse arc.
    """
    n = len(indptr) - 1
    t = np.zeros(len(indices), dtype=np.int64)
    for u in range(n):
        lo, hi = int(indptr[u]), int(indptr[u + 1])
        au = indices[lo:hi]
        for k in range(lo, hi):
            v = int(indices[k])
            if v <= u:
                continue
            av = indices[int(indptr[v]) : int(indptr[v + 1])]
            c = np.intersect1d(au, av, assume_unique=True).size
            t[k] = c
            t[int(indptr[v]) + int(np.searchsorted(av, u))] = c
    return t


def _off_norm(a: np.ndarray) -> float:
    total = float((a * a).sum())
    diag = float((np.diagonal(a) ** 2).sum())
    return math.sqrt(max(total - diag, 0.0))


def jacobi_sweeps(a: np.ndarray, v: np.ndarray, tol: float, max_sweeps: int) -> tuple[int, float]:
    """Cyclic Jacobi rotations on symmetric a (in place), accumulating into v.

    Sweeps row-cyclically over pivots (p, q); pivots below off/(n*n) are
    skipped, which still forces the off-diagonal norm down by a factor n per
    sweep. Returns (sweeps_used, final_off_norm); stops when off <= tol.
    """
    n = a.shape[0]
    if n < 2:
        return 0, 0.0
    off = _off_norm(a)
    sweeps = 0
    while off > tol and sweeps < max_sweeps:
        thresh = off / (n * n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                elif abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        off = _off_norm(a)
        sweeps += 1
    return sweeps, off
