"""Matrix serialization: dense CSV (one row per line) and coordinate triples."""

from __future__ import annotations

import io

import numpy as np


def _fmt(x) -> str:
    # Integers print without a decimal point so integer matrices stay exact.
    f = float(x)
    return str(int(f)) if f.is_integer() else repr(f)


def dense_csv(m: np.ndarray) -> str:
    """Rows of comma-separated values, no header."""
    out = io.StringIO()
    for row in np.atleast_2d(m):
        out.write(",".join(_fmt(x) for x in row))
        out.write("\n")
    return out.getvalue()


def coordinate_csv(m: np.ndarray) -> str:
    """Nonzero entries as "i,j,value" lines with a header, row-major order."""
    m = np.atleast_2d(m)
    out = io.StringIO()
    out.write("i,j,value\n")
    for i, j in np.argwhere(m != 0):
        out.write(f"{i},{j},{_fmt(m[i, j])}\n")
    return out.getvalue()


def parse_dense_csv(text: str) -> np.ndarray:
    """Inverse of dense_csv; empty input gives a 0x0 matrix."""
    rows = [line for line in text.splitlines() if line.strip()]
    if not rows:
        return np.zeros((0, 0))
    data = [[float(tok) for tok in line.split(",")] for line in rows]
    arr = np.array(data)
    if np.all(arr == np.round(arr)):
        return arr.astype(np.int64)
    return arr
