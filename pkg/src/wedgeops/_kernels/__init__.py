"""Hot kernels with a compiled core and a pure-numpy fallback.

The compiled extension is preferred when importable; set WEDGEOPS_NO_EXT=1
to force the fallback (used by the parity tests and the benchmark).
"""

import os

if os.environ.get("WEDGEOPS_NO_EXT"):
    from . import _pykern as _impl
else:
    try:
        from . import _ckern as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykern as _impl

edge_triangle_arcs = _impl.edge_triangle_arcs
jacobi_sweeps = _impl.jacobi_sweeps
BACKEND = _impl.BACKEND

__all__ = ["edge_triangle_arcs", "jacobi_sweeps", "BACKEND"]
