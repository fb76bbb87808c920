"""Backend selection for the BFS kernels.

The compiled extension is preferred when available; setting the environment
variable ``MVGRAPH_PURE_PYTHON=1`` forces the pure-Python fallback (used by
the test matrix and the backend benchmark).
"""

import os

from ._pykernels import UNREACHABLE  # noqa: F401  (canonical sentinel)

if os.environ.get("MVGRAPH_PURE_PYTHON"):
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

all_pairs_bfs = _impl.all_pairs_bfs
violation_pairs = _impl.violation_pairs
