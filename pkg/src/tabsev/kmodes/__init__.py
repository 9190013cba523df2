"""K-modes clustering of categorical code matrices.

The inner loops (row-to-mode matching distances, per-cluster category
counting) run through a compiled Cython kernel when the extension built;
otherwise a vectorised NumPy fallback is selected at import time. See
``tabsev.kmodes.backend`` and ``benchmarks/bench_kmodes.py``.
"""

from tabsev.kmodes.backend import active_backend, available_backends
from tabsev.kmodes.core import (
    ClusterAssignment,
    CostCurve,
    ModeSet,
    adjusted_rand_index,
    apply_severity,
    assign,
    dissimilarity,
    elbow_curve,
    fit,
    severity_order,
    update_modes,
)

__all__ = [
    "ModeSet",
    "ClusterAssignment",
    "CostCurve",
    "dissimilarity",
    "assign",
    "update_modes",
    "fit",
    "elbow_curve",
    "severity_order",
    "apply_severity",
    "adjusted_rand_index",
    "active_backend",
    "available_backends",
]
