"""Select the collection kernel at import time.

The compiled ``_ckernel`` is preferred; ``PGCAP_KERNEL=python`` forces the
pure-Python fallback (useful for debugging and for the benchmark).
"""

from __future__ import annotations

import os

from ._collect import Collector as PyCollector

try:
    from ._ckernel import Collector as CCollector
except ImportError:  # extension not built
    CCollector = None

if os.environ.get("PGCAP_KERNEL", "").lower() == "python" or CCollector is None:
    Collector = PyCollector
    KERNEL = "python"
else:
    Collector = CCollector
    KERNEL = "compiled"

__all__ = ["Collector", "PyCollector", "CCollector", "KERNEL"]
