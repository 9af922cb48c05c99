"""Kernel selection: compiled extension if built, numpy fallback otherwise.

Set POLYNORM_FORCE_PYTHON=1 to force the fallback lane (used by the
benchmark and by tests that compare the two lanes).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("POLYNORM_FORCE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION: str = _impl.IMPLEMENTATION
enumerate_box = _impl.enumerate_box
unreachable_targets = _impl.unreachable_targets
