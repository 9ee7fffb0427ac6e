"""Split-search kernel selection.

The compiled Cython kernel is preferred when built; the pure-numpy
fallback implements identical semantics (same splits, bit for bit).
Set ``TRIPGRAV_KERNEL=python`` or ``TRIPGRAV_KERNEL=compiled`` to force a
backend; forcing ``compiled`` raises if the extension is unavailable.
"""

from __future__ import annotations

import os

from . import _split_py

_choice = os.environ.get("TRIPGRAV_KERNEL", "").strip().lower()
if _choice not in ("", "python", "compiled"):
    raise ImportError(f"TRIPGRAV_KERNEL must be 'python' or 'compiled', got {_choice!r}")

if _choice == "python":
    _impl = _split_py
else:
    try:
        from . import _split_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _choice == "compiled":
            raise
        _impl = _split_py

BACKEND: str = _impl.BACKEND
best_split = _impl.best_split

__all__ = ["BACKEND", "best_split"]
