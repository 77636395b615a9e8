"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; set
``PATHDRAW_KERNELS=pure`` (or ``native``) to force a backend. Both backends
are algorithmically identical, so the choice only affects speed.
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _native  # type: ignore[attr-defined]
except ImportError:
    _native = None

_choice = os.environ.get("PATHDRAW_KERNELS", "auto")
if _choice == "pure":
    _active = pure
elif _choice == "native":
    if _native is None:
        raise ImportError(
            "PATHDRAW_KERNELS=native but the compiled extension is not built; "
            "reinstall with a C compiler or unset the variable"
        )
    _active = _native
elif _choice == "auto":
    _active = _native if _native is not None else pure
else:
    raise ValueError(f"PATHDRAW_KERNELS must be auto, pure, or native, not {_choice!r}")

hopcroft_karp = _active.hopcroft_karp
compact_levels = _active.compact_levels
count_segment_crossings = _active.count_segment_crossings


def backend() -> str:
    """Name of the active kernel backend ("pure" or "native")."""
    return _active.BACKEND


def available_backends():
    """The importable kernel modules, for benchmarks and parity tests."""
    out = {"pure": pure}
    if _native is not None:
        out["native"] = _native
    return out
