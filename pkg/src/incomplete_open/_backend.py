"""Pick the sweep kernel at import: compiled when built, pure Python otherwise.

Set ``INCOMPLETE_OPEN_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernel

try:
    from . import _ckernel
except ImportError:
    _ckernel = None

if os.environ.get("INCOMPLETE_OPEN_PURE") or _ckernel is None:
    default = _pykernel
else:
    default = _ckernel

BACKEND = default.NAME


def available() -> list[str]:
    return [_pykernel.NAME] + ([_ckernel.NAME] if _ckernel is not None else [])


def get(name: str | None = None) -> ModuleType:
    if name is None:
        return default
    if name == _pykernel.NAME:
        return _pykernel
    if name == "compiled":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not built; run `pip install -e . --no-build-isolation`")
        return _ckernel
    raise ValueError(f"unknown backend {name!r}")
