"""Backend selection for the coloring search kernels.

The compiled Cython lane is used when it imported successfully, the instance
fits machine words (fewer than 63 items), and the environment variable
SIDONKIT_PURE_PYTHON is unset; otherwise the pure-Python lane runs.  Both
lanes implement identical traversals and return identical tuples, including
the examined/pruned statistics, so certificates do not depend on the lane.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels_cy
except ImportError:
    _kernels_cy = None

_FORCE_PURE = bool(os.environ.get("SIDONKIT_PURE_PYTHON"))
_MASK_LIMIT = 62  # compiled lane packs masks into 64-bit words


def backend_name() -> str:
    if _kernels_cy is not None and not _FORCE_PURE:
        return _kernels_cy.BACKEND_NAME
    return _kernels_py.BACKEND_NAME


def available_backends() -> tuple[str, ...]:
    names = [_kernels_py.BACKEND_NAME]
    if _kernels_cy is not None:
        names.append(_kernels_cy.BACKEND_NAME)
    return tuple(names)


def _lane(n: int, backend: str | None):
    if backend == "python":
        return _kernels_py
    if backend == "compiled":
        if _kernels_cy is None:
            raise RuntimeError("compiled kernels are not available in this build")
        if n > _MASK_LIMIT:
            raise ValueError(
                f"compiled lane packs masks into 64-bit words; {n} items exceed {_MASK_LIMIT}"
            )
        return _kernels_cy
    if backend is not None:
        raise ValueError(f"unknown backend {backend!r}")
    if _kernels_cy is not None and not _FORCE_PURE and n <= _MASK_LIMIT:
        return _kernels_cy
    return _kernels_py


def set_search(n, r, groups, witness_unions, ell, prune_enabled, fixed_colors,
               backend: str | None = None):
    lane = _lane(n, backend)
    return lane.set_search(n, r, groups, witness_unions, ell, prune_enabled, fixed_colors)


def edge_search(n, r, copy_masks, fixed_colors, backend: str | None = None):
    lane = _lane(n, backend)
    return lane.edge_search(n, r, copy_masks, fixed_colors)
