"""Rasterizer backend selection.

The compiled extension is preferred when importable; the NumPy fallback
is bit-identical, only slower.  ``GAZESEQ_RASTER=python`` forces the
fallback, ``GAZESEQ_RASTER=cython`` fails loudly if the extension is
missing.
"""

from __future__ import annotations

import os

from . import _raster_py

_FORCED = os.environ.get("GAZESEQ_RASTER", "").strip().lower()

if _FORCED == "python":
    rasterize = _raster_py.rasterize
    _BACKEND = "python"
else:
    try:
        from . import _raster

        rasterize = _raster.rasterize
        _BACKEND = "cython"
    except ImportError:
        if _FORCED == "cython":
            raise
        rasterize = _raster_py.rasterize
        _BACKEND = "python"


def active_backend() -> str:
    """Name of the rasterizer backend in use: 'cython' or 'python'."""
    return _BACKEND
