"""Kernel backend selection.

The hot per-class-pair kernel exists twice: a compiled Cython extension
(``_core``) and a pure-NumPy fallback (``_numpy``).  The compiled one is
preferred when it imported cleanly; ``NWFE_BACKEND=python`` or
``NWFE_BACKEND=compiled`` in the environment forces a choice (the latter
raises if the extension is missing).  ``set_backend`` switches at runtime,
which the backend benchmark and tests use to compare both.
"""

import os

from . import _numpy

try:
    from . import _core
except ImportError:
    _core = None

pair_stats = None
BACKEND = None


def available_backends():
    names = ["python"]
    if _core is not None:
        names.append("compiled")
    return names


def set_backend(name: str):
    global pair_stats, BACKEND
    if name == "python":
        mod = _numpy
    elif name == "compiled":
        if _core is None:
            raise ImportError("compiled kernel is not available; rebuild the extension")
        mod = _core
    else:
        raise ValueError(f"unknown backend {name!r} (expected 'python' or 'compiled')")
    pair_stats = mod.pair_stats
    BACKEND = name


_env = os.environ.get("NWFE_BACKEND", "").strip().lower()
if _env in ("python", "numpy"):
    set_backend("python")
elif _env == "compiled":
    set_backend("compiled")
else:
    set_backend("compiled" if _core is not None else "python")
