"""Census hot loops: compiled extension when available, pure Python otherwise.

Set ``LEIBNIZ_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _census_py as python_backend

compiled_backend = None
if not os.environ.get("LEIBNIZ_PURE_PYTHON"):
    try:
        from . import _census as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend or python_backend
BACKEND = "cython" if compiled_backend is not None and _active is compiled_backend else "python"

filter_range = _active.filter_range
check_tables = _active.check_tables


def decode(p: int, n: int, index: int) -> tuple:
    """Flat structure-constant tuple of the table with the given index."""
    N = n * n * n
    c = [0] * N
    for d in range(N - 1, -1, -1):
        index, c[d] = divmod(index, p)
    return tuple(c)


def encode(p: int, n: int, flat) -> int:
    idx = 0
    for x in flat:
        idx = idx * p + int(x) % p
    return idx
