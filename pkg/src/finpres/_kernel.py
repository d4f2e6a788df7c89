"""Backend selection for the constraint-search core.

The compiled ``_homsearch`` extension is used when it imports; otherwise the
pure-Python module with the same contract takes over.  Setting the
environment variable ``FINPRES_PURE=1`` forces the fallback.
"""

import os

from . import _homsearch_py

try:
    if os.environ.get("FINPRES_PURE") == "1":
        raise ImportError("pure backend requested")
    from . import _homsearch as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

_KEY_LIMIT = 1 << 62


def search(n, m, domains, constraints, order, injective=False, limit=0, backend=None):
    """Run the backtracking search; see ``_homsearch_py`` for the format."""
    use = backend or BACKEND
    maxar = max((len(c[0]) for c in constraints), default=0)
    if use == "compiled" and _compiled is not None and m ** maxar < _KEY_LIMIT:
        return _compiled.search(n, m, domains, constraints, order, injective, limit)
    return _homsearch_py.search(n, m, domains, constraints, order, injective, limit)
