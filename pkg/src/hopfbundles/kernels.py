"""Backend selection for the relation-search kernel.

The compiled extension is used when it was built; setting the environment
variable ``HOPFBUNDLES_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
from __future__ import annotations

import os

from . import _relation_py

try:
    from . import _relation as _relation_c
except ImportError:  # extension not built
    _relation_c = None

BACKENDS = {"python": _relation_py.find_relations}
if _relation_c is not None:
    BACKENDS["cython"] = _relation_c.find_relations

if os.environ.get("HOPFBUNDLES_PURE_PYTHON") or _relation_c is None:
    BACKEND = "python"
else:
    BACKEND = "cython"

find_relations = BACKENDS[BACKEND]
