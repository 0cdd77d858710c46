"""Kernel selector: the compiled enumeration core when built, else the
pure-Python twin.  Set SGCLASS_PURE=1 to force the fallback."""

import os

if os.environ.get("SGCLASS_PURE"):
    from . import _enum_py as impl
    BACKEND = "python"
else:
    try:
        from . import _enum_cy as impl  # built by setup.py when Cython is present
        BACKEND = "cython"
    except ImportError:
        from . import _enum_py as impl
        BACKEND = "python"

commutative_tables = impl.commutative_tables
is_canonical = impl.is_canonical
canonical_form = impl.canonical_form
