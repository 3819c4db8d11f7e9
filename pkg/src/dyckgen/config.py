"""Desk-scale guards for the enumerative code paths.

The closed forms are cheap at any size; the explicit enumerations are
not.  These limits keep a casual invocation from accidentally launching
a huge exact computation.  Setting the environment variable
DYCKGEN_GUARD_OVERRIDE (to any non-empty value) lifts all of them.
"""

from __future__ import annotations

import os

# Largest ceiling height accepted by the dense determinant elimination.
DIRECT_DET_K_MAX = 32

# Largest k*N product accepted by the enumerative partition functions.
ENUM_PARTITION_MAX = 36

# Largest path length accepted by the brute-force path counter.
ORACLE_LEN_MAX = 24


def guards_lifted() -> bool:
    return bool(os.environ.get("DYCKGEN_GUARD_OVERRIDE"))
