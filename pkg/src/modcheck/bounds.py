"""Enumeration bounds.

The defaults keep a full corpus verification well under a few minutes.
They are module-level so callers (and tests) can tighten or relax them.
"""

MAX_RING_ORDER = 4096
MAX_MODULE_ORDER = 4096
MAX_LATTICE_ORDER = 64
MAX_ENDO_FAMILY = 65536
