"""Finite lattices with involution: congruence computation, classification,
exhaustive census up to isomorphism, and verification of the extremal bounds.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ilat._core import *  # noqa: F401,F403
from ilat._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = (__doc__ or "") + "\n\n" + (_core_doc or "")
