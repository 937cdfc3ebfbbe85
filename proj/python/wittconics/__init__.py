"""Exact Witt-equivalence invariants of function fields of conics over Q.

Thin Python surface over the C++ core: Hilbert symbols, quaternion
ramification sets, conic point search and parametrization, quadratic
hyperfield tables, Witt-inequivalence certificates, and class-group
2-rank invariants of quadratic fields.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
