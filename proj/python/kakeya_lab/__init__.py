"""Exact computations for progression covers, projections and entropies.

Thin re-export of the compiled _kakeya module.
"""

from _kakeya import *  # noqa: F401,F403
from _kakeya import __version__  # noqa: F401
