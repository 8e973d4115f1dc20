"""Error types shared across the package.

Input problems (bad types, malformed files, invalid coordinates) raise
plain ValueError subclasses; blown resource guards raise
ResourceGuardError subclasses so callers can tell "you asked for
something wrong" apart from "you asked for something too big".
"""
from __future__ import annotations


class ResourceGuardError(RuntimeError):
    """A configurable size limit was exceeded; raise rather than grind."""


class RankBudgetError(ResourceGuardError):
    """Requested rank or enumeration cap is over the configured budget."""


class OrderLimitError(ResourceGuardError):
    """A finite group is larger than the configured order limit."""
