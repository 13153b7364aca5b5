"""Exact algebraic models of mapping class groups of #_r S^p x S^p (p = 3, 7)."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
