"""Exact and simulated statistics of psi(A) = log lcm(A) for subsets of {1..n}."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
