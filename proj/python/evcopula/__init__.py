"""Extreme-value copulas from piecewise-linear Pickands dependence functions."""

from ._core import *  # noqa: F401,F403
from ._core import EvcError, Pickands

__all__ = [name for name in dir() if not name.startswith("_")]
