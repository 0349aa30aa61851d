"""Axisymmetric object reconstruction from a single cone-beam projection."""

from ._axitomo import *  # noqa: F401,F403
from ._axitomo import AxitomoError, SolverParams  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
