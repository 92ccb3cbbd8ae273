"""Gabriel-Roiter measures of quiver representations over prime fields."""

from __future__ import annotations

from .errors import GRError
from .ffla import FpMatrix, Subspace
from .quiverrep import Morphism, Quiver, Representation

__all__ = ["FpMatrix", "GRError", "Morphism", "Quiver", "Representation", "Subspace"]
__version__ = "0.1.0"
