"""Command-line interface and representation documents."""

from __future__ import annotations

from .docio import dumps, load, loads

__all__ = ["dumps", "load", "loads"]
