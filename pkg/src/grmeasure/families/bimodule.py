"""Dimension vectors of preprojectives for bimodules of finite dimensions ``a``, ``b``.

Vectors are written sink first, ``P_1 = (1, 0)`` and ``P_2 = (a, 1)``; each
further term is ``c * d_k - d_{k-1}`` with the multiplier alternating
``b, a, b, ...``.  When the bimodule is a field extension acting on one side
(``b = 1`` or ``a = 1``) the same recursion applies with that dimension set to
one.  Symbols (sympy) are accepted in place of integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from ..errors import InvalidParameterError

CASES = ("general", "left-extension", "right-extension")


def _is_int(x) -> bool:
    return isinstance(x, int) or (isinstance(x, sympy.Integer))


@dataclass(frozen=True)
class BimoduleSpec:
    case: str
    a: object
    b: object

    def __post_init__(self):
        if self.case not in CASES:
            raise InvalidParameterError(f"case must be one of {CASES}")
        if self.case == "left-extension" and self.b != 1:
            raise InvalidParameterError("a left extension has right dimension 1")
        if self.case == "right-extension" and self.a != 1:
            raise InvalidParameterError("a right extension has left dimension 1")
        if _is_int(self.a) and _is_int(self.b):
            if self.a < 1 or self.b < 1:
                raise InvalidParameterError("bimodule dimensions are positive")
            if self.a * self.b < 4:
                raise InvalidParameterError("ab >= 4 is needed for infinitely many preprojectives")

    @classmethod
    def general(cls, a, b) -> "BimoduleSpec":
        return cls("general", a, b)

    @classmethod
    def left_extension(cls, a) -> "BimoduleSpec":
        """``F ⊂ G`` with ``a = [G:F]``."""
        return cls("left-extension", a, 1)

    @classmethod
    def right_extension(cls, b) -> "BimoduleSpec":
        """``G ⊂ F`` with ``b = [F:G]``."""
        return cls("right-extension", 1, b)


def bimodule_preprojective_dims(spec: BimoduleSpec, k: int) -> tuple:
    """Sink-first dimension vector of the ``k``-th preprojective."""
    if k < 1:
        raise InvalidParameterError("preprojectives are indexed from 1")
    prev, cur = (sympy.Integer(1), sympy.Integer(0)), (sympy.sympify(spec.a), sympy.Integer(1))
    if k == 1:
        out = prev
    else:
        for i in range(2, k):
            c = spec.b if i % 2 == 0 else spec.a
            prev, cur = cur, tuple(sympy.expand(c * x - y) for x, y in zip(cur, prev))
        out = cur
    if all(getattr(x, "is_Integer", False) for x in out):
        vals = tuple(int(x) for x in out)
        if k >= 2 and min(vals) <= 0:
            raise InvalidParameterError(f"P_{k} = {vals} leaves the preprojective range")
        return vals
    return out
