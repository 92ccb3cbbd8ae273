"""Cartan and Coxeter matrices of acyclic quivers, exact integer arithmetic."""

from __future__ import annotations

import sympy

from ..errors import InvalidParameterError
from ..quiverrep import Quiver, paths_from


def cartan_matrix(Q: Quiver) -> sympy.Matrix:
    """Column ``v`` is the dimension vector of ``P(v)`` (paths starting at ``v``)."""
    n = len(Q.vertices)
    C = sympy.zeros(n, n)
    for j, v in enumerate(Q.vertices):
        paths = paths_from(Q, v)
        for i, w in enumerate(Q.vertices):
            C[i, j] = len(paths[w])
    return C


def coxeter_matrix(Q: Quiver) -> sympy.Matrix:
    """``Φ = -C^T C^{-1}``; sends ``dim P(v)`` to ``-dim I(v)`` and ``dim X`` to ``dim τX``."""
    C = cartan_matrix(Q)
    return -C.T * C.inv()


def inverse_coxeter_matrix(Q: Quiver) -> sympy.Matrix:
    C = cartan_matrix(Q)
    return -C * C.T.inv()


def tau_inverse_dim(Q: Quiver, d) -> tuple[int, ...]:
    """``Φ^{-1} d``; the dimension vector of ``τ^{-1} X`` when ``X`` is indecomposable non-injective."""
    d = tuple(int(x) for x in d)
    if len(d) != len(Q.vertices):
        raise InvalidParameterError("dimension vector has the wrong number of entries")
    out = inverse_coxeter_matrix(Q) * sympy.Matrix(d)
    return tuple(int(x) for x in out)


def preprojective_dim_sequence(Q: Quiver, v: str, t_max: int) -> list[tuple[int, ...]]:
    """Dimension vectors of ``τ^{-t} P(v)`` for ``t = 0..t_max`` (vertex order)."""
    if v not in Q.vertices:
        raise InvalidParameterError(f"unknown vertex {v}")
    C = cartan_matrix(Q)
    j = Q.vertices.index(v)
    d = tuple(int(x) for x in C[:, j])
    out = [d]
    Phi_inv = inverse_coxeter_matrix(Q)
    for _ in range(t_max):
        d = tuple(int(x) for x in Phi_inv * sympy.Matrix(d))
        if min(d) < 0:
            raise InvalidParameterError("left the preprojective component (negative entries)")
        out.append(d)
    return out
