"""Kronecker and subspace quivers with explicit indecomposables for the 2-Kronecker quiver.

The 2-Kronecker quiver has source ``a``, sink ``b`` and arrows ``alpha``,
``beta``; dimension vectors are reported sink first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParameterError
from ..ffla import check_prime
from ..grcore.registry import InventoryItem
from ..quiverrep import Quiver, Representation
from .polys import (
    TubeParameter,
    companion_matrix,
    format_poly,
    parse_parameter,
    poly_power,
    tube_parameters,
)


def kronecker_quiver(n: int = 2) -> Quiver:
    """Two vertices ``a`` (source) and ``b`` (sink) joined by ``n`` parallel arrows."""
    if n < 1:
        raise InvalidParameterError("need at least one arrow")
    names = ("alpha", "beta") if n == 2 else tuple(f"alpha{i}" for i in range(1, n + 1))
    return Quiver(("a", "b"), tuple((x, "a", "b") for x in names))


def subspace_quiver(n: int) -> Quiver:
    """Sources ``s1..sn``, one sink ``c``, one arrow ``e_i: s_i -> c`` each."""
    if n < 1:
        raise InvalidParameterError("need at least one subspace")
    srcs = tuple(f"s{i}" for i in range(1, n + 1))
    return Quiver(srcs + ("c",), tuple((f"e{i}", f"s{i}", "c") for i in range(1, n + 1)))


KRONECKER2 = kronecker_quiver(2)


def is_kronecker2(Q: Quiver) -> bool:
    return Q == KRONECKER2


def _rep(p: int, na: int, nb: int, alpha, beta, Q: Quiver | None = None) -> Representation:
    return Representation(Q or KRONECKER2, p, {"a": na, "b": nb}, {"alpha": alpha, "beta": beta})


def kronecker_preprojective(p: int, k: int, quiver: Quiver | None = None) -> Representation:
    """``P_k``: sink dimension ``k``, source ``k-1``, maps the two shifted identity blocks."""
    check_prime(p)
    if k < 1:
        raise InvalidParameterError("preprojectives are indexed from 1")
    eye = np.eye(k - 1, dtype=np.int64)
    alpha = np.vstack([eye, np.zeros((1, k - 1), dtype=np.int64)])
    beta = np.vstack([np.zeros((1, k - 1), dtype=np.int64), eye])
    return _rep(p, k - 1, k, alpha, beta, quiver)


def kronecker_preinjective(p: int, k: int, quiver: Quiver | None = None) -> Representation:
    """``I_k``: source dimension ``k``, sink ``k-1`` (the dual shape of ``P_k``)."""
    check_prime(p)
    if k < 1:
        raise InvalidParameterError("preinjectives are indexed from 1")
    eye = np.eye(k - 1, dtype=np.int64)
    alpha = np.hstack([eye, np.zeros((k - 1, 1), dtype=np.int64)])
    beta = np.hstack([np.zeros((k - 1, 1), dtype=np.int64), eye])
    return _rep(p, k, k - 1, alpha, beta, quiver)


def _as_parameter(parameter, p: int) -> TubeParameter:
    if isinstance(parameter, TubeParameter):
        if parameter.p != p:
            raise InvalidParameterError("tube parameter over another prime")
        return parameter
    if parameter is None:
        return TubeParameter(p, None)
    if isinstance(parameter, str):
        return parse_parameter(parameter, p)
    return parse_parameter_from_coeffs(tuple(parameter), p)


def parse_parameter_from_coeffs(coeffs: tuple[int, ...], p: int) -> TubeParameter:
    return parse_parameter(format_poly(tuple(int(c) % p for c in coeffs)), p)


def kronecker_regular(p: int, parameter, t: int, quiver: Quiver | None = None) -> Representation:
    """``R_f[t]`` in the homogeneous tube of ``f`` (a monic irreducible, or infinity)."""
    check_prime(p)
    if t < 1:
        raise InvalidParameterError("tube modules are indexed from 1")
    par = _as_parameter(parameter, p)
    if par.is_infinite:
        J = np.eye(t, k=-1, dtype=np.int64)  # nilpotent Jordan block
        return _rep(p, t, t, J, np.eye(t, dtype=np.int64), quiver)
    n = par.degree * t
    C = companion_matrix(poly_power(par.coeffs, t, p), p)
    return _rep(p, n, n, np.eye(n, dtype=np.int64), C, quiver)


def regular_label(par: TubeParameter, t: int) -> str:
    return f"R_{{{par}}}[{t}]"


@dataclass(frozen=True)
class TubeHandle:
    """A homogeneous tube of the 2-Kronecker quiver over GF(p)."""

    p: int
    parameter: TubeParameter

    @classmethod
    def of(cls, p: int, parameter) -> "TubeHandle":
        return cls(p, _as_parameter(parameter, p))

    @property
    def quiver(self) -> Quiver:
        return KRONECKER2

    @property
    def boundary_length(self) -> int:
        return 2 * self.parameter.degree

    def module(self, t: int) -> Representation:
        return kronecker_regular(self.p, self.parameter, t)

    def label(self, t: int) -> str:
        return regular_label(self.parameter, t)


def kronecker_indec_inventory(p: int, max_length: int, quiver: Quiver | None = None) -> list[InventoryItem]:
    """One representative for every indecomposable of length ``<= max_length``.

    Preprojectives ``P_k`` and preinjectives ``I_k`` have length ``2k-1``;
    the regular ``R_f[t]`` has length ``2 deg(f) t``.
    """
    check_prime(p)
    out = []
    k = 1
    while 2 * k - 1 <= max_length:
        out.append(InventoryItem(kronecker_preprojective(p, k, quiver), f"P_{k}", "preprojective"))
        out.append(InventoryItem(kronecker_preinjective(p, k, quiver), f"I_{k}", "preinjective"))
        k += 1
    for par in tube_parameters(p, max_length // 2):
        t = 1
        while 2 * par.degree * t <= max_length:
            out.append(InventoryItem(kronecker_regular(p, par, t, quiver), regular_label(par, t), "regular"))
            t += 1
    out.sort(key=lambda it: (it.rep.length, it.label))
    return out
