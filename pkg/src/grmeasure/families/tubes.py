"""Tube modules, filtrations with a fixed factor, and the measure of Prüfer modules."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..config import DEFAULT_BUDGET, DEFAULT_CAP
from ..errors import BudgetExceededError, InconsistentInputError, InvalidParameterError
from ..ffla import check_prime, preimage_of
from ..grcore.engine import monomorphism_images
from ..grcore.measure import GRMeasure, measure_to_rational
from ..quiverrep import Representation, is_indecomposable, quotient
from ..sublattice import Subrep, subquotient
from .kronecker import subspace_quiver


def four_subspace_tube_module(p: int) -> Representation:
    """Four pairwise distinct lines in ``GF(p)^2``: slopes 0, 1, 2 and infinity."""
    check_prime(p)
    if p < 3:
        raise InvalidParameterError("GF(2)^2 has only three lines; four distinct ones need p >= 3")
    Q = subspace_quiver(4)
    lines = [(1, 0), (1, 1), (1, 2), (0, 1)]
    dims = {f"s{i}": 1 for i in range(1, 5)}
    dims["c"] = 2
    maps = {f"e{i}": np.array(v, dtype=np.int64).reshape(2, 1) for i, v in enumerate(lines, start=1)}
    return Representation(Q, p, dims, maps)


def _preimage_subrep(Y: Representation, proj, V: Subrep) -> Subrep:
    parts = {v: preimage_of(V.parts[v], proj.blocks[v]) for v in Y.quiver.vertices}
    return Subrep(Y, parts, check=False)


def m_filtration(
    Y: Representation,
    M: Representation,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
) -> list[Subrep] | None:
    """A chain ``0 ⊂ Y_1 ⊂ ... ⊂ Y_m = Y`` with every factor ``Y_i / Y_{i-1} ≅ M``.

    Depth-first over the images of monomorphisms ``M -> Y / Y_{i-1}``; returns
    ``[Y_1, ..., Y_m]`` or None.  None only means that no chain was found
    within ``budget`` search nodes.
    """
    if M.is_zero() or Y.length % M.length:
        raise InvalidParameterError("the factor must be nonzero with length dividing |Y|")
    m = Y.length // M.length
    nodes = 0

    def rec(C: Subrep, depth: int) -> list[Subrep] | None:
        nonlocal nodes
        if depth == m:
            return [] if not C.is_proper() else None
        Qt, proj = quotient(Y, C)
        for V in monomorphism_images(M, Qt, cap=cap):
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(f"filtration search visited more than {budget} nodes")
            nxt = _preimage_subrep(Y, proj, V)
            tail = rec(nxt, depth + 1)
            if tail is not None:
                return [nxt] + tail
        return None

    try:
        return rec(Subrep.zero(Y), 0)
    except BudgetExceededError:
        return None


def unique_m_filtration_certificate(chain: list[Subrep], cap: int = DEFAULT_CAP) -> bool:
    """Every double step ``Y_i / Y_{i-2}`` (with ``Y_0 = 0``) is indecomposable."""
    if not chain:
        return False
    full = [Subrep.zero(chain[0].parent)] + list(chain)
    for i in range(2, len(full)):
        if not is_indecomposable(subquotient(full[i], full[i - 2]), cap=cap):
            return False
    return True


def pruefer_measure(mu1: GRMeasure, s: int) -> Fraction:
    """Measure of the union of a tube with boundary ``M[1]`` of length ``s``.

    The filtration of ``M[t]`` runs through ``M[1]`` and then adds ``s`` at
    each step, so the limit is ``γ + sum_{m>=1} 2^{-ms} = γ + 1/(2^s - 1)``
    where ``γ`` is the measure of ``M[1]`` with its top element removed.
    """
    if s < 1 or mu1.top != s:
        raise InconsistentInputError(f"the largest element of {mu1} must equal the boundary length {s}")
    gamma = measure_to_rational(mu1) - Fraction(1, 2**s)
    return gamma + Fraction(1, 2**s - 1)
