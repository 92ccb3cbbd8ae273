"""Subrepresentations: closure, exhaustive enumeration, extraction as representations."""

from __future__ import annotations

from typing import Iterator, Mapping

import numpy as np

from .config import DEFAULT_BUDGET, DEFAULT_CAP
from .errors import BudgetExceededError, DimensionMismatchError, InvalidSubrepError
from .ffla import (
    FpMatrix,
    Subspace,
    enumerate_superspaces,
    image_of,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
)
from .quiverrep import Morphism, Representation, check_closed, is_indecomposable, quotient, radical


class Subrep:
    """A tuple of subspaces, one per vertex, closed under the arrow maps of ``parent``."""

    __slots__ = ("parent", "parts", "_key")

    def __init__(self, parent: Representation, parts: Mapping[str, Subspace], *, check: bool = True):
        self.parent = parent
        self.parts = {v: parts[v] for v in parent.quiver.vertices}
        if check:
            check_closed(parent, self.parts)
        self._key = tuple(self.parts[v].key for v in parent.quiver.vertices)

    @classmethod
    def zero(cls, M: Representation) -> "Subrep":
        return cls(M, {v: Subspace.zero(M.dims[v], M.p) for v in M.quiver.vertices}, check=False)

    @classmethod
    def full(cls, M: Representation) -> "Subrep":
        return cls(M, {v: Subspace.full(M.dims[v], M.p) for v in M.quiver.vertices}, check=False)

    @property
    def length(self) -> int:
        return sum(s.dim for s in self.parts.values())

    @property
    def dims(self) -> dict[str, int]:
        return {v: s.dim for v, s in self.parts.items()}

    @property
    def key(self) -> tuple:
        return self._key

    def sort_key(self) -> tuple:
        """Canonical order: by length, then per-vertex RREF bases in vertex order."""
        return (self.length,) + tuple(self.parts[v].sort_key() for v in self.parent.quiver.vertices)

    def contains(self, other: "Subrep") -> bool:
        return all(subspace_contains(self.parts[v], other.parts[v]) for v in self.parts)

    def is_proper(self) -> bool:
        return self.length < self.parent.length

    def is_zero(self) -> bool:
        return self.length == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subrep):
            return NotImplemented
        return self._key == other._key and self.parent == other.parent

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Subrep(dims={self.dims})"


def _same_parent(U: Subrep, V: Subrep) -> None:
    if U.parent != V.parent:
        raise DimensionMismatchError("subrepresentations of different parents")


def sub_sum(U: Subrep, V: Subrep) -> Subrep:
    _same_parent(U, V)
    return Subrep(U.parent, {v: subspace_sum(U.parts[v], V.parts[v]) for v in U.parts}, check=False)


def sub_intersect(U: Subrep, V: Subrep) -> Subrep:
    _same_parent(U, V)
    return Subrep(U.parent, {v: subspace_intersect(U.parts[v], V.parts[v]) for v in U.parts}, check=False)


def closure(M: Representation, seed: Mapping[str, Subspace]) -> Subrep:
    """Smallest subrepresentation containing ``seed``.

    One pass in topological order suffices: by the time a vertex is visited,
    every arrow into it starts at an already final part.
    """
    parts = {}
    for v in M.quiver.topological_order:
        s = seed.get(v)
        acc = Subspace.zero(M.dims[v], M.p) if s is None else s
        if acc.ambient_dim != M.dims[v] or acc.p != M.p:
            raise DimensionMismatchError(f"seed at {v} lives in the wrong space")
        for a, u, _ in M.quiver.incoming(v):
            acc = subspace_sum(acc, image_of(parts[u], M.maps[a]))
        parts[v] = acc
    return Subrep(M, parts, check=False)


def closure_of_vectors(M: Representation, vectors: Mapping[str, object]) -> Subrep:
    seed = {v: Subspace.from_rows(np.atleast_2d(np.asarray(x, dtype=np.int64)), M.dims[v], M.p) for v, x in vectors.items()}
    return closure(M, seed)


def iter_subreps(M: Representation, budget: int = DEFAULT_BUDGET) -> Iterator[Subrep]:
    """Stream every subrepresentation exactly once (topological-order search).

    At each vertex the part ranges over the superspaces of the images forced
    by the parts already chosen upstream, so no candidate ever violates
    closure.  ``budget`` bounds the number of candidate parts inspected.
    """
    order = M.quiver.topological_order
    inspected = 0

    def rec(i: int, parts: dict[str, Subspace]):
        nonlocal inspected
        if i == len(order):
            yield Subrep(M, parts, check=False)
            return
        v = order[i]
        forced = Subspace.zero(M.dims[v], M.p)
        for a, u, _ in M.quiver.incoming(v):
            forced = subspace_sum(forced, image_of(parts[u], M.maps[a]))
        for W in enumerate_superspaces(forced):
            inspected += 1
            if inspected > budget:
                raise BudgetExceededError(f"subrepresentation enumeration inspected more than {budget} candidates")
            parts[v] = W
            yield from rec(i + 1, parts)
        parts.pop(v, None)

    yield from rec(0, {})


def all_subreps(M: Representation, budget: int = DEFAULT_BUDGET) -> list[Subrep]:
    """Every subrepresentation, in canonical order (see :meth:`Subrep.sort_key`)."""
    return sorted(iter_subreps(M, budget), key=Subrep.sort_key)


def sub_as_rep(U: Subrep) -> tuple[Representation, Morphism]:
    """``U`` as a representation in its RREF bases, with the inclusion into the parent."""
    M = U.parent
    p = M.p
    dims = {v: U.parts[v].dim for v in M.quiver.vertices}
    maps = {}
    for a, s, t in M.quiver.arrows:
        Bs = U.parts[s].basis.data
        if dims[s] == 0 or dims[t] == 0:
            maps[a] = FpMatrix.zeros(dims[t], dims[s], p)
            continue
        imgs = (Bs @ M.maps[a].data.T) % p  # rows: images of the basis of U_s
        maps[a] = FpMatrix._wrap(np.ascontiguousarray(U.parts[t].coordinates(imgs).T) % p, p)
    R = Representation(M.quiver, p, dims, maps)
    inc = {v: FpMatrix._wrap(np.ascontiguousarray(U.parts[v].basis.data.T), p) for v in M.quiver.vertices}
    return R, Morphism(R, M, inc, check=False)


def image_subrep(f: Morphism) -> Subrep:
    """Image of a morphism as a subrepresentation of its target."""
    N = f.target
    parts = {v: image_of(Subspace.full(f.source.dims[v], N.p), f.blocks[v]) for v in N.quiver.vertices}
    return Subrep(N, parts, check=False)


def push_forward(V: Subrep, f: Morphism) -> Subrep:
    """Image of a subrepresentation of ``f.source`` in ``f.target``."""
    if V.parent != f.source:
        raise DimensionMismatchError("subrepresentation is not of the morphism's source")
    parts = {v: image_of(V.parts[v], f.blocks[v]) for v in f.target.quiver.vertices}
    return Subrep(f.target, parts, check=False)


def pull_back(V: Subrep, U: Subrep) -> Subrep:
    """For ``V ⊆ U`` (same parent), express ``V`` inside ``sub_as_rep(U)``."""
    _same_parent(U, V)
    if not U.contains(V):
        raise InvalidSubrepError("not a subrepresentation of the given one")
    R, _ = sub_as_rep(U)
    parts = {}
    for v in R.quiver.vertices:
        if V.parts[v].dim == 0:
            parts[v] = Subspace.zero(R.dims[v], R.p)
        else:
            parts[v] = Subspace.from_rows(U.parts[v].coordinates(V.parts[v].basis.data), R.dims[v], R.p)
    return Subrep(R, parts, check=False)


def maximal_subreps(M: Representation) -> list[Subrep]:
    """All maximal subrepresentations: kernels of the maps onto simple tops.

    Each one equals M away from a vertex v and is a hyperplane of M_v
    containing the radical there.
    """
    rad = radical(M)
    out = []
    for v in M.quiver.vertices:
        if rad[v].dim == M.dims[v]:
            continue
        for H in enumerate_superspaces(rad[v], M.dims[v] - 1):
            parts = {w: (H if w == v else Subspace.full(M.dims[w], M.p)) for w in M.quiver.vertices}
            out.append(Subrep(M, parts, check=False))
    return sorted(out, key=Subrep.sort_key)


def maximal_subreps_of(U: Subrep) -> list[Subrep]:
    """Maximal subrepresentations of ``U``, as subrepresentations of the parent."""
    R, inc = sub_as_rep(U)
    return sorted((push_forward(V, inc) for V in maximal_subreps(R)), key=Subrep.sort_key)


def indecomposable_proper_subreps(
    M: Representation, budget: int = DEFAULT_BUDGET, cap: int = DEFAULT_CAP
) -> list[Subrep]:
    out = []
    for U in all_subreps(M, budget):
        if U.is_zero() or not U.is_proper():
            continue
        if is_indecomposable(sub_as_rep(U)[0], cap=cap):
            out.append(U)
    return out


def subquotient(big: Subrep, small: Subrep) -> Representation:
    """``big / small`` for subrepresentations ``small ⊆ big`` of one parent."""
    R, _ = sub_as_rep(big)
    return quotient(R, pull_back(small, big))[0]


def subreps_within(U: Subrep, budget: int = DEFAULT_BUDGET) -> list[Subrep]:
    """All subrepresentations of the parent contained in ``U``."""
    R, inc = sub_as_rep(U)
    return sorted((push_forward(V, inc) for V in iter_subreps(R, budget)), key=Subrep.sort_key)


__all__ = [
    "Subrep",
    "all_subreps",
    "closure",
    "closure_of_vectors",
    "image_subrep",
    "indecomposable_proper_subreps",
    "iter_subreps",
    "maximal_subreps",
    "maximal_subreps_of",
    "pull_back",
    "push_forward",
    "sub_as_rep",
    "sub_intersect",
    "sub_sum",
    "subquotient",
    "subreps_within",
]
