"""Length bounds along Gabriel-Roiter inclusions and checks on single inclusions."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .. import _accel
from ..config import DEFAULT_BUDGET, DEFAULT_CAP
from ..errors import CapExceededError, InconsistentInputError, InsufficientBoundError, InvalidParameterError
from ..ffla import Subspace, inverse_table, subspace_sum
from ..quiverrep import (
    Morphism,
    Quiver,
    end_radical_basis,
    hom_basis,
    injective_at,
    is_iso,
    is_iso_morphism,
    pack_basis,
    projective_at,
)
from ..sublattice import Subrep, iter_subreps, sub_as_rep
from .engine import gr_filtration
from .registry import IndecRegistry


@dataclass(frozen=True)
class AlgebraBounds:
    """Largest lengths of indecomposable projectives (``p_bound``) and injectives (``q_bound``)."""

    p_bound: int
    q_bound: int

    @property
    def pq(self) -> int:
        return self.p_bound * self.q_bound


def algebra_bounds(quiver: Quiver, p: int = 2) -> AlgebraBounds:
    pb = max(projective_at(quiver, v, p).length for v in quiver.vertices)
    qb = max(injective_at(quiver, v, p).length for v in quiver.vertices)
    return AlgebraBounds(pb, qb)


def check_gr_bound(U: Subrep, bounds: AlgebraBounds) -> bool:
    """``|Y| <= pq |X|`` for the inclusion ``X = U ⊂ Y = U.parent``."""
    return U.parent.length <= bounds.pq * U.length


def submodule_interval_check(M, a: int, reg: IndecRegistry | None = None, **kw) -> Subrep:
    """An indecomposable submodule of ``M`` with length in ``[a+1, pq*a]``.

    Take a Gabriel-Roiter filtration and the first term longer than ``a``.
    """
    if not 1 <= a < M.length:
        raise InvalidParameterError(f"need 1 <= a < |M| = {M.length}")
    bounds = algebra_bounds(M.quiver, M.p)
    chain = gr_filtration(M, reg, **kw).chain
    i = max(k for k, U in enumerate(chain) if U.length <= a)
    U = chain[i + 1]
    if not a + 1 <= U.length <= bounds.pq * a:
        raise InconsistentInputError(f"filtration term of length {U.length} outside [{a + 1}, {bounds.pq * a}]")
    return U


def _mono_mask(basis: list[Morphism], cap: int) -> np.ndarray:
    p = basis[0].source.p
    if p ** len(basis) > cap:
        raise CapExceededError(f"Hom space has {p}^{len(basis)} elements, above the cap {cap}")
    B, offs, rows, cols = pack_basis(basis)
    _, mask = _accel.combination_search(B, offs, rows, cols, p, inverse_table(p), _accel.MODE_MONO, False)
    return mask


def sing_set(U: Subrep, cap: int = DEFAULT_CAP) -> tuple[list[Morphism], np.ndarray]:
    """Basis of Hom(X, Y) for ``X = U`` and ``Y = U.parent``, and the coefficient vectors of its non-monomorphisms."""
    X, _ = sub_as_rep(U)
    basis = hom_basis(X, U.parent)
    if not basis:
        return basis, np.zeros((1, 0), dtype=np.int64)
    mask = _mono_mask(basis, cap)
    idx = np.flatnonzero(mask == 0).astype(np.int64)
    return basis, _accel._digits_np(idx, X.p, len(basis))


def sing_additivity_check(U: Subrep, cap: int = DEFAULT_CAP) -> bool:
    """The non-monomorphisms ``X -> Y`` are closed under addition.

    The set contains 0 and is closed under scalars, so it is closed under
    addition exactly when it is a subspace, i.e. when its size is
    ``p ** rank(span)``.
    """
    basis, sing = sing_set(U, cap)
    if not basis:
        return True
    p = U.parent.p
    span = Subspace._from_array(sing % p, len(basis), p)
    return sing.shape[0] == p**span.dim


class Verdict(enum.Enum):
    REDUCIBLE = "reducible"
    INCONCLUSIVE = "inconclusive"


def _rad_basis(A, B, iso_ab: Morphism | None, cap: int) -> list[Morphism] | None:
    """Basis of rad(A, B); None when it cannot be computed within ``cap``."""
    if iso_ab is None:
        return hom_basis(A, B)
    try:
        J = end_radical_basis(A, cap)
    except CapExceededError:
        return None
    return [iso_ab @ j for j in J]


def is_irreducible_bounded(f: Morphism, reg: IndecRegistry, length_cap: int, cap: int = DEFAULT_CAP) -> Verdict:
    """REDUCIBLE when ``f`` factors as a sum of radical maps through registered modules of length ``<= length_cap``.

    A positive irreducibility verdict is never produced: intermediate modules
    are not bounded in general.
    """
    X, Y = f.source, f.target
    if f.is_zero():
        return Verdict.REDUCIBLE
    if is_iso_morphism(f):
        raise InvalidParameterError("isomorphisms are not in the radical")
    if not reg.covers(length_cap):
        raise InsufficientBoundError(
            f"registry complete up to {reg.complete_up_to}, need {length_cap}", required=length_cap
        )
    p = X.p
    target = f.flat()
    rows = []
    for e in reg:
        if e.length > length_cap:
            continue
        Z = e.rep
        rxz = _rad_basis(X, Z, is_iso(X, Z, cap=cap), cap)
        rzy = _rad_basis(Z, Y, is_iso(Z, Y, cap=cap), cap)
        if not rxz or not rzy:
            continue
        for a in rxz:
            for b in rzy:
                rows.append((b @ a).flat())
    if not rows:
        return Verdict.INCONCLUSIVE
    span = Subspace._from_array(np.vstack(rows) % p, target.size, p)
    return Verdict.REDUCIBLE if span.contains_vectors(target) else Verdict.INCONCLUSIVE


def complement_length_check(U: Subrep, budget: int = DEFAULT_BUDGET) -> bool:
    """Every submodule ``Y'`` with ``X + Y' = Y`` has ``|Y'| > |Y| - |X|`` (``X = U``, ``Y = U.parent``)."""
    Y = U.parent
    bound = Y.length - U.length
    for V in iter_subreps(Y, budget):
        if V.length > bound:
            continue
        if all(subspace_sum(U.parts[v], V.parts[v]).is_full() for v in Y.quiver.vertices):
            return False
    return True

