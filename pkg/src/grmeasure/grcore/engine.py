"""Computing Gabriel-Roiter measures, submodules and filtrations.

Two independent routes are available:

* the lattice route enumerates every subrepresentation of ``M`` and runs the
  recursion directly on that lattice (any quiver, small modules);
* the class route uses a registry that is complete below ``|M|``: the
  indecomposable submodules of ``M`` are, up to isomorphism, exactly the
  registered classes admitting a monomorphism into ``M``, so the maximum runs
  over classes instead of subspaces.

Both rely on monotonicity (``V ⊆ W`` implies ``μ(V) <= μ(W)``), which lets the
lattice route take the maximum over maximal submodules only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .. import _accel
from ..config import DEFAULT_BUDGET, DEFAULT_CAP
from ..errors import CapExceededError, InsufficientBoundError, InvalidParameterError, NoGRSubmoduleError
from ..ffla import inverse_table
from ..quiverrep import (
    Representation,
    combine,
    hom_basis,
    is_indecomposable,
    pack_basis,
    search_morphism,
    socle_dims,
)
from ..sublattice import (
    Subrep,
    all_subreps,
    image_subrep,
    maximal_subreps_of,
    pull_back,
    push_forward,
    sub_as_rep,
)
from .measure import GRMeasure
from .registry import IndecRegistry

ENGINES = ("auto", "lattice", "classes")


# ---------------------------------------------------------------------------
# lattice route
# ---------------------------------------------------------------------------


class SubmoduleLattice:
    """All subrepresentations of one module with memoised measures."""

    def __init__(self, M: Representation, budget: int = DEFAULT_BUDGET, cap: int = DEFAULT_CAP):
        self.parent = M
        self.cap = cap
        self.subreps = all_subreps(M, budget)
        self._indec: dict[tuple, bool] = {}
        self._mu: dict[tuple, GRMeasure] = {}

    def __len__(self) -> int:
        return len(self.subreps)

    def is_indecomposable(self, U: Subrep) -> bool:
        k = U.key
        if k not in self._indec:
            self._indec[k] = (not U.is_zero()) and is_indecomposable(sub_as_rep(U)[0], cap=self.cap)
        return self._indec[k]

    def measure(self, U: Subrep) -> GRMeasure:
        k = U.key
        if k in self._mu:
            return self._mu[k]
        if U.is_zero():
            mu = GRMeasure()
        else:
            best = max((self.measure(V) for V in maximal_subreps_of(U)), default=GRMeasure())
            mu = best.with_top(U.length) if self.is_indecomposable(U) else best
        self._mu[k] = mu
        return mu

    def top_measure(self) -> GRMeasure:
        return self.measure(self.subreps[-1])

    def indecomposables(self, proper: bool = True) -> list[Subrep]:
        return [
            U
            for U in self.subreps
            if not U.is_zero() and (U.is_proper() or not proper) and self.is_indecomposable(U)
        ]

    def gr_submodules(self) -> list[Subrep]:
        whole = self.subreps[-1]
        if not self.is_indecomposable(whole):
            raise InvalidParameterError("Gabriel-Roiter submodules need an indecomposable module")
        if whole.length == 1:
            raise NoGRSubmoduleError("a simple module has no Gabriel-Roiter submodule")
        target = self.measure(whole).without_top()
        return [
            U
            for U in self.subreps
            if U.length == target.top and self.is_indecomposable(U) and self.measure(U) == target
        ]


@lru_cache(maxsize=64)
def lattice_of(M: Representation, budget: int = DEFAULT_BUDGET, cap: int = DEFAULT_CAP) -> SubmoduleLattice:
    return SubmoduleLattice(M, budget, cap)


# ---------------------------------------------------------------------------
# class route
# ---------------------------------------------------------------------------


def _dominated(small: tuple[int, ...], big: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(small, big))


def embeds(R: Representation, M: Representation, cap: int = DEFAULT_CAP) -> bool:
    """Whether some monomorphism ``R -> M`` exists."""
    if not _dominated(R.dim_vector, M.dim_vector):
        return False
    if not _dominated(socle_dims(R), socle_dims(M)):
        return False
    basis = hom_basis(R, M)
    return search_morphism(basis, _accel.MODE_MONO, cap=cap) is not None


def _embeds_cached(reg: IndecRegistry, j: int, M: Representation) -> bool:
    key = (j, M)
    hit = reg.embeds.get(key)
    if hit is None:
        hit = embeds(reg[j].rep, M, cap=reg.cap)
        with reg._lock:
            reg.embeds[key] = hit
    return hit


def _require_cover(reg: IndecRegistry, M: Representation) -> None:
    if not reg.accepts(M):
        raise InvalidParameterError("registry belongs to another quiver or prime")
    if not reg.covers(M.length - 1):
        raise InsufficientBoundError(
            f"registry is complete up to length {reg.complete_up_to}, need {M.length - 1}",
            required=M.length - 1,
        )


def _is_indec_via(reg: IndecRegistry, M: Representation) -> tuple[bool, int | None]:
    j = reg.find(M)
    if j is not None:
        return True, j
    if reg.covers(M.length):
        return False, None
    return is_indecomposable(M, cap=reg.cap), None


def class_measure(reg: IndecRegistry, j: int) -> GRMeasure:
    """Measure of the registered class ``j``."""
    e = reg[j]
    if e.measure is None:
        _require_cover(reg, e.rep)
        reg.set_measure(j, _best_below(reg, e.rep).with_top(e.length))
    return e.measure


def _best_below(reg: IndecRegistry, M: Representation) -> GRMeasure:
    best = GRMeasure()
    for j in reg.indices_up_to(M.length - 1):
        if _embeds_cached(reg, j, M):
            mu = class_measure(reg, j)
            if mu > best:
                best = mu
    return best


def measure_via_registry(reg: IndecRegistry, M: Representation) -> GRMeasure:
    if M.is_zero():
        return GRMeasure()
    cached = reg.rep_measures.get(M)
    if cached is not None:
        return cached
    indec, j = _is_indec_via(reg, M)
    if j is not None and reg[j].measure is not None:
        mu = reg[j].measure
    else:
        _require_cover(reg, M)
        best = _best_below(reg, M)
        mu = best.with_top(M.length) if indec else best
        if j is not None:
            reg.set_measure(j, mu)
    with reg._lock:
        reg.rep_measures[M] = mu
    return mu


def monomorphism_images(R: Representation, M: Representation, cap: int = DEFAULT_CAP) -> list[Subrep]:
    """Distinct images of all monomorphisms ``R -> M``."""
    basis = hom_basis(R, M)
    if not basis:
        return []
    p = M.p
    if p ** len(basis) > cap:
        raise CapExceededError(f"Hom space has {p}^{len(basis)} elements, above the cap {cap}")
    B, offs, rows, cols = pack_basis(basis)
    _, mask = _accel.combination_search(B, offs, rows, cols, p, inverse_table(p), _accel.MODE_MONO, False)
    seen = {}
    for idx in mask.nonzero()[0]:
        U = image_subrep(combine(basis, _accel.digits(int(idx), p, len(basis))))
        seen.setdefault(U.key, U)
    return sorted(seen.values(), key=Subrep.sort_key)


def gr_submodules_via_registry(reg: IndecRegistry, M: Representation) -> list[Subrep]:
    indec, _ = _is_indec_via(reg, M)
    if not indec:
        raise InvalidParameterError("Gabriel-Roiter submodules need an indecomposable module")
    if M.length == 1:
        raise NoGRSubmoduleError("a simple module has no Gabriel-Roiter submodule")
    target = measure_via_registry(reg, M).without_top()
    out: dict[tuple, Subrep] = {}
    for j in reg.indices_up_to(M.length - 1):
        if reg[j].length != target.top or not _embeds_cached(reg, j, M):
            continue
        if class_measure(reg, j) != target:
            continue
        for U in monomorphism_images(reg[j].rep, M, cap=reg.cap):
            out.setdefault(U.key, U)
    return sorted(out.values(), key=Subrep.sort_key)


def gr_classes(reg: IndecRegistry, M: Representation) -> list[int]:
    """Registered classes isomorphic to a Gabriel-Roiter submodule of ``M``."""
    target = measure_via_registry(reg, M).without_top()
    return [
        j
        for j in reg.indices_up_to(M.length - 1)
        if reg[j].length == target.top and _embeds_cached(reg, j, M) and class_measure(reg, j) == target
    ]


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------


def _pick(M: Representation, reg: IndecRegistry | None, engine: str) -> str:
    if engine not in ENGINES:
        raise InvalidParameterError(f"unknown engine {engine!r}")
    if engine == "auto":
        if reg is not None and reg.accepts(M) and reg.covers(M.length - 1):
            return "classes"
        return "lattice"
    if engine == "classes" and reg is None:
        raise InvalidParameterError("the class engine needs a registry")
    return engine


def gr_measure(
    M: Representation,
    reg: IndecRegistry | None = None,
    *,
    engine: str = "auto",
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
) -> GRMeasure:
    """The Gabriel-Roiter measure of ``M`` (empty for the zero module)."""
    if M.is_zero():
        return GRMeasure()
    if _pick(M, reg, engine) == "classes":
        return measure_via_registry(reg, M)
    return lattice_of(M, budget, cap).top_measure()


def gr_submodules(
    M: Representation,
    reg: IndecRegistry | None = None,
    *,
    engine: str = "auto",
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
) -> list[Subrep]:
    """All Gabriel-Roiter submodules of an indecomposable non-simple ``M``, canonically sorted."""
    if M.is_zero():
        raise InvalidParameterError("the zero module has no Gabriel-Roiter submodule")
    if _pick(M, reg, engine) == "classes":
        return gr_submodules_via_registry(reg, M)
    return lattice_of(M, budget, cap).gr_submodules()


def subrep_measure(U: Subrep, reg: IndecRegistry | None = None, **kw) -> GRMeasure:
    return gr_measure(sub_as_rep(U)[0], reg, **kw)


def is_gr_inclusion(U: Subrep, reg: IndecRegistry | None = None, **kw) -> bool:
    """``U`` is a Gabriel-Roiter submodule of its (indecomposable) parent."""
    Y = U.parent
    if U.is_zero() or not U.is_proper():
        return False
    R = sub_as_rep(U)[0]
    if not is_indecomposable(R, cap=kw.get("cap", DEFAULT_CAP)):
        return False
    mu_y = gr_measure(Y, reg, **kw)
    if mu_y.top != Y.length:  # parent decomposable
        raise InvalidParameterError("Gabriel-Roiter inclusions need an indecomposable parent")
    return gr_measure(R, reg, **kw) == mu_y.without_top()


@dataclass(frozen=True)
class GRFiltration:
    chain: tuple[Subrep, ...]

    @property
    def parent(self) -> Representation:
        return self.chain[-1].parent

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(U.length for U in self.chain)

    @property
    def measure(self) -> GRMeasure:
        return GRMeasure(self.lengths)

    def __len__(self) -> int:
        return len(self.chain)

    def validate(self, reg: IndecRegistry | None = None, **kw) -> bool:
        """First term simple, every step a Gabriel-Roiter inclusion, top term the whole module."""
        if not self.chain or self.chain[0].length != 1 or self.chain[-1].is_proper():
            return False
        for small, big in zip(self.chain, self.chain[1:]):
            if not big.contains(small) or small.length >= big.length:
                return False
            if not is_gr_inclusion(pull_back(small, big), reg, **kw):
                return False
        return True


def _gr_subs_in_parent(U: Subrep, reg: IndecRegistry | None, kw: dict) -> list[Subrep]:
    R, inc = sub_as_rep(U)
    return sorted((push_forward(V, inc) for V in gr_submodules(R, reg, **kw)), key=Subrep.sort_key)


def gr_filtration(M: Representation, reg: IndecRegistry | None = None, **kw) -> GRFiltration:
    """One Gabriel-Roiter filtration, taking the canonically least GR submodule at each step."""
    if not is_indecomposable(M, cap=kw.get("cap", DEFAULT_CAP)):
        raise InvalidParameterError("filtrations are defined for indecomposable modules")
    U = Subrep.full(M)
    chain = [U]
    while U.length > 1:
        U = _gr_subs_in_parent(U, reg, kw)[0]
        chain.append(U)
    return GRFiltration(tuple(reversed(chain)))


def all_gr_filtrations(M: Representation, reg: IndecRegistry | None = None, **kw) -> Iterator[GRFiltration]:
    """Every Gabriel-Roiter filtration of an indecomposable ``M``."""
    if not is_indecomposable(M, cap=kw.get("cap", DEFAULT_CAP)):
        raise InvalidParameterError("filtrations are defined for indecomposable modules")

    def rec(U: Subrep) -> Iterator[tuple[Subrep, ...]]:
        if U.length == 1:
            yield (U,)
            return
        for V in _gr_subs_in_parent(U, reg, kw):
            for tail in rec(V):
                yield tail + (U,)

    for chain in rec(Subrep.full(M)):
        yield GRFiltration(chain)


def is_piling(U: Subrep, reg: IndecRegistry | None = None, **kw) -> bool:
    """Prefix test: ``μ(U)`` equals ``μ(Y)`` cut at ``|U|``."""
    R = sub_as_rep(U)[0]
    if U.is_zero() or not is_indecomposable(R, cap=kw.get("cap", DEFAULT_CAP)):
        raise InvalidParameterError("piling is defined for indecomposable submodules")
    return gr_measure(U.parent, reg, **kw).starts_with(gr_measure(R, reg, **kw))


def is_piling_oracle(U: Subrep, budget: int = DEFAULT_BUDGET, cap: int = DEFAULT_CAP) -> bool:
    """Definition: ``μ(V) <= μ(U)`` for every indecomposable ``V ⊆ Y`` with ``|V| <= |U|``."""
    L = lattice_of(U.parent, budget, cap)
    if U.is_zero() or not L.is_indecomposable(U):
        raise InvalidParameterError("piling is defined for indecomposable submodules")
    mu_u = L.measure(U)
    for V in L.subreps:
        if V.length > U.length:
            break
        if V.is_zero() or not L.is_indecomposable(V):
            continue
        if L.measure(V) > mu_u:
            return False
    return True
