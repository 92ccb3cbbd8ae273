"""The smallest Gabriel-Roiter measures of a quiver, certified from a finite registry.

Suppose every indecomposable of length ``<= L`` is registered and let ``J`` be
a candidate measure.  For an unregistered indecomposable ``Y`` take the last
filtration term ``X`` with ``|X| <= L``; the next term ``X'`` is longer than
``L`` and ``X ⊂ X'`` is a Gabriel-Roiter inclusion, so ``|X'|`` is at most a
successor bound ``succ(X)``.  If ``succ(X) <= L`` for every registered ``X``
with ``μ(X) < J``, then ``μ(X) >= J`` and hence ``μ(Y) > J``: no module of
length ``> L`` has measure ``<= J``.

Two successor bounds are offered: ``"pq"`` uses ``|X'| <= pq |X|``; ``"ar"``
uses that ``X'`` is a quotient of an indecomposable target of an irreducible
monomorphism from ``X``, so ``|X'|`` is at most the length of the middle term
of the almost split sequence starting at ``X``, which for a path algebra is
``|X| + |τ^{-1} X|`` (and a GR inclusion never starts at an injective).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InsufficientBoundError, InvalidParameterError
from ..quiverrep import injective_at, is_iso
from .bounds import algebra_bounds
from .engine import class_measure
from .measure import GRMeasure
from .registry import IndecRegistry

BOUND_MODES = ("pq", "ar")


@dataclass(frozen=True)
class TakeoffTerm:
    measure: GRMeasure
    classes: tuple[int, ...]
    labels: tuple[str, ...]


def is_injective_class(reg: IndecRegistry, j: int) -> bool:
    X = reg[j].rep
    return any(
        is_iso(X, injective_at(reg.quiver, v, reg.p), cap=reg.cap) is not None for v in reg.quiver.vertices
    )


def successor_bound(reg: IndecRegistry, j: int, mode: str = "pq") -> int:
    """Upper bound for ``|Y|`` over all Gabriel-Roiter inclusions ``X ⊂ Y`` with ``X`` in class ``j``."""
    if mode not in BOUND_MODES:
        raise InvalidParameterError(f"bound must be one of {BOUND_MODES}")
    if is_injective_class(reg, j):
        return 0
    X = reg[j].rep
    if mode == "pq":
        return algebra_bounds(reg.quiver, reg.p).pq * X.length
    from ..families.coxeter import tau_inverse_dim

    return X.length + sum(tau_inverse_dim(reg.quiver, X.dim_vector))


def takeoff_prefix(reg: IndecRegistry, count: int, bound: str = "pq") -> list[TakeoffTerm]:
    """The ``count`` smallest measures with the registered classes attaining them.

    Raises :class:`InsufficientBoundError` (with the length that would be
    needed) when the registry does not certify the prefix.
    """
    if count < 1:
        raise InvalidParameterError("count must be positive")
    L = reg.complete_up_to
    idx = reg.indices_up_to(L)
    mus = {j: class_measure(reg, j) for j in idx}
    distinct = sorted(set(mus.values()))
    if len(distinct) < count:
        raise InsufficientBoundError(f"only {len(distinct)} measures below length {L}", required=L + 1)
    last = distinct[count - 1]
    worst = 0
    for j in idx:
        if mus[j] < last:
            worst = max(worst, successor_bound(reg, j, bound))
    if worst > L:
        raise InsufficientBoundError(
            f"registry complete up to {L}; certifying {count} take-off measures needs {worst}", required=worst
        )
    out = []
    for I in distinct[:count]:
        js = tuple(j for j in idx if mus[j] == I)
        out.append(TakeoffTerm(I, js, tuple(reg[j].label for j in js)))
    return out
