"""A catalog of indecomposable isomorphism classes with cached invariants."""

from __future__ import annotations

import itertools
import threading
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from ..config import DEFAULT_BUDGET, DEFAULT_CAP
from ..errors import BudgetExceededError, InconsistentInputError, InvalidParameterError
from ..quiverrep import (
    Quiver,
    Representation,
    hom_dim,
    is_connected_support,
    is_indecomposable,
    is_iso,
    socle_dims,
    top_dims,
)
from .measure import GRMeasure


class InventoryItem(NamedTuple):
    rep: Representation
    label: str
    kind: str | None = None


@dataclass
class RegEntry:
    rep: Representation
    label: str
    kind: str | None
    dim_vector: tuple[int, ...]
    end_dim: int
    soc: tuple[int, ...]
    top: tuple[int, ...]
    measure: GRMeasure | None = field(default=None, repr=False)

    @property
    def length(self) -> int:
        return self.rep.length

    @property
    def invariants(self) -> tuple:
        return (self.dim_vector, self.end_dim, self.soc, self.top)


def rep_invariants(M: Representation) -> tuple:
    return (M.dim_vector, hom_dim(M, M), socle_dims(M), top_dims(M))


class IndecRegistry:
    """Pairwise non-isomorphic indecomposables of one quiver over one prime field.

    ``complete_up_to`` records the largest length ``L`` for which every
    indecomposable of length ``<= L`` is known to be registered.  Reads are
    lock-free; inserts and cache writes take a lock.
    """

    def __init__(self, quiver: Quiver, p: int, *, cap: int = DEFAULT_CAP):
        self.quiver = quiver
        self.p = p
        self.cap = cap
        self.entries: list[RegEntry] = []
        self.complete_up_to = 0
        self._by_inv: dict[tuple, list[int]] = defaultdict(list)
        self._lock = threading.RLock()
        # caches used by the class-based measure engine
        self.rep_measures: dict[Representation, GRMeasure] = {}
        self.embeds: dict[tuple[int, Representation], bool] = {}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[RegEntry]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> RegEntry:
        return self.entries[i]

    def accepts(self, M: Representation) -> bool:
        return M.quiver == self.quiver and M.p == self.p

    def covers(self, n: int) -> bool:
        """Every indecomposable of length ``<= n`` is registered."""
        return n <= self.complete_up_to

    def mark_complete(self, n: int) -> None:
        with self._lock:
            self.complete_up_to = max(self.complete_up_to, n)

    def indices_up_to(self, n: int) -> list[int]:
        return [i for i, e in enumerate(self.entries) if e.length <= n]

    def find(self, M: Representation, inv: tuple | None = None) -> int | None:
        """Index of the registered class isomorphic to ``M``, if any."""
        if not self.accepts(M) or M.is_zero():
            return None
        inv = rep_invariants(M) if inv is None else inv
        for i in self._by_inv.get(inv, ()):
            if is_iso(self.entries[i].rep, M, cap=self.cap) is not None:
                return i
        return None

    def insert(
        self,
        M: Representation,
        label: str | None = None,
        kind: str | None = None,
        *,
        check_indecomposable: bool = True,
    ) -> tuple[int, bool]:
        """Register ``M``; returns ``(index, newly_added)``."""
        if not self.accepts(M):
            raise InconsistentInputError("representation of another quiver or prime")
        if check_indecomposable and (M.is_zero() or not is_indecomposable(M, cap=self.cap)):
            raise InconsistentInputError("only indecomposables can be registered")
        inv = rep_invariants(M)
        with self._lock:
            found = self.find(M, inv)
            if found is not None:
                return found, False
            idx = len(self.entries)
            self.entries.append(
                RegEntry(M, label or f"X{idx}", kind, inv[0], inv[1], inv[2], inv[3])
            )
            self._by_inv[inv].append(idx)
            return idx, True

    def set_measure(self, i: int, mu: GRMeasure) -> None:
        with self._lock:
            self.entries[i].measure = mu

    def summary(self) -> list[tuple[str, tuple[int, ...], int]]:
        return [(e.label, e.rep.dim_vector_report(), e.length) for e in self.entries]


def _dim_vectors(n_vertices: int, max_length: int) -> Iterator[tuple[int, ...]]:
    for total in range(1, max_length + 1):
        for combo in itertools.combinations_with_replacement(range(n_vertices), total):
            d = [0] * n_vertices
            for v in combo:
                d[v] += 1
            yield tuple(d)


def dim_vectors_up_to(quiver: Quiver, max_length: int) -> list[tuple[int, ...]]:
    """All nonzero dimension vectors of total ``<= max_length`` (vertex order)."""
    return sorted(set(_dim_vectors(len(quiver.vertices), max_length)), key=lambda d: (sum(d), d))


def _all_reps(quiver: Quiver, p: int, dims: tuple[int, ...]) -> Iterator[Representation]:
    dmap = dict(zip(quiver.vertices, dims))
    shapes = [(a, dmap[t], dmap[s]) for a, s, t in quiver.arrows]
    sizes = [r * c for _, r, c in shapes]
    total = sum(sizes)
    for entries in itertools.product(range(p), repeat=total):
        vec = np.array(entries, dtype=np.int64)
        maps = {}
        pos = 0
        for a, r, c in shapes:
            maps[a] = vec[pos : pos + r * c].reshape(r, c)
            pos += r * c
        yield Representation(quiver, p, dmap, maps)


def register_indecomposables(
    quiver: Quiver,
    p: int,
    max_length: int,
    reg: IndecRegistry | None = None,
    *,
    mode: str = "exhaustive",
    inventory: Iterable[InventoryItem | Representation] | None = None,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
) -> IndecRegistry:
    """Fill a registry with every indecomposable of length ``<= max_length``.

    ``mode="exhaustive"`` runs through every tuple of arrow matrices for every
    dimension vector (``budget`` bounds the number of tuples).
    ``mode="family"`` inserts a known classification (``inventory``; for the
    Kronecker quiver it defaults to the explicit preprojective / preinjective /
    regular list) and checks the items are pairwise non-isomorphic.
    """
    if reg is None:
        reg = IndecRegistry(quiver, p, cap=cap)
    elif reg.quiver != quiver or reg.p != p:
        raise InvalidParameterError("registry belongs to another quiver or prime")
    if mode == "exhaustive":
        dvs = dim_vectors_up_to(quiver, max_length)
        needed = 0
        for d in dvs:
            dm = dict(zip(quiver.vertices, d))
            needed += p ** sum(dm[s] * dm[t] for _, s, t in quiver.arrows)
        if needed > budget:
            raise BudgetExceededError(
                f"exhaustive classification needs {needed} matrix tuples (budget {budget}); use family mode"
            )
        for d in dvs:
            for M in _all_reps(quiver, p, d):
                if not is_connected_support(M):
                    continue
                if is_indecomposable(M, cap=cap):
                    reg.insert(M, check_indecomposable=False)
        reg.mark_complete(max_length)
        return reg
    if mode == "family":
        if inventory is None:
            from ..families.kronecker import is_kronecker2, kronecker_indec_inventory

            if not is_kronecker2(quiver):
                raise InvalidParameterError("family mode needs an inventory for this quiver")
            inventory = kronecker_indec_inventory(p, max_length, quiver=quiver)
        items = [it if isinstance(it, InventoryItem) else InventoryItem(it, None) for it in inventory]
        for it in items:
            if it.rep.length > max_length:
                continue
            _, new = reg.insert(it.rep, it.label, it.kind)
            if not new:
                raise InconsistentInputError(f"inventory item {it.label} duplicates a registered class")
        reg.mark_complete(max_length)
        return reg
    raise InvalidParameterError(f"unknown registration mode {mode!r}")


def registry_from_items(quiver: Quiver, p: int, items: Sequence[InventoryItem], complete_up_to: int) -> IndecRegistry:
    return register_indecomposables(quiver, p, complete_up_to, mode="family", inventory=items)
