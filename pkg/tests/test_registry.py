from __future__ import annotations

from collections import Counter

import pytest

from grmeasure import Quiver
from grmeasure.errors import BudgetExceededError, InconsistentInputError
from grmeasure.families import KRONECKER2, kronecker_indec_inventory, kronecker_regular, subspace_quiver
from grmeasure.grcore import register_indecomposables
from grmeasure.grcore.registry import InventoryItem
from grmeasure.quiverrep import is_iso, simple_at

K = KRONECKER2


def dim_counter(reg):
    return Counter(tuple(e.rep.dims[v] for v in reg.quiver.vertices) for e in reg)


def test_simples_only():
    for Q in (K, subspace_quiver(3)):
        reg = register_indecomposables(Q, 2, 1)
        assert len(reg) == len(Q.vertices)
        for v in Q.vertices:
            assert reg.find(simple_at(Q, v, 2)) is not None


def test_kronecker_length_three():
    reg = register_indecomposables(K, 2, 3)
    assert len(reg) == 7
    assert dim_counter(reg) == Counter({(1, 0): 1, (0, 1): 1, (1, 1): 3, (1, 2): 1, (2, 1): 1})


def test_kronecker_length_four():
    reg = register_indecomposables(K, 2, 4)
    c = dim_counter(reg)
    assert c[(2, 2)] == 4
    assert c[(1, 3)] == 0 and c[(3, 1)] == 0
    assert reg.find(kronecker_regular(2, "x^2+x+1", 1)) is not None
    for f in ("x", "x+1", "inf"):
        assert reg.find(kronecker_regular(2, f, 2)) is not None


@pytest.mark.parametrize("p,max_length", [(2, 2), (2, 3), (2, 4), (3, 3)])
def test_exhaustive_matches_inventory(p, max_length):
    reg = register_indecomposables(K, p, max_length)
    inv = kronecker_indec_inventory(p, max_length)
    assert len(reg) == len(inv)
    for it in inv:
        j = reg.find(it.rep)
        assert j is not None
        assert is_iso(reg[j].rep, it.rep) is not None


@pytest.mark.parametrize(
    "Q,max_length,count,primes",
    [
        (subspace_quiver(1), 3, 3, (2, 3)),
        (subspace_quiver(2), 4, 6, (2, 3)),
        (Quiver(("x", "y", "z"), (("f", "x", "y"), ("g", "z", "y"))), 4, 6, (2, 3)),
        (subspace_quiver(3), 6, 12, (2,)),
    ],
)
def test_dynkin_counts(Q, max_length, count, primes):
    """Finite type: one indecomposable per positive root, none past the longest root."""
    for p in primes:
        assert len(register_indecomposables(Q, p, max_length)) == count


def test_budget_exceeded():
    with pytest.raises(BudgetExceededError):
        register_indecomposables(K, 2, 6, budget=10)


def test_family_mode_rejects_duplicates():
    R = kronecker_regular(2, "x", 1)
    with pytest.raises(InconsistentInputError):
        register_indecomposables(K, 2, 2, mode="family", inventory=[InventoryItem(R, "a"), InventoryItem(R, "b")])


def test_family_mode_default_inventory():
    reg = register_indecomposables(K, 2, 5, mode="family")
    assert reg.complete_up_to == 5
    assert len(reg) == len(kronecker_indec_inventory(2, 5))
